#include "conorbit/instance.hpp"

namespace conorbit {

int64_t parse_lambda_exp(const std::string& lambda, int64_t q) {
    if (lambda == "1") return 0;
    if (lambda == "-1") {
        if (q % 2 == 0) return 0; // -1 = 1 in characteristic 2
        return (q - 1) / 2;
    }
    if (lambda.rfind("xi^", 0) == 0) {
        int64_t j = 0;
        try {
            size_t pos = 0;
            j = std::stoll(lambda.substr(3), &pos);
            require(pos == lambda.size() - 3, errc::invalid_parameter, "bad xi^J exponent");
        } catch (const std::exception&) {
            fail(errc::invalid_parameter, "cannot parse lambda '" + lambda + "'");
        }
        int64_t mod = q - 1 > 0 ? q - 1 : 1;
        return ((j % mod) + mod) % mod;
    }
    fail(errc::invalid_parameter, "lambda must be one of \"1\", \"-1\", \"xi^J\"");
}

Instance make_instance(int64_t q, int64_t n, int64_t lambda_exp, int64_t field_cap) {
    Instance inst;
    auto [p, e] = prime_power_split(q);
    inst.q = q;
    inst.p = p;
    inst.e = e;
    inst.n = n;
    require(n >= 1, errc::invalid_parameter, "n must be >= 1");
    require(std::gcd(n, q) == 1, errc::not_coprime, "gcd(n, q) must be 1");
    int64_t mod = q > 2 ? q - 1 : 1;
    inst.lambda_exp = ((lambda_exp % mod) + mod) % mod;
    inst.r = inst.lambda_exp == 0 ? 1 : (q - 1) / std::gcd(inst.lambda_exp, q - 1);
    inst.rn = inst.r * n;
    require(inst.rn > 1, errc::invalid_parameter, "rn must exceed 1 (take n > 1 or lambda != 1)");
    inst.m = ord_mod(q, inst.rn);
    require(inst.m <= 62, errc::cap_exceeded, "q^m exceeds any configurable field cap");
    inst.N = static_cast<int>(inst.m) * e;

    inst.ctx = std::make_shared<FieldCtx>(p, inst.N, field_cap);
    inst.ctx->set_subfield(q);
    FieldElem lambda = inst.ctx->pow(inst.ctx->subfield_generator(), inst.lambda_exp);
    inst.roots = make_root_system(*inst.ctx, q, lambda, n);
    inst.table = cyclotomic_cosets(q, inst.r, n);
    return inst;
}

} // namespace conorbit
