#ifndef CONORBIT_TEST_HELPERS_HPP
#define CONORBIT_TEST_HELPERS_HPP

#include <random>
#include <vector>

#include "conorbit/code.hpp"
#include "conorbit/instance.hpp"

namespace conorbit::test {

inline Codeword random_codeword(const FieldCtx& ctx, const Code& code, std::mt19937& rng) {
    const int64_t n = code.spec.n, q = code.spec.q;
    Codeword w(static_cast<size_t>(n), kZero);
    for (const Codeword& row : code.genmatrix) {
        int64_t d = static_cast<int64_t>(rng() % static_cast<uint32_t>(q));
        if (d == 0) continue;
        FieldElem f = ctx.pow(ctx.subfield_generator(), d - 1);
        for (size_t j = 0; j < w.size(); ++j) w[j] = ctx.add(w[j], ctx.mul(f, row[j]));
    }
    return w;
}

// remainder of (x^n - lambda) modulo g, both over the big field
inline bool genpoly_divides_xn_minus_lambda(const FieldCtx& ctx, const RootSystem& roots,
                                            const std::vector<FieldElem>& g) {
    std::vector<FieldElem> rem(static_cast<size_t>(roots.n) + 1, kZero);
    rem[0] = ctx.neg(roots.lambda);
    rem[static_cast<size_t>(roots.n)] = ctx.one();
    const int dg = static_cast<int>(g.size()) - 1;
    for (int d = static_cast<int>(rem.size()) - 1; d >= dg; --d) {
        FieldElem c = rem[static_cast<size_t>(d)];
        if (c.is_zero()) continue;
        // g is monic
        for (int i = 0; i <= dg; ++i)
            rem[static_cast<size_t>(d - dg + i)] =
                ctx.sub(rem[static_cast<size_t>(d - dg + i)], ctx.mul(c, g[static_cast<size_t>(i)]));
    }
    for (FieldElem c : rem)
        if (!c.is_zero()) return false;
    return true;
}

} // namespace conorbit::test

#endif
