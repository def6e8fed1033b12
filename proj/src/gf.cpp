#include "conorbit/gf.hpp"

#include <algorithm>

namespace conorbit {
namespace {

// dense coefficient polynomials over F_p, ascending degree
using Poly = std::vector<int>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b in place, b monic
Poly poly_mod(Poly a, const Poly& b, int64_t p) {
    int db = static_cast<int>(b.size()) - 1;
    for (int da = static_cast<int>(a.size()) - 1; da >= db; --da) {
        int64_t c = a[static_cast<size_t>(da)];
        if (c != 0) {
            for (int i = 0; i <= db; ++i) {
                int64_t v = a[static_cast<size_t>(da - db + i)] - c * b[static_cast<size_t>(i)];
                a[static_cast<size_t>(da - db + i)] = static_cast<int>(((v % p) + p) % p);
            }
        }
        a.pop_back();
    }
    trim(a);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Poly& mod, int64_t p) {
    if (a.empty() || b.empty()) return {};
    Poly prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = static_cast<int>((prod[i + j] + int64_t(a[i]) * b[j]) % p);
        }
    }
    return poly_mod(std::move(prod), mod, p);
}

Poly poly_pow(Poly base, int64_t e, const Poly& mod, int64_t p) {
    Poly result{1};
    while (e > 0) {
        if (e & 1) result = poly_mul(result, base, mod, p);
        base = poly_mul(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

// decode candidate index into monic degree-d coefficients, low-degree-first
// lexicographic order (c0 most significant)
Poly decode_candidate(int64_t val, int d, int64_t p) {
    Poly f(static_cast<size_t>(d) + 1, 0);
    f[static_cast<size_t>(d)] = 1;
    for (int i = 0; i < d; ++i) {
        int64_t place = 1;
        for (int j = 0; j < d - 1 - i; ++j) place *= p;
        f[static_cast<size_t>(i)] = static_cast<int>(val / place);
        val %= place;
    }
    return f;
}

bool divisible(const Poly& f, const Poly& g, int64_t p) { return poly_mod(f, g, p).empty(); }

// all monic irreducibles of degree 1..dmax, by trial division
std::vector<std::vector<Poly>> irreducibles_upto(int dmax, int64_t p) {
    std::vector<std::vector<Poly>> by_deg(static_cast<size_t>(dmax) + 1);
    for (int d = 1; d <= dmax; ++d) {
        int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (int64_t val = 0; val < count; ++val) {
            Poly f = decode_candidate(val, d, p);
            bool irred = true;
            for (int dd = 1; dd <= d / 2 && irred; ++dd)
                for (const Poly& g : by_deg[static_cast<size_t>(dd)])
                    if (divisible(f, g, p)) {
                        irred = false;
                        break;
                    }
            if (irred) by_deg[static_cast<size_t>(d)].push_back(std::move(f));
        }
    }
    return by_deg;
}

Poly smallest_irreducible(int64_t p, int N) {
    if (N == 1) return Poly{0, 1}; // modulus x; the quotient is F_p itself
    auto by_deg = irreducibles_upto(N / 2, p);
    int64_t count = 1;
    for (int i = 0; i < N; ++i) count *= p;
    for (int64_t val = 0; val < count; ++val) {
        Poly f = decode_candidate(val, N, p);
        bool irred = true;
        for (int dd = 1; dd <= N / 2 && irred; ++dd)
            for (const Poly& g : by_deg[static_cast<size_t>(dd)])
                if (divisible(f, g, p)) {
                    irred = false;
                    break;
                }
        if (irred) return f;
    }
    fail(errc::invalid_parameter, "no irreducible polynomial found"); // unreachable
}

int64_t pack(const Poly& a, int64_t p, int N) {
    int64_t v = 0;
    for (int i = N - 1; i >= 0; --i) {
        int c = i < static_cast<int>(a.size()) ? a[static_cast<size_t>(i)] : 0;
        v = v * p + c;
    }
    return v;
}

Poly unpack(int64_t v, int64_t p, int N) {
    Poly a(static_cast<size_t>(N), 0);
    for (int i = 0; i < N; ++i) {
        a[static_cast<size_t>(i)] = static_cast<int>(v % p);
        v /= p;
    }
    trim(a);
    return a;
}

} // namespace

FieldCtx::FieldCtx(int64_t p, int N, int64_t cap) : p_(p), N_(N), subfield_q_(0) {
    require(is_prime(p), errc::not_prime, "field characteristic must be prime");
    require(N >= 1, errc::invalid_parameter, "extension degree must be >= 1");
    size_ = checked_pow(p, N, cap);
    subfield_q_ = p;
    modulus_ = smallest_irreducible(p, N);

    const int64_t n1 = size_ - 1;
    // canonical primitive element: smallest packed value of full order
    int64_t gen_packed = 1;
    if (size_ > 2) {
        auto factors = factorize(n1);
        for (int64_t cand = 2; cand < size_; ++cand) {
            Poly c = unpack(cand, p, N);
            bool primitive = true;
            for (auto [ell, e] : factors) {
                Poly x = poly_pow(c, n1 / ell, modulus_, p);
                if (x.size() == 1 && x[0] == 1) {
                    primitive = false;
                    break;
                }
            }
            if (primitive) {
                gen_packed = cand;
                break;
            }
        }
    }

    exp_packed_.assign(static_cast<size_t>(n1), 0);
    log_of_packed_.assign(static_cast<size_t>(size_), -1);
    Poly g = unpack(gen_packed, p, N);
    Poly x{1};
    for (int64_t i = 0; i < n1; ++i) {
        int64_t packed = pack(x, p, N);
        exp_packed_[static_cast<size_t>(i)] = packed;
        log_of_packed_[static_cast<size_t>(packed)] = i;
        x = poly_mul(x, g, modulus_, p);
    }

    zech_.assign(static_cast<size_t>(n1), -1);
    for (int64_t i = 0; i < n1; ++i) {
        // packed add of 1: bump the constant digit mod p
        int64_t v = exp_packed_[static_cast<size_t>(i)];
        int64_t c0 = v % p;
        int64_t s = v - c0 + (c0 + 1) % p;
        zech_[static_cast<size_t>(i)] = s == 0 ? -1 : static_cast<int32_t>(log_of_packed_[static_cast<size_t>(s)]);
    }
}

void FieldCtx::set_subfield(int64_t q) {
    require(q >= 2 && (size_ - 1) % (q - 1) == 0, errc::bad_subfield_size,
            "field has no subfield of size " + std::to_string(q));
    // q must be a power of p with {x : x^q = x} of size exactly q
    int64_t t = q;
    while (t % p_ == 0) t /= p_;
    require(t == 1, errc::bad_subfield_size, "subfield size is not a power of the characteristic");
    subfield_q_ = q;
}

FieldCtx build_field(int64_t p, int N, int64_t cap) { return FieldCtx(p, N, cap); }

RootSystem make_root_system(const FieldCtx& ctx, int64_t q, FieldElem lambda, int64_t n) {
    require(!lambda.is_zero(), errc::zero_element, "lambda must be nonzero");
    require(ctx.in_subfield(lambda, q), errc::bad_subfield_size, "lambda outside the base subfield");
    require(std::gcd(n, q) == 1, errc::not_coprime, "gcd(n, q) must be 1");
    const int64_t r = ctx.element_order(lambda);
    const int64_t qm1 = ctx.order_of_group();
    require(qm1 % (r * n) == 0, errc::incompatible_order, "rn does not divide q^m - 1");

    // smallest v with gcd(v, q^m-1)=1 and (g^v)^((q^m-1)/r) = lambda;
    // equivalently v = lambda.log / ((q^m-1)/r) mod r, lifted to a unit.
    FieldElem omega = ctx.gen();
    for (int64_t v = 1;; ++v) {
        if (std::gcd(v, qm1) != 1) continue;
        FieldElem cand = ctx.from_log(v);
        if (ctx.pow(cand, qm1 / r) == lambda) {
            omega = cand;
            break;
        }
    }

    RootSystem roots;
    roots.q = q;
    roots.n = n;
    roots.r = r;
    roots.lambda = lambda;
    roots.omega = omega;
    roots.zeta = ctx.pow(omega, qm1 / (r * n));
    roots.xi = q == 2 ? ctx.one() : ctx.pow(omega, qm1 / (q - 1));
    return roots;
}

} // namespace conorbit
