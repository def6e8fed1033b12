#ifndef CONORBIT_GF_HPP
#define CONORBIT_GF_HPP

// Extension field F_{p^N} realized once via discrete-log (Zech) tables.
// The base field F_q of the codes under study is always the designated
// subfield of this one context; there is no separate small-field type.
//
// Element encoding: ZERO, or the discrete log in Z_{p^N-1} relative to the
// canonical primitive element g (the packed-value-smallest element of full
// multiplicative order). Multiplication is index addition, addition is one
// Zech lookup.

#include <cstdint>
#include <string>
#include <vector>

#include "conorbit/errors.hpp"
#include "conorbit/intmath.hpp"

namespace conorbit {

inline constexpr int64_t kDefaultFieldCap = int64_t(1) << 22;

struct FieldElem {
    // -1 encodes the zero element, otherwise a log in [0, p^N-1).
    int64_t log = -1;

    bool is_zero() const { return log < 0; }
    friend bool operator==(FieldElem a, FieldElem b) { return a.log == b.log; }
    friend bool operator!=(FieldElem a, FieldElem b) { return a.log != b.log; }
};

inline constexpr FieldElem kZero{-1};

class FieldCtx {
  public:
    // Builds F_{p^N}. The modulus is the lexicographically smallest monic
    // irreducible of degree N over F_p (coefficients compared low-degree
    // first), so identical (p, N) always produce identical tables.
    FieldCtx(int64_t p, int N, int64_t cap = kDefaultFieldCap);

    int64_t p() const { return p_; }
    int N() const { return N_; }
    int64_t size() const { return size_; }
    int64_t order_of_group() const { return size_ - 1; }
    const std::vector<int>& modulus() const { return modulus_; }

    // Designated subfield F_q; defaults to the prime field until set.
    int64_t subfield_q() const { return subfield_q_; }
    void set_subfield(int64_t q);

    FieldElem zero() const { return kZero; }
    FieldElem one() const { return FieldElem{0}; }
    // canonical primitive element g
    FieldElem gen() const { return FieldElem{size_ == 2 ? 0 : 1}; }
    FieldElem from_log(int64_t i) const {
        int64_t n1 = size_ - 1;
        return FieldElem{((i % n1) + n1) % n1};
    }

    FieldElem mul(FieldElem a, FieldElem b) const {
        if (a.is_zero() || b.is_zero()) return kZero;
        int64_t s = a.log + b.log;
        int64_t n1 = size_ - 1;
        return FieldElem{s >= n1 ? s - n1 : s};
    }
    FieldElem add(FieldElem a, FieldElem b) const {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        int64_t n1 = size_ - 1;
        int64_t d = b.log - a.log;
        if (d < 0) d += n1;
        int32_t z = zech_[static_cast<size_t>(d)];
        if (z < 0) return kZero;
        int64_t s = a.log + z;
        return FieldElem{s >= n1 ? s - n1 : s};
    }
    FieldElem neg(FieldElem a) const {
        if (a.is_zero() || p_ == 2) return a;
        int64_t half = (size_ - 1) / 2;
        int64_t s = a.log + half;
        return FieldElem{s >= size_ - 1 ? s - (size_ - 1) : s};
    }
    FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
    FieldElem inv(FieldElem a) const {
        require(!a.is_zero(), errc::zero_element, "inverse of zero");
        return from_log(-a.log);
    }
    FieldElem pow(FieldElem a, int64_t e) const {
        if (a.is_zero()) {
            require(e > 0, errc::zero_element, "0^e needs e > 0");
            return kZero;
        }
        int64_t n1 = size_ - 1;
        // exponent reduced mod group order; negative exponents allowed
        int64_t r = ((e % n1) * (a.log % n1)) % n1;
        if (r < 0) r += n1;
        return FieldElem{r};
    }

    // least d > 0 with a^d = 1
    int64_t element_order(FieldElem a) const {
        require(!a.is_zero(), errc::zero_element, "order of zero element");
        return (size_ - 1) / std::gcd(a.log, size_ - 1);
    }

    // true iff x lies in the subfield of size s (s-1 must divide p^N-1)
    bool in_subfield(FieldElem x, int64_t s) const {
        require(s >= 2 && (size_ - 1) % (s - 1) == 0, errc::bad_subfield_size,
                "no subfield of size " + std::to_string(s));
        if (x.is_zero()) return true;
        return x.log % ((size_ - 1) / (s - 1)) == 0;
    }

    // generator of the designated subfield's multiplicative group,
    // g^((p^N-1)/(q-1)); the CLI's "xi^J" lambda syntax refers to this.
    FieldElem subfield_generator() const {
        if (subfield_q_ == 2) return one();
        return FieldElem{(size_ - 1) / (subfield_q_ - 1)};
    }

    // packed representation: sum c_i p^i over the modulus basis (reporting,
    // hashing and construction; arithmetic never touches it)
    int64_t to_packed(FieldElem a) const { return a.is_zero() ? 0 : exp_packed_[static_cast<size_t>(a.log)]; }
    FieldElem from_packed(int64_t v) const {
        require(v >= 0 && v < size_, errc::invalid_parameter, "packed value out of range");
        if (v == 0) return kZero;
        return FieldElem{log_of_packed_[static_cast<size_t>(v)]};
    }

  private:
    int64_t p_;
    int N_;
    int64_t size_;
    int64_t subfield_q_;
    std::vector<int> modulus_; // ascending coefficients, length N+1, monic
    std::vector<int32_t> zech_;
    std::vector<int64_t> exp_packed_;
    std::vector<int64_t> log_of_packed_;
};

// Root data for one (q, lambda, n) configuration inside F_{q^m}:
//   omega  primitive, with omega^((q^m-1)/r) = lambda
//   zeta   = omega^((q^m-1)/(rn)), of order rn, zeta^n = lambda
//   xi     = omega^((q^m-1)/(q-1)), generator of F_q^*
struct RootSystem {
    int64_t q = 0;
    int64_t n = 0;
    int64_t r = 0; // multiplicative order of lambda
    FieldElem lambda;
    FieldElem omega;
    FieldElem zeta;
    FieldElem xi;
};

// omega = g^v with the smallest positive v such that gcd(v, q^m-1) = 1 and
// (g^v)^((q^m-1)/r) = lambda. Requires lambda in F_q^*, gcd(n,q)=1 and
// rn | q^m-1 (with q^m the full field size).
RootSystem make_root_system(const FieldCtx& ctx, int64_t q, FieldElem lambda, int64_t n);

FieldCtx build_field(int64_t p, int N, int64_t cap = kDefaultFieldCap);

} // namespace conorbit

#endif
