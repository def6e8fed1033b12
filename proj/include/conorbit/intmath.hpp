#ifndef CONORBIT_INTMATH_HPP
#define CONORBIT_INTMATH_HPP

// Elementary integer routines shared across the library. Everything here is
// exact; sizes are desk-scale (moduli below 2^22, values below 2^63).

#include <cstdint>
#include <numeric>
#include <vector>

#include "conorbit/errors.hpp"

namespace conorbit {

inline int64_t gcd_i64(int64_t a, int64_t b) { return std::gcd(a, b); }

// gcd of a list, absolute values, gcd(x,0)=x; empty list -> 0.
inline int64_t gcd_list(const std::vector<int64_t>& values) {
    int64_t g = 0;
    for (int64_t v : values) g = std::gcd(g, v < 0 ? -v : v);
    return g;
}

inline int64_t mod_pow(int64_t base, int64_t exp, int64_t mod) {
    int64_t result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// least nonnegative inverse of a mod m, gcd(a,m)=1
inline int64_t mod_inverse(int64_t a, int64_t m) {
    int64_t t = 0, new_t = 1;
    int64_t r = m, new_r = ((a % m) + m) % m;
    while (new_r != 0) {
        int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    require(r == 1, errc::not_a_unit, "element not invertible modulo m");
    return ((t % m) + m) % m;
}

inline bool is_prime(int64_t p) {
    if (p < 2) return false;
    for (int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline std::vector<std::pair<int64_t, int>> factorize(int64_t x) {
    std::vector<std::pair<int64_t, int>> factors;
    for (int64_t d = 2; d * d <= x; ++d) {
        if (x % d == 0) {
            int e = 0;
            while (x % d == 0) {
                x /= d;
                ++e;
            }
            factors.emplace_back(d, e);
        }
    }
    if (x > 1) factors.emplace_back(x, 1);
    return factors;
}

// least d > 0 with b^d = 1 (mod M); requires gcd(b,M)=1, M>1
inline int64_t ord_mod(int64_t b, int64_t M) {
    require(M > 1, errc::invalid_parameter, "ord_mod needs modulus > 1");
    b = ((b % M) + M) % M;
    require(std::gcd(b, M) == 1, errc::not_a_unit, "ord_mod argument not a unit");
    int64_t d = 1;
    int64_t x = b;
    while (x != 1) {
        x = x * b % M;
        ++d;
    }
    return d;
}

inline int64_t euler_phi(int64_t b) {
    require(b >= 1, errc::invalid_parameter, "euler_phi needs b >= 1");
    int64_t result = b;
    for (auto [p, e] : factorize(b)) result -= result / p;
    return result;
}

inline std::vector<int64_t> divisors(int64_t b) {
    require(b >= 1, errc::invalid_parameter, "divisors needs b >= 1");
    std::vector<int64_t> small, large;
    for (int64_t d = 1; d * d <= b; ++d) {
        if (b % d == 0) {
            small.push_back(d);
            if (d != b / d) large.push_back(b / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// Decompose q = p^e with p prime; rejects non prime powers.
inline std::pair<int64_t, int> prime_power_split(int64_t q) {
    require(q >= 2, errc::invalid_parameter, "q must be >= 2");
    auto factors = factorize(q);
    require(factors.size() == 1, errc::not_prime, "q is not a prime power");
    return {factors[0].first, factors[0].second};
}

inline int64_t checked_pow(int64_t base, int exp, int64_t cap) {
    int64_t r = 1;
    for (int i = 0; i < exp; ++i) {
        require(r <= cap / base, errc::cap_exceeded, "power exceeds configured cap");
        r *= base;
    }
    return r;
}

} // namespace conorbit

#endif
