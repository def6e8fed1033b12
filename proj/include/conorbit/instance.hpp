#ifndef CONORBIT_INSTANCE_HPP
#define CONORBIT_INSTANCE_HPP

// One fully-built (q, n, lambda) configuration: the hosting field F_{q^m},
// the root system and the coset table. Shared by the CLI, the python
// bindings and the test drivers.

#include <cstdint>
#include <memory>
#include <string>

#include "conorbit/gf.hpp"
#include "conorbit/modring.hpp"

namespace conorbit {

struct Caps {
    int64_t field = kDefaultFieldCap;
    int64_t enumeration = int64_t(1) << 26;
    int64_t orbit = int64_t(1) << 20;
};

struct Instance {
    int64_t q = 0, p = 0;
    int e = 0;
    int64_t n = 0;
    int64_t lambda_exp = 0; // lambda = xi0^lambda_exp
    int64_t r = 0, rn = 0, m = 0;
    int N = 0; // e*m
    std::shared_ptr<FieldCtx> ctx;
    RootSystem roots;
    CosetTable table;
};

// lambda syntax: "1", "-1", or "xi^J"
int64_t parse_lambda_exp(const std::string& lambda, int64_t q);

Instance make_instance(int64_t q, int64_t n, int64_t lambda_exp, int64_t field_cap = kDefaultFieldCap);

inline Instance make_instance(int64_t q, int64_t n, const std::string& lambda,
                              int64_t field_cap = kDefaultFieldCap) {
    return make_instance(q, n, parse_lambda_exp(lambda, q), field_cap);
}

} // namespace conorbit

#endif
