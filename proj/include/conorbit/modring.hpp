#ifndef CONORBIT_MODRING_HPP
#define CONORBIT_MODRING_HPP

// q-cyclotomic cosets modulo rn inside the root-index set 1 + r*Z_rn,
// plus multiplier images on coset indices.

#include <cstdint>
#include <vector>

#include "conorbit/errors.hpp"
#include "conorbit/intmath.hpp"

namespace conorbit {

struct Coset {
    int64_t rep;  // least element, rep = 1 + r*a mod rn
    int64_t a;    // in [0, n)
    int64_t size; // k_t
    std::vector<int64_t> elements; // sorted
};

struct CosetTable {
    int64_t q = 0, r = 0, n = 0, rn = 0;
    int64_t m = 0; // ord_{rn}(q)
    std::vector<Coset> cosets; // ascending by least representative

    int index_of_element(int64_t x) const; // -1 if x not in 1 + r*Z_rn
};

// All distinct q-cyclotomic cosets modulo rn contained in 1 + r*Z_rn.
CosetTable cyclotomic_cosets(int64_t q, int64_t r, int64_t n);

// Index of the coset containing a^{-1} * (1 + r*a_t) mod rn, for a unit
// a in 1 + r*Z_rn. The mu_a image of the minimal ideal indexed by t is the
// minimal ideal indexed by the result.
int multiplier_coset_image(const CosetTable& table, int64_t a, int t);

} // namespace conorbit

#endif
