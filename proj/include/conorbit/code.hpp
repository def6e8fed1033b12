#ifndef CONORBIT_CODE_HPP
#define CONORBIT_CODE_HPP

// Constacyclic codes as generator-polynomial row spaces over the base
// subfield, exact weight distributions by exhaustive enumeration, and
// primitive idempotents kept as a verification oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "conorbit/gf.hpp"
#include "conorbit/modring.hpp"

namespace conorbit {

inline constexpr int64_t kDefaultEnumCap = int64_t(1) << 26;
inline constexpr int64_t kDefaultOrbitCap = int64_t(1) << 20;

using Codeword = std::vector<FieldElem>;

struct CodeSpec {
    int64_t q = 0;
    int64_t n = 0;
    int64_t lambda_exp = 0;        // lambda = xi^lambda_exp, xi the canonical F_q* generator
    std::vector<int> selected;     // coset indices T, sorted ascending
};

struct Code {
    CodeSpec spec;
    int64_t dim = 0;                        // k = sum of selected coset sizes
    std::vector<FieldElem> genpoly;         // monic, ascending, degree n-k
    std::vector<Codeword> genmatrix;        // k rows, row i = x^i * g(x)
    std::vector<Codeword> echelon;          // row-reduced basis for membership tests
    std::vector<int> pivots;
};

struct WeightDist {
    std::vector<int64_t> counts; // A_0..A_n
    int ell = 0;                 // #{i>0 : A_i > 0}
    std::string enumerator;      // e.g. "1+16x^3+64x^6"
};

Code build_code(const FieldCtx& ctx, const RootSystem& roots, const CosetTable& table,
                const CodeSpec& spec);

// epsilon_t = sum_{j in Gamma_t} e_j with e_{1+ri} = (1/n) sum_l zeta^{-(1+ri)l} x^l.
// Coefficients land in the base subfield; the zero polynomial never occurs.
Codeword primitive_idempotent(const FieldCtx& ctx, const RootSystem& roots,
                              const CosetTable& table, int t);

// product in R = F_q[x]/(x^n - lambda)
Codeword ring_mul(const FieldCtx& ctx, const RootSystem& roots, const Codeword& a,
                  const Codeword& b);

// Exact counts over all q^k messages (mixed-radix odometer over
// {ZERO, xi^0, ..., xi^(q-2)}). Splits across threads on the leading digit;
// counts merge additively so the result is identical for any worker count.
WeightDist enumerate_weights(const FieldCtx& ctx, const Code& code,
                             int64_t cap = kDefaultEnumCap, int threads = 0);

// All codewords, flattened row-major in message odometer order.
struct CodewordList {
    int64_t n = 0;
    int64_t count = 0;
    std::vector<int32_t> logs; // count*n entries, -1 for zero coordinates
};
CodewordList materialize_codewords(const FieldCtx& ctx, const Code& code,
                                   int64_t cap = kDefaultOrbitCap);

bool contains(const FieldCtx& ctx, const Code& code, const Codeword& w);

int hamming_weight(const Codeword& w);

std::string enumerator_string(const std::vector<int64_t>& counts);

} // namespace conorbit

#endif
