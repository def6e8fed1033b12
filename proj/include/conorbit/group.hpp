#ifndef CONORBIT_GROUP_HPP
#define CONORBIT_GROUP_HPP

// Automorphism subgroups acting on codewords and brute-force orbit counting.
// Every element factors uniquely as mu^{r1} rho^{r2} sigma^{r3} (plus a
// mu_{-1} bit for the extended negacyclic group), so groups enumerate as
// exponent boxes. Orbit counts run twice: a BFS partition and a Burnside
// average, which must agree exactly.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "conorbit/code.hpp"
#include "conorbit/gf.hpp"
#include "conorbit/modring.hpp"

namespace conorbit {

using boost::multiprecision::cpp_int;

enum class GroupKind {
    rho_sigma,          // <rho, sigma_xi>,                order n(q-1)
    mu_rho_sigma,       // <mu_q, rho, sigma_xi>,          order mn(q-1)
    neg_mu_rho_sigma,   // <mu_{-1}, mu_q, rho, sigma_xi>, order 2mn(q-1)
    frob_rho_sigma,     // <mu_b, rho, sigma_xi>, b = (-1)^{l0} p^{e/2}, order 2mn(q-1)
};

std::string group_name(GroupKind kind, int l0 = 0);

struct GroupSpec {
    GroupKind kind = GroupKind::mu_rho_sigma;
    int l0 = 0;        // frob_rho_sigma only
    int64_t p = 0;     // frob_rho_sigma only: q = p^e
    int e = 0;
};

// Multiplier residues covering the mu-part of the group, one per element.
// Rejects ill-posed specs (multiplier outside Z*_rn cap (1+rZ_rn), or
// exponent ranges that would not enumerate the group faithfully).
std::vector<int64_t> group_multipliers(const GroupSpec& spec, const CosetTable& table);

int64_t group_order(const GroupSpec& spec, const CosetTable& table);

// single generator applications on codewords
Codeword act_rho(const FieldCtx& ctx, const RootSystem& roots, const Codeword& w);
Codeword act_sigma(const FieldCtx& ctx, const RootSystem& roots, const Codeword& w, int64_t j);
Codeword act_mu(const FieldCtx& ctx, const RootSystem& roots, const Codeword& w, int64_t a);

// mu_a rho^{r2} sigma^{r3} compiled to coordinate routing plus scalar twist:
// out[pi[i]] = w[i] * scal[i].
struct CompiledMap {
    std::vector<int32_t> pi;
    std::vector<int32_t> scal;  // logs of unit scalars
    int64_t group_mod = 0;      // q^m - 1, for log reduction
};
CompiledMap compile_action(const FieldCtx& ctx, const RootSystem& roots, int64_t a,
                           int64_t r2, int64_t r3);

struct WeightClass {
    int weight = 0;
    int64_t orbit_count_within = 0;
};

struct OrbitReport {
    std::string group;
    int64_t order = 0;
    int64_t orbit_count_direct = -1;
    int64_t orbit_count_burnside = -1;
    bool weight_homogeneous = false;    // every orbit has a single weight
    bool single_orbit_per_weight = false;
    std::vector<WeightClass> weight_classes;
};

// BFS partition of the nonzero codewords, seeds taken in lexicographic
// codeword order (canonical orbit numbering). Single-threaded by design.
OrbitReport orbit_count_direct(const FieldCtx& ctx, const RootSystem& roots,
                               const CosetTable& table, const CodewordList& words,
                               const GroupSpec& spec);

// Exact Burnside average over the whole group; the division must be exact.
int64_t orbit_count_burnside(const FieldCtx& ctx, const RootSystem& roots,
                             const CosetTable& table, const CodewordList& words,
                             const GroupSpec& spec, int threads = 0);

// |Fix(g)| for one compiled element over a materialized word list.
int64_t count_fixed(const CodewordList& words, const CompiledMap& map);

// True iff every exponent tuple of the group induces a distinct linear map
// on F_q^n (checked on the standard basis plus a few fixed probe vectors).
bool unique_factorization_check(const FieldCtx& ctx, const RootSystem& roots,
                                const CosetTable& table, const GroupSpec& spec);

} // namespace conorbit

#endif
