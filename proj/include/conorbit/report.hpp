#ifndef CONORBIT_REPORT_HPP
#define CONORBIT_REPORT_HPP

// Assembles, for one code, the enumeration result, the brute-force orbit
// oracles, every applicable closed-form method, and the pass/fail verdict
// set tying them together. This is the engine behind `verify` and the
// acceptance suite.

#include <optional>
#include <string>
#include <vector>

#include "conorbit/bounds.hpp"
#include "conorbit/code.hpp"
#include "conorbit/group.hpp"
#include "conorbit/instance.hpp"

namespace conorbit {

struct OracleCount {
    std::string group;
    int64_t order = 0;
    int64_t direct = -1;
    int64_t burnside = -1;
    bool weight_homogeneous = false;
    bool single_orbit_per_weight = false;
    std::vector<WeightClass> weight_classes;
};

struct BoundReport {
    // parameters
    int64_t q = 0, n = 0, lambda_exp = 0, r = 0, rn = 0, m = 0, dim = 0;
    std::vector<int> selected;
    std::vector<int64_t> selected_reps;
    std::optional<WeightDist> weights;
    std::vector<MethodValue> methods;
    std::vector<OracleCount> oracles;
    // which Theorem 3.4 variant the oracle confirmed, when arbitrated:
    // "theorem", "lemma", "both", "neither" or "" (no oracle / no shape)
    std::string thm34_confirmed;
    std::vector<Verdict> verdicts;
    bool all_pass = true;

    const MethodValue* find_method(const std::string& name) const;
    const OracleCount* find_oracle(const std::string& group) const;
};

struct VerifyOptions {
    bool enumerate = true;     // weight distribution
    bool oracles = true;       // brute-force orbit counts
    Caps caps;
    int threads = 0;
};

BoundReport compare_report(const Instance& inst, const std::vector<int>& selected,
                           const VerifyOptions& opts);

} // namespace conorbit

#endif
