#include "conorbit/json_io.hpp"

#include "conorbit/bounds.hpp"

namespace conorbit {

ojson coset_table_json(const CosetTable& table) {
    ojson j;
    j["q"] = table.q;
    j["r"] = table.r;
    j["n"] = table.n;
    j["rn"] = table.rn;
    j["m"] = table.m;
    ojson cosets = ojson::array();
    for (const Coset& c : table.cosets) {
        ojson jc;
        jc["rep"] = c.rep;
        jc["a"] = c.a;
        jc["k"] = c.size;
        jc["elements"] = c.elements;
        cosets.push_back(std::move(jc));
    }
    j["cosets"] = std::move(cosets);
    return j;
}

ojson field_json(const FieldCtx& ctx) {
    ojson j;
    j["p"] = ctx.p();
    j["degree"] = ctx.N();
    j["size"] = ctx.size();
    j["subfield_q"] = ctx.subfield_q();
    j["modulus"] = ctx.modulus(); // ascending coefficients over F_p
    return j;
}

ojson weights_json(const WeightDist& dist) {
    ojson j;
    j["counts"] = dist.counts;
    j["ell"] = dist.ell;
    j["enumerator"] = dist.enumerator;
    return j;
}

std::string weights_csv(const WeightDist& dist) {
    std::string out = "i,A_i\n";
    for (size_t i = 0; i < dist.counts.size(); ++i)
        out += std::to_string(i) + "," + std::to_string(dist.counts[i]) + "\n";
    return out;
}

ojson oracle_json(const OracleCount& oc) {
    ojson j;
    j["group"] = oc.group;
    j["order"] = oc.order;
    j["orbit_count"] = oc.direct;
    j["orbit_count_burnside"] = oc.burnside;
    j["weight_homogeneous"] = oc.weight_homogeneous;
    j["single_orbit_per_weight"] = oc.single_orbit_per_weight;
    ojson classes = ojson::array();
    for (const WeightClass& wc : oc.weight_classes) {
        ojson jc;
        jc["weight"] = wc.weight;
        jc["orbit_count_within"] = wc.orbit_count_within;
        classes.push_back(std::move(jc));
    }
    j["weight_classes"] = std::move(classes);
    return j;
}

ojson code_json(const Instance& inst, const Code& code) {
    ojson j;
    j["q"] = inst.q;
    j["n"] = inst.n;
    j["lambda"] = "xi^" + std::to_string(inst.lambda_exp);
    j["r"] = inst.r;
    j["cosets"] = code.spec.selected;
    j["dim"] = code.dim;
    // generator polynomial coefficients as packed subfield elements
    ojson gen = ojson::array();
    for (FieldElem c : code.genpoly) gen.push_back(inst.ctx->to_packed(c));
    j["genpoly_packed"] = std::move(gen);
    j["field"] = field_json(*inst.ctx);
    return j;
}

ojson bound_report_json(const BoundReport& rep) {
    ojson j;
    ojson params;
    params["q"] = rep.q;
    params["n"] = rep.n;
    params["lambda"] = "xi^" + std::to_string(rep.lambda_exp);
    params["r"] = rep.r;
    params["rn"] = rep.rn;
    params["m"] = rep.m;
    params["cosets"] = rep.selected;
    params["coset_reps"] = rep.selected_reps;
    params["dim"] = rep.dim;
    j["params"] = std::move(params);

    ojson methods = ojson::array();
    for (const MethodValue& m : rep.methods) {
        ojson jm;
        jm["name"] = m.name;
        jm["applicable"] = m.applicable;
        if (m.applicable) jm["value"] = to_i64(m.value);
        else jm["reason"] = m.reason;
        methods.push_back(std::move(jm));
    }
    j["methods"] = std::move(methods);

    if (rep.weights) {
        j["ell"] = rep.weights->ell;
        j["weights"] = weights_json(*rep.weights);
    }

    ojson oracle;
    for (const OracleCount& oc : rep.oracles) oracle[oc.group] = oc.direct;
    j["oracle"] = std::move(oracle);
    ojson oracle_detail = ojson::array();
    for (const OracleCount& oc : rep.oracles) oracle_detail.push_back(oracle_json(oc));
    j["oracle_detail"] = std::move(oracle_detail);

    if (!rep.thm34_confirmed.empty()) j["thm34_confirmed"] = rep.thm34_confirmed;

    ojson verdicts = ojson::array();
    for (const Verdict& v : rep.verdicts) {
        ojson jv;
        jv["check"] = v.check;
        jv["pass"] = v.pass;
        if (!v.detail.empty()) jv["detail"] = v.detail;
        verdicts.push_back(std::move(jv));
    }
    j["verdicts"] = std::move(verdicts);
    j["all_pass"] = rep.all_pass;
    return j;
}

std::string dump_json(const ojson& j) { return j.dump(2) + "\n"; }

} // namespace conorbit
