// python bindings exposing the main operations: coset tables, code
// construction, weight enumeration, orbit counting and the closed-form
// bound report. Values cross the boundary as plain ints/str/dict.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "conorbit/instance.hpp"
#include "conorbit/json_io.hpp"
#include "conorbit/report.hpp"
#include "conorbit/version.hpp"

namespace py = pybind11;
using namespace conorbit;

namespace {

Instance build(int64_t q, int64_t n, const std::string& lambda) {
    return make_instance(q, n, lambda);
}

py::object json_to_py(const ojson& j) {
    py::module_ json = py::module_::import("json");
    return json.attr("loads")(j.dump());
}

std::vector<int> all_or(const Instance& inst, std::vector<int> sel) {
    if (sel.empty())
        for (int t = 0; t < static_cast<int>(inst.table.cosets.size()); ++t) sel.push_back(t);
    std::sort(sel.begin(), sel.end());
    return sel;
}

} // namespace

PYBIND11_MODULE(_conorbit, m) {
    m.doc() = "constacyclic code weight/orbit/bound toolkit";
    m.attr("__version__") = kVersion;

    py::class_<Instance>(m, "Instance")
        .def_readonly("q", &Instance::q)
        .def_readonly("n", &Instance::n)
        .def_readonly("r", &Instance::r)
        .def_readonly("rn", &Instance::rn)
        .def_readonly("m", &Instance::m)
        .def_readonly("lambda_exp", &Instance::lambda_exp)
        .def("cosets", [](const Instance& inst) {
            std::vector<std::vector<int64_t>> out;
            for (const Coset& c : inst.table.cosets) out.push_back(c.elements);
            return out;
        })
        .def("coset_table", [](const Instance& inst) { return json_to_py(coset_table_json(inst.table)); })
        .def("field", [](const Instance& inst) { return json_to_py(field_json(*inst.ctx)); });

    m.def("instance", &build, py::arg("q"), py::arg("n"), py::arg("lambda_") = "1",
          "build the field, root system and coset table for (q, n, lambda)");

    m.def("weights",
          [](const Instance& inst, std::vector<int> sel, int64_t cap) {
              sel = all_or(inst, sel);
              Code code = build_code(*inst.ctx, inst.roots, inst.table,
                                     {inst.q, inst.n, inst.lambda_exp, sel});
              WeightDist d = enumerate_weights(*inst.ctx, code, cap);
              py::dict out;
              out["counts"] = d.counts;
              out["ell"] = d.ell;
              out["enumerator"] = d.enumerator;
              out["dim"] = code.dim;
              return out;
          },
          py::arg("instance"), py::arg("cosets") = std::vector<int>{},
          py::arg("cap") = kDefaultEnumCap);

    m.def("orbit_counts",
          [](const Instance& inst, std::vector<int> sel, const std::string& group, int64_t cap) {
              sel = all_or(inst, sel);
              Code code = build_code(*inst.ctx, inst.roots, inst.table,
                                     {inst.q, inst.n, inst.lambda_exp, sel});
              CodewordList words = materialize_codewords(*inst.ctx, code, cap);
              GroupSpec gs;
              gs.p = inst.p;
              gs.e = inst.e;
              if (group == "rho_sigma") gs.kind = GroupKind::rho_sigma;
              else if (group == "mu_rho_sigma") gs.kind = GroupKind::mu_rho_sigma;
              else if (group == "neg_mu_rho_sigma") gs.kind = GroupKind::neg_mu_rho_sigma;
              else if (group == "frob0") { gs.kind = GroupKind::frob_rho_sigma; gs.l0 = 0; }
              else if (group == "frob1") { gs.kind = GroupKind::frob_rho_sigma; gs.l0 = 1; }
              else throw py::value_error("unknown group: " + group);
              OrbitReport rep = orbit_count_direct(*inst.ctx, inst.roots, inst.table, words, gs);
              int64_t burn = orbit_count_burnside(*inst.ctx, inst.roots, inst.table, words, gs);
              OracleCount oc;
              oc.group = rep.group;
              oc.order = rep.order;
              oc.direct = rep.orbit_count_direct;
              oc.burnside = burn;
              oc.weight_homogeneous = rep.weight_homogeneous;
              oc.single_orbit_per_weight = rep.single_orbit_per_weight;
              oc.weight_classes = rep.weight_classes;
              return json_to_py(oracle_json(oc));
          },
          py::arg("instance"), py::arg("cosets") = std::vector<int>{},
          py::arg("group") = "mu_rho_sigma", py::arg("cap") = kDefaultOrbitCap);

    m.def("verify",
          [](const Instance& inst, std::vector<int> sel, bool oracles, int64_t cap_enum,
             int64_t cap_orbit) {
              sel = all_or(inst, sel);
              VerifyOptions opts;
              opts.enumerate = true;
              opts.oracles = oracles;
              opts.caps.enumeration = cap_enum;
              opts.caps.orbit = cap_orbit;
              BoundReport rep = compare_report(inst, sel, opts);
              return json_to_py(bound_report_json(rep));
          },
          py::arg("instance"), py::arg("cosets") = std::vector<int>{}, py::arg("oracles") = true,
          py::arg("cap_enum") = kDefaultEnumCap, py::arg("cap_orbit") = kDefaultOrbitCap);

    py::register_exception<error>(m, "ConorbitError");
}
