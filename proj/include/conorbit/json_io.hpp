#ifndef CONORBIT_JSON_IO_HPP
#define CONORBIT_JSON_IO_HPP

// JSON / CSV renderings of the report types. All values are integers or
// strings (never floats), and key order is fixed, so parse + re-serialize
// round-trips byte-identically.

#include <string>

#include "vendor_json.hpp"

#include "conorbit/instance.hpp"
#include "conorbit/report.hpp"

namespace conorbit {

using ojson = nlohmann::ordered_json;

ojson coset_table_json(const CosetTable& table);
ojson field_json(const FieldCtx& ctx);
ojson weights_json(const WeightDist& dist);
std::string weights_csv(const WeightDist& dist);
ojson oracle_json(const OracleCount& oc);
ojson code_json(const Instance& inst, const Code& code);
ojson bound_report_json(const BoundReport& rep);

std::string dump_json(const ojson& j);

} // namespace conorbit

#endif
