#pragma once

// JSON serialization of fans, divisors and polyhedra. Rationals travel as
// "p/q" strings ("p" when integral); parse errors become UsageError.

#include <json.hpp>

#include "toridiv/mld.hpp"

namespace toridiv {

using nlohmann::json;

json load_json_file(const std::string& path);

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json fan_to_json(const Fan& f);
Fan fan_from_json(const json& j);

json divisor_to_json(const ToricDivisor& d);
ToricDivisor divisor_from_json(const json& j);

json hpoly_to_json(const HPolyhedron& p);
HPolyhedron hpoly_from_json(const json& j);

json vpoly_to_json(const VPolyhedron& p);
VPolyhedron vpoly_from_json(const json& j);

json cartier_status_to_json(const CartierStatus& st);
json qcartierization_to_json(const QCartierization& qc);

std::vector<ZVec> queries_from_json(const json& j, int dim);

// exact string plus a 20-digit decimal approximation (for plotting columns)
std::string rat_decimal(const Rat& r, int digits = 20);

} // namespace toridiv
