#pragma once

#include <string>

#include <json.hpp>

#include "veesys/configuration.hpp"
#include "veesys/transform.hpp"
#include "veesys/vee_check.hpp"

namespace veesys {

using Json = nlohmann::json;

// Interchange format:
//   {"dimension": 3, "label": "...",
//    "covectors": [{"dir": ["1","-1","0"], "weight": "1/3"}, ...],
//    "background": [["1","0","0"], ...]}   (optional)
// All rationals travel as "p" / "p/q" strings.

Configuration parse_configuration(const Json &j);
Configuration parse_configuration_text(const std::string &text);
Json configuration_to_json(const Configuration &c);

Matrix parse_matrix(const Json &j);
Json matrix_to_json(const Matrix &m);

Json vector_to_json(const Vector &v);
Json plane_to_json(const Plane &p);
Json fingerprint_to_json(const Fingerprint &fp);
Json vee_report_to_json(const VeeReport &report);
Json linear_map_to_json(const LinearMap &map);

} // namespace veesys
