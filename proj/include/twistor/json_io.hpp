#pragma once

// JSON records. Exact scalars are [re, im] pairs of "num/den" strings;
// floating scalars are [re, im] pairs of numbers. Files carry explicit
// "order" fields for monomials and Plücker coordinates.

#include <json.hpp>

#include "twistor/analysis.hpp"
#include "twistor/linsys.hpp"
#include "twistor/quaternion.hpp"

namespace twistor::io {

using nlohmann::json;

json to_json(const GaussianRational& z);
GaussianRational exact_from_json(const json& j);
json to_json(const Complex& z);
Complex complex_from_json(const json& j);

json point_to_json(const ExactPoint& p);
ExactPoint point_from_json(const json& j);
json point_to_json(const ApproxPoint& p);

// {"points": [[[re,im] x4], [[re,im] x4]]}
json line_to_json(const ExactLine& line);
ExactLine line_from_json(const json& j);

// {"q1": [re,im], "q2": [re,im]}
json quaternion_to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j);

// {"plucker": [[re,im] x6], "order": "p01,p02,p03,p12,p13,p23"}
json plucker_to_json(const ExactPlucker& t);
json plucker_to_json(const ApproxPlucker& t);
ExactPlucker plucker_from_json(const json& j);

// {"degree": d, "order": "gradedlex", "coeffs": [{"alpha": [..], "re": "n/d", "im": "n/d"}, ...]}
json surface_to_json(const ExactForm& f);
ExactForm surface_from_json(const json& j);

json report_to_json(const CohomologyReport& r);
json configuration_to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);

json line_search_to_json(const LineSearchReport& r);
json surface_report_to_json(const SurfaceReport& r, const SurfaceOptions& opts);

}  // namespace twistor::io
