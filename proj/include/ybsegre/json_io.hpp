#pragma once

#include "ybsegre/groebner.hpp"
#include "ybsegre/segre.hpp"
#include "ybsegre/solution.hpp"

#include <json.hpp>

#include <string>

namespace ybsegre {

using nlohmann::json;

// Solution documents look like
//   { "size": 3, "labels": ["x1","x2","x3"],
//     "r": [ [ [p,q], ... n entries ], ... n rows ] }
// with r[i][j] = [p, q] meaning r(x_i, x_j) = (x_p, x_q), all indices
// 0-based. "labels" is optional and defaults to x1..xn. Malformed documents
// raise ValidationError with a human-readable reason.
QuadraticSet solution_from_json(const json& doc);
QuadraticSet load_solution(const std::string& path);
json solution_to_json(const QuadraticSet& qs);

// Polynomials serialize as lists of [coefficient-string, [letter indices]]
// pairs, leading term first; coefficients are exact fraction strings.
json poly_to_json(const NcPoly& p);
json presentation_to_json(const QuadraticPresentation& p);
json gb_to_json(const TruncatedGB& gb, const std::vector<std::string>& labels);
json classification_to_json(const SolutionClassification& c);
json orbit_report_to_json(const OrbitReport& rep);
json tagged_relation_to_json(const TaggedRelation& rel, const std::vector<std::string>& labels);
json segre_presentation_to_json(const SegrePresentation& sp);
json dim_identity_report_to_json(const DimIdentityReport& rep);
json segre_hilbert_report_to_json(const SegreHilbertReport& rep);
json square_free_certificate_to_json(const SquareFreeCertificate& cert);
json pbw_report_to_json(const PbwReport& rep);

} // namespace ybsegre
