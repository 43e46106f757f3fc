#pragma once

#include <json.hpp>

#include "rootpoly/ehrhart.hpp"
#include "rootpoly/semigroup.hpp"

namespace rootpoly {

using nlohmann::json;

json lattice_to_json(const Lattice& L);
Lattice lattice_from_json(const json& j);

// {"lattice": {...}, "vertices": [[rat-strings]]} or
// {"lattice": {...}, "inequalities": [{"normal": [...], "offset": "a"}]}.
// Vertices and inequality normals are given in ambient coordinates (of M_R
// and N respectively).
json polytope_to_json(const Polytope& P);
Polytope polytope_from_json(const json& j);
Polytope polytope_from_file(const std::string& path);

json qvec_to_json(const QVec& v);
QVec qvec_from_json(const json& j);
json ivec_to_json(const IVec& v);

json split_report_to_json(const SplitReport& rep);
json quasipolynomial_to_json(const Quasipolynomial& Q);
json normality_report_to_json(const NormalityReport& rep);
json quadratic_report_to_json(const QuadraticReport& rep);
json koszul_report_to_json(const KoszulReport& rep);

}  // namespace rootpoly
