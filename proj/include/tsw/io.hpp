#pragma once

#include "json.hpp"
#include "tsw/groups.hpp"
#include "tsw/measures.hpp"
#include "tsw/numeric.hpp"
#include "tsw/width.hpp"

namespace tsw {

using Json = nlohmann::json;

// Vector JSON: {"field":"real"|"complex","coords":[x,...] or [[re,im],...]}
Json vector_to_json(const Vec& v, Field field);
std::pair<Vec, Field> vector_from_json(const Json& j);
UnitVector unit_vector_from_json(const Json& j, const Tolerance& tol = {});

// Matrix JSON: {"field":...,"rows":[[...],...]}
Json matrix_to_json(const Mat& m, Field field);
Mat matrix_from_json(const Json& j);

// Group JSON: {"dim":d,"field":...,"kind":"explicit","generators":[...]} or
// {"kind":"permutation"|"signed_permutation"|"monomial_full","dim":d}
Json group_to_json(const GroupPresentation& g);
GroupPresentation group_from_json(const Json& j, const Tolerance& tol = {});

// Measure JSON: {"kind":"atoms","atoms":[{"w":vec,"weight":x},...]} or
// {"kind":"haar","n_samples":n,"seed":s}
Json measure_to_json(const SymmetricMeasure& mu);
SymmetricMeasure measure_from_json(const Json& j, const Tolerance& tol = {});

Json width_report_to_json(const WidthReport& rep);

Json load_json_file(const std::string& path);

}  // namespace tsw
