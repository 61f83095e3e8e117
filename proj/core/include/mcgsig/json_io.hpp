#pragma once

#include <json.hpp>

#include "mcgsig/matrix.hpp"
#include "mcgsig/qp1.hpp"
#include "mcgsig/surface.hpp"
#include "mcgsig/wall.hpp"

namespace mcgsig {

// Matrices travel as arrays of rows with entries encoded as strings "p/q"
// (or "n" for integers) so exactness survives the wire.

nlohmann::json mat_to_json(const Mat& m);
Mat mat_from_json(const nlohmann::json& j);

nlohmann::json vec_to_json(const Vec& v);
Vec vec_from_json(const nlohmann::json& j);

/// Canonical two-element integer array [p, q].
nlohmann::json qp1_to_json(const ProjectiveRational& x);
ProjectiveRational qp1_from_json(const nlohmann::json& j);

/// {name, class: integer vector, handedness}
TwistGenerator generator_from_json(const nlohmann::json& j);

/// {omega, A, B, C} with subspaces given as row lists.
WallTriple wall_triple_from_json(const nlohmann::json& j);

}  // namespace mcgsig
