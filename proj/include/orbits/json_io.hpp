#pragma once

#include <json.hpp>

#include "orbits/involution.hpp"
#include "orbits/moves.hpp"
#include "orbits/oracle.hpp"
#include "orbits/poset.hpp"
#include "orbits/rank_matrix.hpp"
#include "orbits/rs.hpp"
#include "orbits/tableau.hpp"

namespace orbits {

using nlohmann::json;

/// Dense n x n rows, lower triangle included.
json dense_json(const RankMatrix& r);
/// {"n": n, "rank_matrix": [[...], ...]}
json rank_matrix_json(const RankMatrix& r);
/// Accepts either a bare array of rows or an object with a "rank_matrix"
/// key. Throws Error{Parse} or Error{SizeMismatch}.
RankMatrix rank_matrix_from_json(const json& j);

json involution_json(const Involution& s);
json moves_json(const std::vector<MoveOutcome>& moves);
json intersection_json(const IntersectionResult& r);
json tableau_json(const TwoColumnTableau& t);
json report_json(const VerificationReport& rep);

}  // namespace orbits
