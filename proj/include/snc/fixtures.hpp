#pragma once

// Built-in desk-scale fixtures.

#include <string>
#include <vector>

#include "snc/fans.hpp"
#include "snc/weight_ss.hpp"

namespace snc {

/// Rank-2 window of cusp "F": rays v_k = M^k (1,0) for k = 0..length, cones
/// <v_k, v_{k+1}>, and the single identification M^power from F to itself.
FanSystem hilbert_cusp_window(const IntMatrix& m, std::size_t length, std::size_t power = 1);

/// P^1 with the two points 0 and infinity as boundary components.
StrataComplex cstar_fixture();

/// P^1 x P^1 with its four toric boundary lines.
StrataComplex p1xp1_fixture();

std::vector<std::string> fixture_names();

}  // namespace snc
