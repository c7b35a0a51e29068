#pragma once

#include <string>

#include "wcm/expr.hpp"
#include "wcm/profiles.hpp"

namespace wcm {

// Deterministic disk layout: boundary vertices equally spaced on a circle,
// white vertices at the angular centroids of their leaves, one black vertex
// at the barycenter of the whites.
std::string render_web_svg(const Web& w);

// Two stacked lattice paths with the boxes shaded.
std::string render_profile_svg(const Rank2Profile& p);

} // namespace wcm
