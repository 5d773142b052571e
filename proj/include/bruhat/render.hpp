#pragma once

// SVG drawings of the alcove tessellation.
//
// One <polygon class="alcove"> per element with data-word and data-region
// attributes; region fills go from lightest to darkest gray for X, Theta1,
// Theta2, Theta, and the identity alcove is yellow. Each alcove side is
// stroked in the colour of its wall: s0 blue, s1 green, s2 red.

#include <string>

#include "bruhat/weyl.hpp"

namespace bruhat {

/// Every alcove of length at most radius, shaded by region.
std::string render_regions(int radius);

/// Alcoves of length at most max(radius, l(y)); members of [x, y] are shaded
/// and carry data-member="true". Throws if x is not below y.
std::string render_interval(const Element& x, const Element& y, int radius = -1);

} // namespace bruhat
