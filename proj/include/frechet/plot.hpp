#ifndef FRECHET_PLOT_HPP
#define FRECHET_PLOT_HPP

#include "frechet/geometry.hpp"

#include <string>

namespace frechet {

// Free-space diagram of (tau, sigma) at delta as an SVG document. Free space is white,
// blocked space grey; a monotone matching is overlaid when d_F <= delta.
// 8 px per cell up to 256 cells per axis, sampled more coarsely beyond.
std::string free_space_svg(const Curve& tau, const Curve& sigma, double delta);

}  // namespace frechet

#endif
