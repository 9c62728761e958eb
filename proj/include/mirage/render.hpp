#pragma once

#include <array>
#include <map>

#include "mirage/wpoly.hpp"

namespace mirage {

struct RenderScene {
    std::array<Rat, 4> window; // x0, x1, y0, y1 in the two free coordinates
    int resolution = 256;
};

struct RenderStats {
    std::map<long, long> cells_by_value;
};

// Samples Geom X(Phi,tau) on V(Phi,lambda) at exact cell centers of the
// window grid, parametrized by the free coordinates of the lowest basic
// subset. Requires d = 2. Palette: +1 blue, -1 red, -2 magenta, 0 skipped,
// anything else gray; the N lines x_i = 0 are drawn exactly on top.
std::string render_svg(const Configuration& cfg, const Tope& tau, const RatVec& lambda,
                       const RenderScene& scene, RenderStats* stats = nullptr);

// Window from the bounding box of the feasible candidate vertices of every
// nonzero quadrant, padded by a quarter of the span.
RenderScene default_scene(const Configuration& cfg, const Tope& tau, const RatVec& lambda,
                          int resolution);

} // namespace mirage
