#pragma once

#include <string>

#include "swc/chambers.hpp"

namespace swc {

/* Rendering options for the stability diagrams.  Rank-2 diagrams are drawn
 * in the plane directly; rank-3 diagrams intersect every wall with the unit
 * sphere and project the resulting arcs stereographically from `pole`.
 * Arcs are polylines sampled at `segments` rational parameters, so repeated
 * runs are byte-identical. */
struct DiagramSpec {
    IntVec pole = {3, 5, 7};  // integer direction; must lie on no wall
    int segments = 128;
    double radius = 150.0;  // pixel radius of the unit circle / equator image
};

std::string render_rank2(const StabilityContext& ctx, const std::vector<ChamberRecord>& chambers,
                         const DiagramSpec& spec = {});
std::string render_rank3_stereo(const StabilityContext& ctx,
                                const std::vector<ChamberRecord>& chambers,
                                const DiagramSpec& spec = {});

}  // namespace swc
