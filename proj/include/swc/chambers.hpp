#pragma once

#include "swc/cone.hpp"
#include "swc/stability.hpp"

namespace swc {

/* Central hyperplane arrangement underlying the stability diagram: one
 * hyperplane per pseudo-brick coordinate vector and per strict-subobject
 * coordinate of a pseudo-brick, so that wall membership is constant on
 * every face. Faces carry their sign vector, a deterministic integer
 * sample, and their linear dimension. */
struct Arrangement {
    std::vector<IntVec> hyperplanes;  // normalized primitive normals, sorted
    struct Face {
        std::vector<int> signs;  // -1/0/+1 per hyperplane
        IntVec sample;
        int dim = 0;
    };
    std::vector<Face> faces;
};
Arrangement build_arrangement(const StabilityContext& ctx);

struct ChamberRecord {
    enum Kind { open_chamber, green_component, red_component };
    int id = -1;
    Kind kind = open_chamber;
    Theta sample;
    std::vector<Theta> samples;  // at least 3 classification witnesses
    ClassSet P, Q;
    std::vector<std::pair<int, int>> adjacency;  // (neighbor id, separating wall label)
};

/* Path components of the complement of the union of pseudo-walls (the walls
 * themselves, not their closure): full-dimensional arrangement cells merged
 * across every codimension-1 or codimension-2 face whose sample lies on no
 * pseudo-wall. Verifies that P is constant per region and pairwise distinct
 * across regions. */
std::vector<ChamberRecord> enumerate_chambers(const StabilityContext& ctx);

struct CrossingWitness {
    int entry = -1;  // wall label
    Rat t;           // crossing time along the segment
};
/* P(θ0) == P(θ1): the segment crosses no wall transversely and the endpoint
 * derivative conditions hold where an endpoint lies on a wall. */
bool same_chamber(const StabilityContext& ctx, const Theta& theta0, const Theta& theta1,
                  CrossingWitness* witness = nullptr);

/* Green and red side components of the wall(s) through θ. The green record
 * carries the classes of the negative side (P(θ), Q̄(θ)), the red record
 * those of the positive side (P̄(θ), Q(θ)). On a thin or quasi-thin wall
 * with generator X, `min_extension` is X once P̄(θ) is certified to be the
 * filt-closure of P(θ) and the wall category; `strictly_minimal` certifies
 * in addition that no pseudo-torsion class lies strictly between P(θ) and
 * P̄(θ) over the catalog (true on thin walls; quasi-thin walls admit
 * intermediates generated by the iterated self-extensions nX). */
struct SideComponents {
    ChamberRecord green, red;
    int min_extension = -1;  // catalog entry of the extending object, or -1
    bool strictly_minimal = false;
};
SideComponents side_components(const StabilityContext& ctx, const Theta& theta);

/* Pseudo-walls as sets: canonical cone of D(M) and the grouping of all
 * nonzero G-members by equal wall sets. */
ConeCanon canonical_wall(const StabilityContext& ctx, int entry);
std::vector<std::pair<ConeCanon, std::vector<int>>> distinct_walls(const StabilityContext& ctx);

}  // namespace swc
