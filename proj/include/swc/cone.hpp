#pragma once

#include "swc/common.hpp"

namespace swc {

/* Homogeneous linear conditions a·x REL 0 over Q, used for face feasibility
 * in the stability-space arrangements (dimension <= 3 in practice). */
enum class Rel { eq, le, lt };
struct LinCon {
    std::vector<Rat> a;
    Rel rel = Rel::le;
};

/* Exact Fourier–Motzkin feasibility with strictness tracking; on success an
 * exact rational witness can be back-substituted. */
bool fm_feasible(const std::vector<LinCon>& cons, int dim, std::vector<Rat>* sample = nullptr);

/* v / gcd, direction preserved. Zero stays zero. */
IntVec primitive(IntVec v);
/* primitive with the first nonzero coordinate made positive. */
IntVec normalize_hyperplane(IntVec v);

/* Feasibility of a sign pattern over hyperplane normals: sign -1 means
 * n·x < 0, 0 means n·x = 0, +1 means n·x > 0. */
bool sign_pattern_feasible(const std::vector<IntVec>& normals, const std::vector<int>& signs,
                           int dim);
/* Deterministic integer witness of a feasible sign pattern: the first point
 * in increasing max-norm shells (lexicographic within a shell); falls back
 * to a scaled Fourier–Motzkin witness (the pattern is homogeneous, so
 * scaling is harmless). */
IntVec sign_pattern_sample(const std::vector<IntVec>& normals, const std::vector<int>& signs,
                           int dim);

/* Canonical form of the closed cone D = {x : x·m = 0, x·s <= 0 for s in
 * subs} inside R^dim (dim 2 or 3), for comparing pseudo-walls as sets.
 * `gens` are primitive extreme generators (for a half-plane: the two
 * boundary directions plus one inward direction); `full_plane` marks the
 * whole hyperplane. The hyperplane normal is part of the key exactly when
 * the cone spans dimension dim-1, which is when it determines the
 * hyperplane. */
struct ConeCanon {
    int ambient = 0;
    bool full_plane = false;
    IntVec normal;  // empty when not part of the key
    std::vector<IntVec> gens;

    bool operator==(const ConeCanon& o) const {
        return ambient == o.ambient && full_plane == o.full_plane && normal == o.normal &&
               gens == o.gens;
    }
    bool operator<(const ConeCanon& o) const {
        if (ambient != o.ambient) return ambient < o.ambient;
        if (full_plane != o.full_plane) return full_plane < o.full_plane;
        if (normal != o.normal) return normal < o.normal;
        return gens < o.gens;
    }
};
ConeCanon cone_canonical(const IntVec& m, const std::vector<IntVec>& subs, int dim);

}  // namespace swc
