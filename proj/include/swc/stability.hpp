#pragma once

#include "swc/smith.hpp"
#include "swc/strict.hpp"

namespace swc {

/* A stability point: exact rational coordinates on V_Λ (ambient) or on
 * V_G = Hom(K̄₀G, R) (reduced). */
using Theta = std::vector<Rat>;

/* The reduced Grothendieck group K̄₀G: generators are the G-members of the
 * catalog, relations are [A]−[B]+[C]=0 for every strict exact sequence plus
 * the collapse [nX]=n[X]; the presentation is resolved by Smith normal
 * form. */
struct ReducedK0 {
    std::vector<int> generators;               // in-G catalog indices, ascending
    IntMat relations;                          // one row per harvested relation
    std::vector<long long> invariant_factors;  // nonzero diagonal of the SNF
    int rank = 0;                              // free rank of K̄₀G
    std::vector<IntVec> basis;                 // basis elements as Z-combinations of generators
    std::vector<IntVec> coords;                // per generator: coordinates in that basis
    IntMat psi;                                // dim(K₀Λ) x rank; ψ[M] = dim M

    const IntVec& coord_of(const Catalog& c, int entry) const;
};
ReducedK0 reduced_K0(const Catalog& c);

/* One engine serves both stability spaces: a context assigns every G-member
 * an integer coordinate vector (its dimension vector, or its K̄₀G
 * coordinates) and all sign tests run against those. */
struct StabilityContext {
    const Catalog* cat = nullptr;
    int dim = 0;
    bool reduced = false;
    std::vector<IntVec> coords;  // indexed by catalog entry; empty off G

    const IntVec& coord(int entry) const;
};
StabilityContext ambient_context(const Catalog& c);
StabilityContext reduced_context(const Catalog& c, const ReducedK0& k);

Rat evaluate(const StabilityContext& ctx, const Theta& theta, int entry);

/* D_G(M) = {θ : θ(M)=0 and θ(M')≤0 for all strict subobjects M'}; the
 * interior additionally has θ(M')<0 for every nonzero proper M'. */
enum class WallPosition { off, interior, boundary };
WallPosition wall_membership(const StabilityContext& ctx, const Theta& theta, int entry);

/* Equality normal and inequality normals cutting out D_G(M). */
struct WallDescriptor {
    int label = -1;
    IntVec normal;                   // coordinate vector of M
    std::vector<IntVec> sub_normals;  // deduplicated strict-subobject coordinates
};
WallDescriptor wall_descriptor(const StabilityContext& ctx, int entry);

/* The six classes at θ. */
struct ClassesAt {
    ClassSet P, Pbar, Q, Qbar;
    std::vector<int> W, W0;  // sorted catalog indices, both containing 0
};
ClassesAt classes_at(const StabilityContext& ctx, const Theta& theta);

/* Exhaustive check that every nonzero strict endomorphism is invertible. */
bool is_pseudo_brick(const Catalog& c, int entry, int hom_dim_cap = 8);

struct WallKind {
    enum Kind { none, thin, quasi_thin, thick };
    Kind kind = none;
    std::vector<int> generators;  // nonzero members of W0(θ)
    int X = -1;                   // the single generator (thin / quasi-thin)
};
WallKind wall_kind_at(const StabilityContext& ctx, const Theta& theta);

/* U(M) = {θ : M ∈ P(θ)}, V(M) = {θ : M ∈ Q(θ)}, with closures; boundary
 * points of Ū(M) report a wall D_G(M̄) of a strict quotient containing θ in
 * its interior. */
struct RegionFlags {
    bool U = false, Ubar = false, V = false, Vbar = false;
    int boundary_wall = -1;
};
RegionFlags region_membership(const StabilityContext& ctx, const Theta& theta, int entry);

}  // namespace swc
