#pragma once

#include <optional>
#include <vector>

#include "swc/quiver.hpp"
#include "swc/subspace.hpp"

namespace swc {

/* A representation of a valued quiver: per-vertex F_q-space (dimension a
 * multiple of d_i, carrying the block-companion action J_i when d_i > 1)
 * plus per-arrow F_q-matrices mapping source to target column vectors. */
struct Rep {
    std::shared_ptr<const ValuedQuiver> Q;
    std::vector<int> fdim;     // F_q dimension per vertex
    std::vector<Mat> arrow;    // arrow a: fdim[target] x fdim[source]
    std::vector<Mat> action;   // J_i when d_i > 1 (block diagonal companion), else empty

    int total_fdim() const;
    bool is_zero() const { return total_fdim() == 0; }
};

using DimVector = IntVec;  // entry i = fdim[i] / d_i

Rep zero_rep(std::shared_ptr<const ValuedQuiver> Q);
Rep rep_from_dims(std::shared_ptr<const ValuedQuiver> Q, const std::vector<int>& fdim);
Rep direct_sum(const Rep& a, const Rep& b);
Rep sum_power(const Rep& a, int n);
DimVector dim_vector(const Rep& m);
void check_rep(const Rep& m);  // throws on malformed data

struct RepMorphism {
    Rep source, target;
    std::vector<Mat> f;  // per vertex, target-dim x source-dim
};

bool morphism_valid(const RepMorphism& m);
RepMorphism identity_morphism(const Rep& m);
RepMorphism compose(const RepMorphism& g, const RepMorphism& f);  // g after f
bool morphism_is_zero(const RepMorphism& m);

/* Basis of Hom(M, N) via the commuting-square linear system. */
std::vector<RepMorphism> hom_basis(const Rep& M, const Rep& N);
int hom_dim(const Rep& M, const Rep& N);

/* A submodule is a tuple of subspaces invariant under vertex actions and
 * arrow maps. */
bool is_submodule(const Rep& m, const std::vector<Subspace>& U);
std::pair<Rep, RepMorphism> subrep(const Rep& m, const std::vector<Subspace>& U);
std::pair<Rep, RepMorphism> quotient_rep(const Rep& m, const std::vector<Subspace>& U);

struct KernelImageCokernel {
    Rep ker, im, coker;
    RepMorphism ker_inc;     // ker -> source
    RepMorphism im_inc;      // im -> target
    RepMorphism im_proj;     // source ->> im
    RepMorphism coker_proj;  // target ->> coker
};
KernelImageCokernel kernel_image_cokernel(const RepMorphism& f);

std::vector<Subspace> kernel_subspaces(const RepMorphism& f);
std::vector<Subspace> image_subspaces(const RepMorphism& f);

/* Standalone Fitting-style decomposition (searches the endomorphism span up
 * to a capacity bound); the catalog uses a faster bottom-up divisor method. */
std::vector<Rep> decompose(const Rep& m);
bool is_isomorphic(const Rep& a, const Rep& b);
/* For indecomposable (or candidate) pairs: some hom-basis element invertible. */
std::optional<RepMorphism> find_iso(const Rep& a, const Rep& b);

/* Full submodule lattice of m (all invariant subspace tuples). */
std::vector<std::vector<Subspace>> submodule_lattice(const Rep& m);

}  // namespace swc
