#pragma once

#include "swc/stability.hpp"

namespace swc {

/* Linear green path θ_t = θ0 + t·η with every η coordinate positive: then
 * d/dt θ_t(M) = η·dim M > 0 for every nonzero M, so every wall is crossed
 * in the strictly increasing direction and the limit signs at t → ±∞ are
 * automatic. */
struct GreenPathLinear {
    Theta theta0, eta;
    Theta at(const Rat& t) const;
};
GreenPathLinear validate_green(const StabilityContext& ctx, Theta theta0, Theta eta);

/* One wall-crossing time: the pseudo-bricks whose walls contain θ_t, and
 * the kind of the wall point. */
struct CrossingEvent {
    Rat t;
    std::vector<int> labels;  // sorted catalog indices of bricks with θ_t ∈ D(B)
    WallKind kind;
};
std::vector<CrossingEvent> crossing_schedule(const StabilityContext& ctx,
                                             const GreenPathLinear& path);

/* All pseudo-bricks of the W₀ slices along the path, indexed by crossing
 * time; forward Hom-orthogonality is re-verified exhaustively. */
struct FHOSequence {
    std::vector<std::pair<int, Rat>> entries;  // (brick, π) sorted by (π, brick)
};
FHOSequence fho_sequence(const StabilityContext& ctx, const GreenPathLinear& path);

struct HNFiltration {
    int module = -1;
    std::vector<int> chain;   // M = chain[0] ⊃ … ⊃ chain.back() = 0, iso classes
    std::vector<Rat> times;   // t₁ > … > t_m, one per proper step
    std::vector<int> slices;  // chain[k]/chain[k+1] ∈ W(θ_{t_{k+1}})
    std::vector<std::vector<int>> refinements;  // per slice: W₀ subquotients, top first
};
/* Constructive proof: t₁ = the maximal vanishing time over nonzero strict
 * quotients, X₁ = the maximal such quotient (largest total dimension, then
 * lexicographically largest dimension vector), M₁ = ker(M ↠ X₁); recurse.
 * Each slice is refined inside W(θ_{t_k}) to a strict chain with
 * subquotients in W₀(θ_{t_k}). */
HNFiltration hn_filtration(const StabilityContext& ctx, int entry, const GreenPathLinear& path);

/* Number of distinct valid HN chains (slice, time sequences) of the entry,
 * by exhaustive search over the strict lattice; 1 certifies uniqueness. */
int count_hn_chains(const StabilityContext& ctx, int entry, const GreenPathLinear& path);

/* M ∈ P(θ_{t0}) iff every slice time < t0; M ∈ Q(θ_{t0}) iff every slice
 * time > t0; cross-checked against classes_at. */
struct HNMembership {
    bool in_P = false, in_Q = false;
};
HNMembership membership_via_hn(const StabilityContext& ctx, int entry, const Rat& t0,
                               const GreenPathLinear& path);

/* Maximality of the FHO sequence (no further brick can be inserted at any
 * crossing time or midpoint without an FHO violation) and minimality of the
 * HN stratification (no member can be dropped: its own HN filtration
 * through the remaining bricks fails). */
struct ExtremalityReport {
    int candidates_checked = 0;
    int violations = 0;
    int isomorphic_hits = 0;
    bool maximality_ok = false;
    int members_checked = 0;
    bool minimality_ok = false;
};
ExtremalityReport fho_extremality_checks(const StabilityContext& ctx,
                                         const GreenPathLinear& path);

}  // namespace swc
