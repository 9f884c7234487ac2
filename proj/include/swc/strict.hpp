#pragma once

#include <string>
#include <vector>

#include "swc/catalog.hpp"

namespace swc {

/* A set of catalog iso classes together with the closure certificate it
 * carries (re-verifiable through the is_pseudo_* predicates below). */
enum class ClassKind { none, pseudo_torsion, pseudo_torsionfree, pseudo_wide };

struct ClassSet {
    std::vector<int> members;  // sorted, unique, always contains the zero entry
    ClassKind kind = ClassKind::none;

    bool contains(int idx) const;
    bool operator==(const ClassSet& o) const { return members == o.members; }
};

/* Normalize a member list into a ClassSet (sorts, dedups, adjoins zero);
 * every member must lie in G. */
ClassSet class_from(const Catalog& c, std::vector<int> members,
                    ClassKind kind = ClassKind::none);
/* add(X): all catalog entries whose indecomposable summands come from the
 * given indecomposables. */
ClassSet add_of(const Catalog& c, const std::vector<int>& indecs);
/* All of G within the catalog. */
ClassSet full_class(const Catalog& c);

bool in_torsion_class(const Catalog& c, const Rep& M);

/* Strict-subobject test for an arbitrary submodule A of B: every subobject
 * B' of B (submodule lying in G) must satisfy A∩B' ∈ G.  On failure the
 * violating B' is reported through `witness`.  Uses the precomputed lattice
 * when B is a catalog canonical representative. */
bool is_strict_subobject(const Catalog& c, const Rep& B, const std::vector<Subspace>& A,
                         std::vector<Subspace>* witness = nullptr);

/* Complete iso-class lists over the submodule lattice of a catalog entry
 * (which must lie in G).  Subquotients are computed by the nested-pair
 * characterization B/A with A ⊆ B both strict; the two alternative
 * characterizations are exposed for cross-checking. */
std::vector<int> strict_subobjects(const Catalog& c, int entry);
std::vector<int> strict_quotients(const Catalog& c, int entry);
std::vector<int> strict_subquotients(const Catalog& c, int entry);
std::vector<int> strict_subquotients_via_subs(const Catalog& c, int entry);
std::vector<int> strict_subquotients_via_quots(const Catalog& c, int entry);

/* f is strict iff ker f lies in G and is a strict subobject of the source
 * and im f is a strict subobject of the target. */
bool is_strict_morphism(const Catalog& c, const RepMorphism& f);

/* The 3×3 grid obtained from a strict subobject B' ⊆ B and a fibration
 * p: B ↠ C.  Rows are (sub, ambient, quotient); columns are (kernel part,
 * middle, image part).  All nine objects lie in G and all maps are strict. */
struct MainDiagram {
    Rep obj[3][3];
    RepMorphism row_map[3][2];  // row r: obj[r][0] -> obj[r][1] -> obj[r][2]
    RepMorphism col_map[2][3];  // col c: obj[0][c] -> obj[1][c] -> obj[2][c]
};
MainDiagram main_diagram(const Catalog& c, const Rep& B, const std::vector<Subspace>& Bp,
                         const RepMorphism& p);

/* Perpendicular classes under strict morphisms.  X^⊥ is pseudo-torsionfree
 * and ⊥Y is pseudo-torsion; existence of a nonzero strict morphism is
 * decided through the image factorization (a nonzero common iso class that
 * is a strict quotient of the source and a strict subobject of the target),
 * with the span-exhaustion decision kept as a cross-check oracle. */
ClassSet perp_right(const Catalog& c, const ClassSet& X);
ClassSet perp_left(const Catalog& c, const ClassSet& Y);
bool strict_hom_exists_exhaustive(const Catalog& c, int x, int y, int hom_dim_cap = 6);

/* Least fixed point of strict quotients and strict extensions over the
 * catalog: the smallest pseudo-torsion class containing X. */
ClassSet filt_closure(const Catalog& c, const ClassSet& X);

/* tM = the maximal strict subobject of M in P; fM = M/tM in P^⊥. */
struct TorsionSplit {
    int t_entry = 0;
    int f_entry = 0;
    std::vector<Subspace> tU;
};
TorsionSplit torsion_pair_split(const Catalog& c, int entry, const ClassSet& P);

struct ClosureViolation {
    std::string reason;
    int a = -1, b = -1, middle = -1;  // offending iso classes, when applicable
};
bool is_pseudo_torsion_class(const Catalog& c, const ClassSet& S,
                             ClosureViolation* violation = nullptr);
bool is_pseudo_torsionfree(const Catalog& c, const ClassSet& S,
                           ClosureViolation* violation = nullptr);
bool is_pseudo_wide(const Catalog& c, const ClassSet& S,
                    ClosureViolation* violation = nullptr, int hom_dim_cap = 8);

/* { x ∈ X : no nonzero strict morphism P0 → x }. */
ClassSet relative_perp(const Catalog& c, const ClassSet& P0, const ClassSet& X);

/* A ghost records an indecomposable A ∉ G embedded in an indecomposable
 * B ∈ G with quotient C = B/A ∈ G; the ghost proper is the non-strict
 * epimorphism B ↠ C. */
struct Ghost {
    int missing = -1;   // A
    int ambient = -1;   // B
    int quotient = -1;  // C
    RepMorphism embed;  // A -> B
    RepMorphism quot;   // B ->> C
};
std::vector<Ghost> find_ghosts(const Catalog& c);

}  // namespace swc
