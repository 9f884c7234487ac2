#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "swc/rep.hpp"

namespace swc {

/* The torsion class is always given in cogenerator form G = ⊥X. */
struct TorsionSpec {
    std::vector<DimVector> cogenerators;  // each resolves to a unique indecomposable
};

/* One submodule of a catalog entry, with its identification data. */
struct LatticeElem {
    std::vector<Subspace> U;
    int iso = -1;       // catalog index of the subrepresentation's iso class
    int quot_iso = -1;  // catalog index of the quotient's iso class
    bool in_G = false;
    bool strict = false;  // strict subobject (meaningful when the entry is in G)
    int witness = -1;     // lattice index of a violating B' when in_G && !strict
};

struct Entry {
    Rep rep;
    DimVector dim;
    int total = 0;               // total F_q dimension
    std::vector<int> summands;   // indecomposable entry indices, sorted, with multiplicity
    bool indecomposable = false;
    bool in_G = false;
    bool pseudo_brick = false;   // meaningful when in_G
    std::vector<LatticeElem> lattice;
    std::vector<int> strict_sub_iso;                 // sorted unique iso classes
    std::vector<int> strict_quot_iso;
    std::vector<std::pair<int, int>> strict_ext_pairs;  // (sub iso, quotient iso), strict elems
    std::vector<std::pair<int, int>> all_ext_pairs;     // over every submodule
};

struct CatalogOptions {
    int length_bound = 5;
    long long candidate_budget = 1 << 22;  // arrow-matrix tuples per dimension tuple
};

class Catalog {
public:
    std::shared_ptr<const ValuedQuiver> Q;
    TorsionSpec torsion;
    CatalogOptions opts;
    std::vector<int> cogen_entries;
    std::vector<Entry> entries;

    const Entry& e(int i) const { return entries[static_cast<size_t>(i)]; }
    int size() const { return static_cast<int>(entries.size()); }
    int zero_entry() const { return 0; }

    /* Identify the iso class of an arbitrary representation (total dim must
     * be within the length bound). */
    int identify(const Rep& r) const;
    /* Unique indecomposable with the given dimension vector. */
    int resolve_indec(const DimVector& d) const;
    std::optional<int> entry_by_summands(std::vector<int> multiset) const;

    /* True iff a nonzero strict morphism x -> y exists (both in G), decided
     * through the image factorization: some nonzero common iso class is a
     * strict quotient of x and a strict subobject of y. */
    bool strict_hom_exists(int x, int y) const;

    /* mI2-style detection: entry is n copies of one indecomposable. */
    bool is_iso_power(int entry, int* base = nullptr, int* n = nullptr) const;

    std::string entry_name(int i) const;  // deterministic human-readable label

    mutable std::unordered_map<std::string, int> identify_cache_;
    std::map<std::vector<int>, int> summands_to_entry_;
};

Catalog build_catalog(std::shared_ptr<const ValuedQuiver> Q, const TorsionSpec& torsion,
                      const CatalogOptions& opts);

}  // namespace swc
