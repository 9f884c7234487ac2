#include "swc/greenpath.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "swc/common.hpp"

namespace swc {

namespace {

Rat path_dot(const Theta& t, const IntVec& v) {
    Rat s(0);
    for (size_t i = 0; i < v.size(); ++i) s += t[i] * Rat(v[i]);
    return s;
}

/* unique zero of θ_t(m) = θ0(m) + t·η(m); η(m) > 0 for nonzero m */
Rat vanish_time(const StabilityContext& ctx, const GreenPathLinear& path, int entry) {
    const Rat num = path_dot(path.theta0, ctx.coord(entry));
    const Rat den = path_dot(path.eta, ctx.coord(entry));
    if (den <= Rat(0)) throw InternalInconsistency("vanish_time: non-increasing coordinate");
    return -num / den;
}

/* classes_at is the expensive part; memoize per path time */
struct SliceCache {
    const StabilityContext& ctx;
    const GreenPathLinear& path;
    std::map<Rat, ClassesAt> at;
    const ClassesAt& get(const Rat& t) {
        auto it = at.find(t);
        if (it == at.end()) it = at.emplace(t, classes_at(ctx, path.at(t))).first;
        return it->second;
    }
};

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

}  // namespace

Theta GreenPathLinear::at(const Rat& t) const {
    Theta out = theta0;
    for (size_t i = 0; i < out.size(); ++i) out[i] += t * eta[i];
    return out;
}

GreenPathLinear validate_green(const StabilityContext& ctx, Theta theta0, Theta eta) {
    if (static_cast<int>(theta0.size()) != ctx.dim || static_cast<int>(eta.size()) != ctx.dim)
        throw PreconditionError("validate_green: dimension mismatch");
    for (size_t i = 0; i < eta.size(); ++i)
        if (eta[i] <= Rat(0))
            throw PreconditionError("validate_green: eta coordinate " + std::to_string(i) +
                                    " is not positive");
    GreenPathLinear p{std::move(theta0), std::move(eta)};
    // condition (1) of a green path: strictly increasing on every nonzero member
    const Catalog& c = *ctx.cat;
    for (int m = 0; m < c.size(); ++m) {
        if (m == c.zero_entry() || !c.e(m).in_G) continue;
        if (path_dot(p.eta, ctx.coord(m)) <= Rat(0))
            throw PreconditionError("validate_green: direction not increasing on " +
                                    c.entry_name(m));
    }
    return p;
}

std::vector<CrossingEvent> crossing_schedule(const StabilityContext& ctx,
                                             const GreenPathLinear& path) {
    const Catalog& c = *ctx.cat;
    std::map<Rat, std::vector<int>> grouped;
    for (int m = 0; m < c.size(); ++m) {
        if (m == c.zero_entry() || !c.e(m).in_G || !c.e(m).pseudo_brick) continue;
        const Rat t = vanish_time(ctx, path, m);
        // the schedule reports the crossings ahead of the start point; walls
        // already behind θ0 (negative crossing times) are not listed
        if (t < Rat(0)) continue;
        if (wall_membership(ctx, path.at(t), m) != WallPosition::off) grouped[t].push_back(m);
    }
    std::vector<CrossingEvent> out;
    for (auto& [t, labels] : grouped) {
        CrossingEvent ev;
        ev.t = t;
        ev.labels = std::move(labels);
        ev.kind = wall_kind_at(ctx, path.at(t));
        out.push_back(std::move(ev));
    }
    return out;
}

FHOSequence fho_sequence(const StabilityContext& ctx, const GreenPathLinear& path) {
    const Catalog& c = *ctx.cat;
    FHOSequence seq;
    for (const CrossingEvent& ev : crossing_schedule(ctx, path)) {
        const ClassesAt cls = classes_at(ctx, path.at(ev.t));
        for (int m : cls.W0) {
            if (m == c.zero_entry()) continue;
            if (!c.e(m).pseudo_brick)
                throw InternalInconsistency("fho_sequence: non-brick in W0: " + c.entry_name(m));
            seq.entries.emplace_back(m, ev.t);
        }
    }
    std::sort(seq.entries.begin(), seq.entries.end(),
              [](const auto& a, const auto& b) { return std::tie(a.second, a.first) <
                                                        std::tie(b.second, b.first); });
    // forward Hom-orthogonality, exhaustively over ordered pairs
    for (const auto& [b, pi] : seq.entries)
        for (const auto& [b2, pi2] : seq.entries) {
            if (b == b2 || pi > pi2) continue;
            if (c.strict_hom_exists(b, b2))
                throw InternalInconsistency("fho_sequence: strict morphism " + c.entry_name(b) +
                                            " -> " + c.entry_name(b2));
        }
    return seq;
}

namespace {

/* (total dim, lex dim vector) order used to pick "a maximal strict quotient" */
bool dim_less(const Catalog& c, int a, int b) {
    return std::make_pair(c.e(a).total, c.e(a).dim) < std::make_pair(c.e(b).total, c.e(b).dim);
}

/* top slice of the constructive proof: maximal vanishing time over nonzero
 * strict quotients, then the maximal quotient at that time; returns
 * (slice, kernel, time) */
struct TopSlice {
    int slice = -1, kernel = -1;
    Rat t;
};
TopSlice top_slice(const StabilityContext& ctx, const GreenPathLinear& path, int entry) {
    const Catalog& c = *ctx.cat;
    TopSlice best;
    for (int q : c.e(entry).strict_quot_iso) {
        if (q == c.zero_entry()) continue;
        const Rat t = vanish_time(ctx, path, q);
        if (best.slice < 0 || t > best.t || (t == best.t && dim_less(c, best.slice, q))) {
            best.slice = q;
            best.t = t;
        }
    }
    if (best.slice < 0) throw InternalInconsistency("top_slice: no nonzero strict quotient");
    // the kernel iso class is determined by the slice (verified)
    for (const LatticeElem& le : c.e(entry).lattice) {
        if (!le.strict || le.quot_iso != best.slice) continue;
        if (best.kernel >= 0 && best.kernel != le.iso)
            throw InternalInconsistency("top_slice: ambiguous kernel of the maximal quotient");
        best.kernel = le.iso;
    }
    if (best.kernel < 0) throw InternalInconsistency("top_slice: quotient without lattice elem");
    return best;
}

/* strict chain of a W(θ) member with subquotients in W₀(θ), top first */
std::vector<int> refine_slice(const StabilityContext& ctx, int entry, const ClassesAt& cls) {
    const Catalog& c = *ctx.cat;
    std::vector<int> out;
    int cur = entry;
    while (cur != c.zero_entry()) {
        if (contains(cls.W0, cur)) {  // the remaining bottom is itself a W₀ object
            out.push_back(cur);
            break;
        }
        int slice = -1, kernel = -1;
        for (const LatticeElem& le : c.e(cur).lattice) {
            if (!le.strict || le.quot_iso == c.zero_entry()) continue;
            if (!contains(cls.W0, le.quot_iso) || !contains(cls.W, le.iso)) continue;
            if (slice < 0 || le.quot_iso < slice) {
                slice = le.quot_iso;
                kernel = le.iso;
            }
        }
        if (slice < 0)
            throw InternalInconsistency("refine_slice: no W0 quotient for " + c.entry_name(cur));
        out.push_back(slice);
        cur = kernel;
    }
    return out;
}

}  // namespace

HNFiltration hn_filtration(const StabilityContext& ctx, int entry, const GreenPathLinear& path) {
    const Catalog& c = *ctx.cat;
    if (!c.e(entry).in_G) throw PreconditionError("hn_filtration: module not in G");
    HNFiltration hn;
    hn.module = entry;
    hn.chain.push_back(entry);
    int cur = entry;
    while (cur != c.zero_entry()) {
        const TopSlice top = top_slice(ctx, path, cur);
        hn.chain.push_back(top.kernel);
        hn.times.push_back(top.t);
        hn.slices.push_back(top.slice);
        cur = top.kernel;
    }
    SliceCache cache{ctx, path};
    for (size_t k = 0; k < hn.times.size(); ++k) {
        if (k > 0 && !(hn.times[k] < hn.times[k - 1]))
            throw InternalInconsistency("hn_filtration: slice times not decreasing");
        const ClassesAt& cls = cache.get(hn.times[k]);
        if (!contains(cls.W, hn.slices[k]))
            throw InternalInconsistency("hn_filtration: slice not in its wall category");
        hn.refinements.push_back(refine_slice(ctx, hn.slices[k], cls));
    }
    return hn;
}

namespace {

void chain_search(const StabilityContext& ctx, const GreenPathLinear& path, int cur,
                  std::vector<std::pair<int, Rat>>& prefix,
                  std::set<std::vector<std::pair<int, Rat>>>& found) {
    const Catalog& c = *ctx.cat;
    if (cur == c.zero_entry()) {
        found.insert(prefix);
        return;
    }
    std::set<std::pair<int, int>> seen;  // (slice, kernel) iso pairs
    for (const LatticeElem& le : c.e(cur).lattice) {
        if (!le.strict || le.quot_iso == c.zero_entry()) continue;
        if (!seen.insert({le.quot_iso, le.iso}).second) continue;
        const Rat t = vanish_time(ctx, path, le.quot_iso);
        if (!prefix.empty() && !(t < prefix.back().second)) continue;
        if (wall_membership(ctx, path.at(t), le.quot_iso) == WallPosition::off) continue;
        prefix.emplace_back(le.quot_iso, t);
        chain_search(ctx, path, le.iso, prefix, found);
        prefix.pop_back();
    }
}

}  // namespace

int count_hn_chains(const StabilityContext& ctx, int entry, const GreenPathLinear& path) {
    if (entry == ctx.cat->zero_entry()) return 1;
    std::vector<std::pair<int, Rat>> prefix;
    std::set<std::vector<std::pair<int, Rat>>> found;
    chain_search(ctx, path, entry, prefix, found);
    return static_cast<int>(found.size());
}

HNMembership membership_via_hn(const StabilityContext& ctx, int entry, const Rat& t0,
                               const GreenPathLinear& path) {
    const Catalog& c = *ctx.cat;
    HNMembership out;
    if (entry == c.zero_entry()) {
        out.in_P = out.in_Q = true;
    } else {
        const HNFiltration hn = hn_filtration(ctx, entry, path);
        out.in_P = std::all_of(hn.times.begin(), hn.times.end(),
                               [&](const Rat& t) { return t < t0; });
        out.in_Q = std::all_of(hn.times.begin(), hn.times.end(),
                               [&](const Rat& t) { return t > t0; });
    }
    const ClassesAt cls = classes_at(ctx, path.at(t0));
    if (out.in_P != cls.P.contains(entry) || out.in_Q != cls.Q.contains(entry))
        throw InternalInconsistency("membership_via_hn: disagreement with classes_at for " +
                                    c.entry_name(entry));
    return out;
}

namespace {

/* Does `entry` admit a strict HN filtration whose slices all come from
 * `allowed` (brick -> time) with strictly decreasing times below `bound`? */
bool filterable_through(const Catalog& c, int entry, const std::map<int, Rat>& allowed,
                        const Rat* bound) {
    if (entry == c.zero_entry()) return true;
    std::set<std::pair<int, int>> seen;
    for (const LatticeElem& le : c.e(entry).lattice) {
        if (!le.strict || le.quot_iso == c.zero_entry()) continue;
        if (!seen.insert({le.quot_iso, le.iso}).second) continue;
        auto it = allowed.find(le.quot_iso);
        if (it == allowed.end()) continue;
        if (bound && !(it->second < *bound)) continue;
        if (filterable_through(c, le.iso, allowed, &it->second)) return true;
    }
    return false;
}

}  // namespace

ExtremalityReport fho_extremality_checks(const StabilityContext& ctx,
                                         const GreenPathLinear& path) {
    const Catalog& c = *ctx.cat;
    const FHOSequence seq = fho_sequence(ctx, path);
    ExtremalityReport rep;

    std::set<int> members;
    std::map<int, Rat> member_time;
    for (const auto& [b, pi] : seq.entries) {
        members.insert(b);
        member_time.emplace(b, pi);
    }
    std::vector<Rat> candidate_times;
    for (size_t i = 0; i < seq.entries.size(); ++i) {
        candidate_times.push_back(seq.entries[i].second);
        if (i + 1 < seq.entries.size() && seq.entries[i].second != seq.entries[i + 1].second)
            candidate_times.push_back((seq.entries[i].second + seq.entries[i + 1].second) /
                                      Rat(2));
    }

    // maximality: every brick not already in the sequence produces an FHO
    // violation at every candidate insertion time
    rep.maximality_ok = true;
    for (int b0 = 0; b0 < c.size(); ++b0) {
        if (b0 == c.zero_entry() || !c.e(b0).in_G || !c.e(b0).pseudo_brick) continue;
        if (members.count(b0)) {
            ++rep.isomorphic_hits;
            continue;
        }
        for (const Rat& tau : candidate_times) {
            ++rep.candidates_checked;
            bool violated = false;
            for (const auto& [b, pi] : seq.entries) {
                if (pi <= tau && c.strict_hom_exists(b, b0)) violated = true;
                if (tau <= pi && c.strict_hom_exists(b0, b)) violated = true;
                if (violated) break;
            }
            if (violated)
                ++rep.violations;
            else
                rep.maximality_ok = false;
        }
    }

    // minimality: no member is HN-filterable through the remaining members
    rep.minimality_ok = true;
    for (int b : members) {
        ++rep.members_checked;
        std::map<int, Rat> rest = member_time;
        rest.erase(b);
        if (filterable_through(c, b, rest, nullptr)) rep.minimality_ok = false;
    }
    return rep;
}

}  // namespace swc
