#include "swc/chambers.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace swc {
namespace {

Theta to_theta(const IntVec& v) {
    Theta t;
    t.reserve(v.size());
    for (long long x : v) t.push_back(Rat(x));
    return t;
}

int rank_of_zeros(const Arrangement& a, const std::vector<int>& signs, int dim) {
    std::vector<IntVec> rows;
    for (size_t i = 0; i < signs.size(); ++i)
        if (signs[i] == 0) rows.push_back(a.hyperplanes[i]);
    if (rows.empty()) return 0;
    // small exact Gaussian elimination over Q (integer cross-multiplication)
    int rank = 0;
    for (int c = 0; c < dim && rank < static_cast<int>(rows.size()); ++c) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows.size() && rows[piv][static_cast<size_t>(c)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
        for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
            long long x = rows[r][static_cast<size_t>(c)];
            if (x == 0) continue;
            long long p = rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
            for (int j = 0; j < dim; ++j)
                rows[r][static_cast<size_t>(j)] =
                    rows[r][static_cast<size_t>(j)] * p -
                    rows[static_cast<size_t>(rank)][static_cast<size_t>(j)] * x;
        }
        ++rank;
    }
    return rank;
}

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

bool sample_less(const IntVec& a, const IntVec& b) {
    long long na = 0, nb = 0;
    for (long long x : a) na = std::max(na, x < 0 ? -x : x);
    for (long long x : b) nb = std::max(nb, x < 0 ? -x : x);
    if (na != nb) return na < nb;
    return a < b;
}

bool on_any_wall(const StabilityContext& ctx, const Theta& theta) {
    return classes_at(ctx, theta).W.size() > 1;
}

int smallest_wall_label(const StabilityContext& ctx, const Theta& theta) {
    const Catalog& c = *ctx.cat;
    for (int i = 0; i < c.size(); ++i) {
        if (i == c.zero_entry() || !c.e(i).in_G) continue;
        if (wall_membership(ctx, theta, i) != WallPosition::off) return i;
    }
    return -1;
}

}  // namespace

Arrangement build_arrangement(const StabilityContext& ctx) {
    if (ctx.dim < 2 || ctx.dim > 3)
        throw PreconditionError("build_arrangement: only ranks 2 and 3 are supported");
    const Catalog& c = *ctx.cat;
    std::set<IntVec> hs;
    auto add = [&](const IntVec& v) {
        IntVec n = normalize_hyperplane(v);
        for (long long x : n)
            if (x != 0) {
                hs.insert(std::move(n));
                return;
            }
    };
    for (int i = 0; i < c.size(); ++i) {
        if (i == c.zero_entry() || !c.e(i).in_G || !c.e(i).pseudo_brick) continue;
        add(ctx.coord(i));
        for (int s : c.e(i).strict_sub_iso)
            if (s != c.zero_entry()) add(ctx.coord(s));
    }
    Arrangement a;
    a.hyperplanes.assign(hs.begin(), hs.end());
    const int k = static_cast<int>(a.hyperplanes.size());
    std::vector<int> signs;
    std::function<void()> dfs = [&]() {
        const int depth = static_cast<int>(signs.size());
        if (!sign_pattern_feasible(
                std::vector<IntVec>(a.hyperplanes.begin(), a.hyperplanes.begin() + depth), signs,
                ctx.dim))
            return;
        if (depth == k) {
            Arrangement::Face f;
            f.signs = signs;
            f.sample = sign_pattern_sample(a.hyperplanes, signs, ctx.dim);
            f.dim = ctx.dim - rank_of_zeros(a, signs, ctx.dim);
            a.faces.push_back(std::move(f));
            return;
        }
        for (int s : {-1, 0, 1}) {
            signs.push_back(s);
            dfs();
            signs.pop_back();
        }
    };
    dfs();
    return a;
}

std::vector<ChamberRecord> enumerate_chambers(const StabilityContext& ctx) {
    const Arrangement a = build_arrangement(ctx);
    const int n = ctx.dim;
    std::vector<int> cells;  // indices into a.faces
    std::map<std::vector<int>, int> cell_pos;  // signs -> position in `cells`
    for (size_t i = 0; i < a.faces.size(); ++i)
        if (a.faces[i].dim == n) {
            cell_pos[a.faces[i].signs] = static_cast<int>(cells.size());
            cells.push_back(static_cast<int>(i));
        }
    std::vector<ClassesAt> cls;
    cls.reserve(cells.size());
    for (int f : cells) {
        ClassesAt x = classes_at(ctx, to_theta(a.faces[static_cast<size_t>(f)].sample));
        if (x.W.size() > 1)
            throw InternalInconsistency("enumerate_chambers: open cell sample lies on a wall");
        cls.push_back(std::move(x));
    }
    Dsu dsu(static_cast<int>(cells.size()));
    std::vector<const Arrangement::Face*> separating;  // on-wall facets, for adjacency
    auto two_cells = [&](const Arrangement::Face& f, int z, int* c1, int* c2) {
        std::vector<int> s = f.signs;
        s[static_cast<size_t>(z)] = -1;
        auto it1 = cell_pos.find(s);
        s[static_cast<size_t>(z)] = 1;
        auto it2 = cell_pos.find(s);
        if (it1 == cell_pos.end() || it2 == cell_pos.end())
            throw InternalInconsistency("enumerate_chambers: facet without two incident cells");
        *c1 = it1->second;
        *c2 = it2->second;
    };
    for (const Arrangement::Face& f : a.faces) {
        if (f.dim == n - 1) {
            int z = -1;
            for (size_t i = 0; i < f.signs.size(); ++i)
                if (f.signs[i] == 0) z = static_cast<int>(i);
            int c1, c2;
            two_cells(f, z, &c1, &c2);
            if (on_any_wall(ctx, to_theta(f.sample)))
                separating.push_back(&f);
            else
                dsu.unite(c1, c2);
        } else if (n == 3 && f.dim == 1 && !on_any_wall(ctx, to_theta(f.sample))) {
            // every open cell around an off-wall edge is reachable near the edge
            int first = -1;
            for (size_t ci = 0; ci < cells.size(); ++ci) {
                const auto& cs = a.faces[static_cast<size_t>(cells[ci])].signs;
                bool compat = true;
                for (size_t i = 0; i < cs.size(); ++i)
                    if (f.signs[i] != 0 && f.signs[i] != cs[i]) compat = false;
                if (!compat) continue;
                if (first < 0)
                    first = static_cast<int>(ci);
                else
                    dsu.unite(first, static_cast<int>(ci));
            }
        }
    }
    // group cells, order regions by their smallest sample
    std::map<int, std::vector<int>> groups;
    for (size_t ci = 0; ci < cells.size(); ++ci) groups[dsu.find(static_cast<int>(ci))].push_back(static_cast<int>(ci));
    std::vector<std::pair<IntVec, int>> order;
    for (const auto& [root, members] : groups) {
        IntVec best = a.faces[static_cast<size_t>(cells[static_cast<size_t>(members[0])])].sample;
        for (int ci : members) {
            const IntVec& s = a.faces[static_cast<size_t>(cells[static_cast<size_t>(ci)])].sample;
            if (sample_less(s, best)) best = s;
        }
        order.emplace_back(best, root);
    }
    std::sort(order.begin(), order.end(),
              [](const auto& x, const auto& y) { return sample_less(x.first, y.first); });
    std::map<int, int> root_to_id;
    std::vector<ChamberRecord> out;
    for (const auto& [best, root] : order) {
        ChamberRecord r;
        r.id = static_cast<int>(out.size());
        root_to_id[root] = r.id;
        r.kind = ChamberRecord::open_chamber;
        r.sample = to_theta(best);
        const std::vector<int>& members = groups[root];
        const ClassesAt& c0 = cls[static_cast<size_t>(members[0])];
        for (int ci : members) {
            if (!(cls[static_cast<size_t>(ci)].P == c0.P) || !(cls[static_cast<size_t>(ci)].Q == c0.Q))
                throw InternalInconsistency("enumerate_chambers: P or Q varies inside one region");
            r.samples.push_back(to_theta(a.faces[static_cast<size_t>(cells[static_cast<size_t>(ci)])].sample));
        }
        for (int m = 2; static_cast<int>(r.samples.size()) < 3; ++m) {
            Theta t = r.sample;
            for (Rat& x : t) x *= Rat(m);
            r.samples.push_back(std::move(t));
        }
        r.P = c0.P;
        r.Q = c0.Q;
        out.push_back(std::move(r));
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (out[i].P == out[j].P)
                throw InternalInconsistency("enumerate_chambers: two regions share one P");
    std::set<std::tuple<int, int, int>> edges;
    for (const Arrangement::Face* f : separating) {
        int z = -1;
        for (size_t i = 0; i < f->signs.size(); ++i)
            if (f->signs[i] == 0) z = static_cast<int>(i);
        int c1, c2;
        two_cells(*f, z, &c1, &c2);
        int r1 = root_to_id[dsu.find(c1)], r2 = root_to_id[dsu.find(c2)];
        if (r1 == r2) continue;
        int label = smallest_wall_label(ctx, to_theta(f->sample));
        edges.insert({std::min(r1, r2), std::max(r1, r2), label});
    }
    for (const auto& [r1, r2, label] : edges) {
        out[static_cast<size_t>(r1)].adjacency.emplace_back(r2, label);
        out[static_cast<size_t>(r2)].adjacency.emplace_back(r1, label);
    }
    for (ChamberRecord& r : out) std::sort(r.adjacency.begin(), r.adjacency.end());
    return out;
}

bool same_chamber(const StabilityContext& ctx, const Theta& theta0, const Theta& theta1,
                  CrossingWitness* witness) {
    const Catalog& c = *ctx.cat;
    bool found = false;
    CrossingWitness best;
    auto violation = [&](int entry, const Rat& t) {
        if (!found || t < best.t || (t == best.t && entry < best.entry)) {
            best.entry = entry;
            best.t = t;
        }
        found = true;
    };
    for (int i = 0; i < c.size(); ++i) {
        if (i == c.zero_entry() || !c.e(i).in_G) continue;
        const Rat v0 = evaluate(ctx, theta0, i);
        const Rat v1 = evaluate(ctx, theta1, i);
        if (v0 == Rat(0) && v1 == Rat(0)) continue;  // the whole segment stays in the hyperplane
        if ((v0 > Rat(0) && v1 < Rat(0)) || (v0 < Rat(0) && v1 > Rat(0))) {
            const Rat t = v0 / (v0 - v1);
            Theta mid(theta0.size());
            for (size_t j = 0; j < mid.size(); ++j)
                mid[j] = theta0[j] + t * (theta1[j] - theta0[j]);
            if (wall_membership(ctx, mid, i) != WallPosition::off) violation(i, t);
        } else if (v0 == Rat(0)) {
            // endpoint on the wall: d/dt θ_t(M)|_0 = v1 must be <= 0
            if (v1 > Rat(0) && wall_membership(ctx, theta0, i) != WallPosition::off)
                violation(i, Rat(0));
        } else if (v1 == Rat(0)) {
            // endpoint on the wall: d/dt θ_t(M)|_1 = -v0 must be >= 0
            if (v0 > Rat(0) && wall_membership(ctx, theta1, i) != WallPosition::off)
                violation(i, Rat(1));
        }
    }
    if (found && witness) *witness = best;
    return !found;
}

SideComponents side_components(const StabilityContext& ctx, const Theta& theta) {
    const Catalog& c = *ctx.cat;
    const ClassesAt cls = classes_at(ctx, theta);
    if (cls.W.size() <= 1) throw PreconditionError("side_components: theta lies on no wall");
    SideComponents out;
    auto fill = [&](ChamberRecord& r, ChamberRecord::Kind kind, int id, const ClassSet& p,
                    const ClassSet& q) {
        r.id = id;
        r.kind = kind;
        r.sample = theta;
        for (int m = 1; m <= 3; ++m) {
            Theta t = theta;
            for (Rat& x : t) x *= Rat(m);
            r.samples.push_back(std::move(t));
        }
        r.P = p;
        r.Q = q;
    };
    // the green side carries the classes of the negative side of the wall,
    // the red side those of the positive side: P just below is P(θ), Q just
    // above is Q(θ), and the complementary classes are the closures
    fill(out.green, ChamberRecord::green_component, 0, cls.P, cls.Qbar);
    fill(out.red, ChamberRecord::red_component, 1, cls.Pbar, cls.Q);
    const WallKind wk = wall_kind_at(ctx, theta);
    if (wk.kind == WallKind::thin || wk.kind == WallKind::quasi_thin) {
        const int X = wk.X;
        // P̄ is generated by P together with the wall category.
        std::vector<int> gen = cls.P.members;
        for (int w : cls.W) gen.push_back(w);
        const ClassSet pbar = class_from(c, cls.Pbar.members);
        if (filt_closure(c, class_from(c, std::move(gen))) == pbar) {
            out.min_extension = X;
            // Strict minimality: adjoining any single member of P̄ \ P already
            // regenerates P̄. This holds on thin walls; on quasi-thin walls an
            // iterated self-extension nX generates a proper intermediate class,
            // since its strict quotients do not recover X.
            out.strictly_minimal = true;
            for (int m : pbar.members) {
                if (m == c.zero_entry() || cls.P.contains(m)) continue;
                std::vector<int> g = cls.P.members;
                g.push_back(m);
                if (filt_closure(c, class_from(c, std::move(g))) != pbar) {
                    out.strictly_minimal = false;
                    break;
                }
            }
        }
    }
    return out;
}

ConeCanon canonical_wall(const StabilityContext& ctx, int entry) {
    const WallDescriptor w = wall_descriptor(ctx, entry);
    return cone_canonical(w.normal, w.sub_normals, ctx.dim);
}

std::vector<std::pair<ConeCanon, std::vector<int>>> distinct_walls(const StabilityContext& ctx) {
    const Catalog& c = *ctx.cat;
    std::map<ConeCanon, std::vector<int>> grouped;
    for (int i = 0; i < c.size(); ++i) {
        if (i == c.zero_entry() || !c.e(i).in_G) continue;
        grouped[canonical_wall(ctx, i)].push_back(i);
    }
    return {grouped.begin(), grouped.end()};
}

}  // namespace swc
