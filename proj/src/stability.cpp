#include "swc/stability.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace swc {

namespace {

/* Nonzero proper strict subobject / quotient iso classes: every proper
 * submodule has strictly smaller total dimension, so these are exactly the
 * strict lists minus the entry itself and zero. */
std::vector<int> proper_nonzero(const Catalog& c, const std::vector<int>& isos, int self) {
    std::vector<int> out;
    for (int i : isos)
        if (i != self && i != c.zero_entry()) out.push_back(i);
    return out;
}

}  // namespace

const IntVec& ReducedK0::coord_of(const Catalog& c, int entry) const {
    (void)c;
    auto it = std::lower_bound(generators.begin(), generators.end(), entry);
    if (it == generators.end() || *it != entry)
        throw PreconditionError("entry is not a K̄₀ generator (not in G)");
    return coords[static_cast<size_t>(it - generators.begin())];
}

ReducedK0 reduced_K0(const Catalog& c) {
    ReducedK0 out;
    for (int i = 0; i < c.size(); ++i)
        if (c.e(i).in_G) out.generators.push_back(i);
    const int g = static_cast<int>(out.generators.size());
    std::map<int, int> pos;
    for (int j = 0; j < g; ++j) pos[out.generators[j]] = j;

    std::vector<std::vector<long long>> rows;
    auto add_row = [&](const std::vector<long long>& r) { rows.push_back(r); };
    for (int j = 0; j < g; ++j) {
        const Entry& e = c.e(out.generators[j]);
        for (auto [a, q] : e.strict_ext_pairs) {
            std::vector<long long> r(static_cast<size_t>(g), 0);
            r[static_cast<size_t>(pos.at(a))] += 1;
            r[static_cast<size_t>(pos.at(out.generators[j]))] -= 1;
            r[static_cast<size_t>(pos.at(q))] += 1;
            add_row(r);
        }
        int base = -1, n = 0;
        if (c.is_iso_power(out.generators[j], &base, &n) && n >= 2) {
            std::vector<long long> r(static_cast<size_t>(g), 0);
            r[static_cast<size_t>(pos.at(out.generators[j]))] += 1;
            r[static_cast<size_t>(pos.at(base))] -= n;
            add_row(r);
        }
    }
    out.relations = IntMat(static_cast<int>(rows.size()), g);
    for (int i = 0; i < out.relations.rows; ++i)
        for (int j = 0; j < g; ++j) out.relations.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];

    SmithResult s = smith_normal_form(out.relations);
    for (long long d : s.diag)
        if (d != 0) out.invariant_factors.push_back(d);
    const int r = static_cast<int>(out.invariant_factors.size());
    out.rank = g - r;

    /* In the basis given by the columns of V (row vectors transform as
     * x ↦ xV) the relation lattice is diagonal, so the free part of K̄₀G is
     * spanned by the last `rank` new basis vectors. */
    out.coords.resize(static_cast<size_t>(g));
    for (int j = 0; j < g; ++j) {
        IntVec cj(static_cast<size_t>(out.rank), 0);
        for (int k = 0; k < out.rank; ++k) cj[static_cast<size_t>(k)] = s.V.at(j, r + k);
        out.coords[static_cast<size_t>(j)] = std::move(cj);
    }
    for (int k = 0; k < out.rank; ++k) {
        IntVec b(static_cast<size_t>(g), 0);
        for (int j = 0; j < g; ++j) b[static_cast<size_t>(j)] = s.Vinv.at(r + k, j);
        out.basis.push_back(std::move(b));
    }

    const int n = c.Q->n;
    out.psi = IntMat(n, out.rank);
    for (int k = 0; k < out.rank; ++k)
        for (int j = 0; j < g; ++j) {
            const DimVector& d = c.e(out.generators[j]).dim;
            for (int v = 0; v < n; ++v) out.psi.at(v, k) += s.Vinv.at(r + k, j) * d[static_cast<size_t>(v)];
        }
    for (int j = 0; j < g; ++j) {
        const DimVector& d = c.e(out.generators[j]).dim;
        for (int v = 0; v < n; ++v) {
            long long acc = 0;
            for (int k = 0; k < out.rank; ++k)
                acc += out.psi.at(v, k) * out.coords[static_cast<size_t>(j)][static_cast<size_t>(k)];
            if (acc != d[static_cast<size_t>(v)])
                throw InternalInconsistency("reduced_K0: ψ does not send classes to dimension vectors");
        }
    }
    return out;
}

const IntVec& StabilityContext::coord(int entry) const {
    const IntVec& v = coords[static_cast<size_t>(entry)];
    if (v.empty() && dim > 0 && entry != cat->zero_entry())
        throw PreconditionError("entry has no stability coordinates (not in G?)");
    return v;
}

StabilityContext ambient_context(const Catalog& c) {
    StabilityContext ctx;
    ctx.cat = &c;
    ctx.dim = c.Q->n;
    ctx.reduced = false;
    ctx.coords.resize(static_cast<size_t>(c.size()));
    for (int i = 0; i < c.size(); ++i) {
        IntVec v(static_cast<size_t>(c.Q->n));
        for (int j = 0; j < c.Q->n; ++j) v[static_cast<size_t>(j)] = c.e(i).dim[static_cast<size_t>(j)];
        ctx.coords[static_cast<size_t>(i)] = std::move(v);
    }
    return ctx;
}

StabilityContext reduced_context(const Catalog& c, const ReducedK0& k) {
    StabilityContext ctx;
    ctx.cat = &c;
    ctx.dim = k.rank;
    ctx.reduced = true;
    ctx.coords.resize(static_cast<size_t>(c.size()));
    for (size_t j = 0; j < k.generators.size(); ++j)
        ctx.coords[static_cast<size_t>(k.generators[j])] = k.coords[j];
    return ctx;
}

Rat evaluate(const StabilityContext& ctx, const Theta& theta, int entry) {
    if (static_cast<int>(theta.size()) != ctx.dim)
        throw PreconditionError("stability point has the wrong number of coordinates");
    const IntVec& d = ctx.coord(entry);
    Rat acc(0);
    for (int i = 0; i < ctx.dim; ++i) acc += theta[static_cast<size_t>(i)] * Rat(d[static_cast<size_t>(i)]);
    return acc;
}

WallPosition wall_membership(const StabilityContext& ctx, const Theta& theta, int entry) {
    const Catalog& c = *ctx.cat;
    if (!c.e(entry).in_G) throw PreconditionError("wall_membership: M not in G");
    if (evaluate(ctx, theta, entry) != Rat(0)) return WallPosition::off;
    std::vector<int> propers = proper_nonzero(c, c.e(entry).strict_sub_iso, entry);
    bool interior = true;
    for (int s : propers) {
        Rat v = evaluate(ctx, theta, s);
        if (v > Rat(0)) return WallPosition::off;
        if (v == Rat(0)) interior = false;
    }
    return interior ? WallPosition::interior : WallPosition::boundary;
}

WallDescriptor wall_descriptor(const StabilityContext& ctx, int entry) {
    const Catalog& c = *ctx.cat;
    if (!c.e(entry).in_G) throw PreconditionError("wall_descriptor: M not in G");
    WallDescriptor w;
    w.label = entry;
    w.normal = ctx.coord(entry);
    std::set<IntVec> subs;
    for (int s : c.e(entry).strict_sub_iso)
        if (s != c.zero_entry()) subs.insert(ctx.coord(s));
    w.sub_normals.assign(subs.begin(), subs.end());
    return w;
}

ClassesAt classes_at(const StabilityContext& ctx, const Theta& theta) {
    const Catalog& c = *ctx.cat;
    std::vector<Rat> val(static_cast<size_t>(c.size()), Rat(0));
    std::vector<bool> in_G(static_cast<size_t>(c.size()), false);
    for (int i = 0; i < c.size(); ++i) {
        if (!c.e(i).in_G) continue;
        in_G[static_cast<size_t>(i)] = true;
        val[static_cast<size_t>(i)] = evaluate(ctx, theta, i);
    }
    std::vector<int> P, Pbar, Q, Qbar, W, W0;
    for (int i = 0; i < c.size(); ++i) {
        if (!in_G[static_cast<size_t>(i)]) continue;
        const Entry& e = c.e(i);
        bool p = true, pbar = true, q = true, qbar = true, w = true;
        for (int z : e.strict_quot_iso) {
            if (z == c.zero_entry()) continue;
            const Rat& v = val[static_cast<size_t>(z)];
            if (!(v > Rat(0))) p = false;
            if (v < Rat(0)) pbar = false;
        }
        for (int z : e.strict_sub_iso) {
            if (z == c.zero_entry()) continue;
            const Rat& v = val[static_cast<size_t>(z)];
            if (!(v < Rat(0))) q = false;
            if (v > Rat(0)) qbar = false;
        }
        w = qbar && val[static_cast<size_t>(i)] == Rat(0);
        if (i == c.zero_entry()) p = pbar = q = qbar = w = true;
        if (p) P.push_back(i);
        if (pbar) Pbar.push_back(i);
        if (q) Q.push_back(i);
        if (qbar) Qbar.push_back(i);
        if (w) {
            W.push_back(i);
            if (i == c.zero_entry() || wall_membership(ctx, theta, i) == WallPosition::interior)
                W0.push_back(i);
        }
    }
    ClassesAt out;
    out.P = class_from(c, std::move(P), ClassKind::pseudo_torsion);
    out.Pbar = class_from(c, std::move(Pbar), ClassKind::pseudo_torsion);
    out.Q = class_from(c, std::move(Q), ClassKind::pseudo_torsionfree);
    out.Qbar = class_from(c, std::move(Qbar), ClassKind::pseudo_torsionfree);
    out.W = std::move(W);
    out.W0 = std::move(W0);
    return out;
}

bool is_pseudo_brick(const Catalog& c, int entry, int hom_dim_cap) {
    const Entry& e = c.e(entry);
    if (!e.in_G) throw PreconditionError("is_pseudo_brick: B not in G");
    if (entry == c.zero_entry()) return false;
    auto basis = hom_basis(e.rep, e.rep);
    int h = static_cast<int>(basis.size());
    if (h > hom_dim_cap)
        throw CapacityError("End-space exhaustion cap exceeded (dim " + std::to_string(h) + ")");
    int q = c.Q->base->q();
    long long total = 1;
    for (int i = 0; i < h; ++i) total *= q;
    for (long long code = 1; code < total; ++code) {
        RepMorphism f{e.rep, e.rep, {}};
        for (int v = 0; v < c.Q->n; ++v) f.f.emplace_back(c.Q->base, e.rep.fdim[v], e.rep.fdim[v]);
        long long t = code;
        for (int i = 0; i < h; ++i, t /= q) {
            auto ci = static_cast<uint8_t>(t % q);
            if (ci == 0) continue;
            for (int v = 0; v < c.Q->n; ++v)
                f.f[v] = f.f[v] + basis[static_cast<size_t>(i)].f[v].scaled(ci);
        }
        if (morphism_is_zero(f)) continue;
        bool invertible = true;
        for (int v = 0; v < c.Q->n; ++v)
            if (!f.f[v].is_invertible()) { invertible = false; break; }
        if (!invertible && is_strict_morphism(c, f)) return false;
    }
    return true;
}

WallKind wall_kind_at(const StabilityContext& ctx, const Theta& theta) {
    const Catalog& c = *ctx.cat;
    ClassesAt cl = classes_at(ctx, theta);
    WallKind out;
    for (int w : cl.W0)
        if (w != c.zero_entry()) out.generators.push_back(w);
    bool nonzero = false;
    for (int w : cl.W)
        if (w != c.zero_entry()) nonzero = true;
    if (!nonzero) {
        out.kind = WallKind::none;
        return out;
    }
    /* thin: one object strict-generates W(θ) within the catalog */
    for (int b : cl.W) {
        if (b == c.zero_entry()) continue;
        if (filt_closure(c, class_from(c, {b})).members == cl.W) {
            out.kind = WallKind::thin;
            out.X = b;
            return out;
        }
    }
    /* quasi-thin: all members are Λ-direct powers of a single object */
    int X = -1;
    bool quasi = true;
    for (int w : cl.W) {
        if (w == c.zero_entry()) continue;
        int base = -1, nn = 0;
        if (!c.is_iso_power(w, &base, &nn)) { quasi = false; break; }
        if (X == -1) X = base;
        if (base != X) { quasi = false; break; }
    }
    if (quasi) {
        out.kind = WallKind::quasi_thin;
        out.X = X;
        return out;
    }
    out.kind = WallKind::thick;
    return out;
}

RegionFlags region_membership(const StabilityContext& ctx, const Theta& theta, int entry) {
    const Catalog& c = *ctx.cat;
    if (!c.e(entry).in_G) throw PreconditionError("region_membership: M not in G");
    RegionFlags out;
    out.U = out.Ubar = out.V = out.Vbar = true;
    for (int z : c.e(entry).strict_quot_iso) {
        if (z == c.zero_entry()) continue;
        Rat v = evaluate(ctx, theta, z);
        if (!(v > Rat(0))) out.U = false;
        if (v < Rat(0)) out.Ubar = false;
    }
    for (int z : c.e(entry).strict_sub_iso) {
        if (z == c.zero_entry()) continue;
        Rat v = evaluate(ctx, theta, z);
        if (!(v < Rat(0))) out.V = false;
        if (v > Rat(0)) out.Vbar = false;
    }
    if (entry == c.zero_entry()) out.U = out.Ubar = out.V = out.Vbar = true;
    if (out.Ubar && !out.U) {
        for (int z : c.e(entry).strict_quot_iso) {
            if (z == c.zero_entry()) continue;
            if (wall_membership(ctx, theta, z) == WallPosition::interior) {
                out.boundary_wall = z;
                break;
            }
        }
    }
    return out;
}

}  // namespace swc
