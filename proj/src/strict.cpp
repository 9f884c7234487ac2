#include "swc/strict.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace swc {

namespace {

std::string rep_bytes(const Rep& r) {
    std::string out;
    for (int v = 0; v < r.Q->n; ++v) out += static_cast<char>(r.fdim[v]);
    out.push_back('|');
    for (const auto& A : r.arrow)
        out.append(reinterpret_cast<const char*>(A.entries().data()), A.entries().size());
    return out;
}

/* Catalog index whose canonical representative is bit-identical to r, or -1. */
int canonical_entry(const Catalog& c, const Rep& r) {
    DimVector d = dim_vector(r);
    std::string key = rep_bytes(r);
    for (int i = 0; i < c.size(); ++i)
        if (c.e(i).dim == d && rep_bytes(c.e(i).rep) == key) return i;
    return -1;
}

int lattice_lookup(const Entry& e, const std::vector<Subspace>& U) {
    for (size_t i = 0; i < e.lattice.size(); ++i)
        if (e.lattice[i].U == U) return static_cast<int>(i);
    return -1;
}

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

/* Rows of V expressed in the coordinates of the row basis W (V ⊆ W). */
Subspace transport_into(const Subspace& V, const Subspace& W) {
    auto F = W.basis().field_ptr();
    Mat rows(F, V.dim(), W.dim());
    for (int i = 0; i < V.dim(); ++i) {
        Mat x;
        if (!W.basis().solve_left(V.basis().row(i), &x))
            throw InternalInconsistency("transport_into: V is not contained in W");
        for (int j = 0; j < W.dim(); ++j) rows.at(i, j) = x.at(0, j);
    }
    return Subspace::from_rows(rows);
}

/* Left inverse C of the column map y -> B^T y (B a full-row-rank row basis):
 * C B^T = I. */
Mat left_inverse_of_columns(const Mat& B) {
    auto F = B.field_ptr();
    Mat Bt = B.transpose();
    Mat C(F, B.rows(), B.cols());
    Mat I = Mat::identity(F, B.rows());
    for (int i = 0; i < B.rows(); ++i) {
        Mat x;
        if (!Bt.solve_left(I.row(i), &x))
            throw InternalInconsistency("left_inverse_of_columns: basis not full rank");
        for (int j = 0; j < B.cols(); ++j) C.at(i, j) = x.at(0, j);
    }
    return C;
}

/* Right inverse S of a surjective column map P: P S = I. */
Mat right_inverse(const Mat& P) {
    auto F = P.field_ptr();
    Mat Pt = P.transpose();
    Mat St(F, P.rows(), P.cols());
    Mat I = Mat::identity(F, P.rows());
    for (int i = 0; i < P.rows(); ++i) {
        Mat x;
        if (!Pt.solve_left(I.row(i), &x))
            throw InternalInconsistency("right_inverse: map not surjective");
        for (int j = 0; j < P.cols(); ++j) St.at(i, j) = x.at(0, j);
    }
    return St.transpose();
}

/* A subquotient W/V of an ambient representation, with per-vertex maps
 * lift: subquotient -> ambient (a coset section landing in W) and
 * press: ambient -> subquotient (defined on W). */
struct SubQuot {
    Rep rep;
    std::vector<Mat> lift, press;
};

SubQuot make_subquot(const Rep& M, const std::vector<Subspace>& V,
                     const std::vector<Subspace>& W) {
    auto [Rw, inc] = subrep(M, W);
    std::vector<Subspace> Vc;
    for (int v = 0; v < M.Q->n; ++v) Vc.push_back(transport_into(V[v], W[v]));
    auto [Rq, proj] = quotient_rep(Rw, Vc);
    SubQuot sq;
    sq.rep = Rq;
    for (int v = 0; v < M.Q->n; ++v) {
        Mat sect = right_inverse(proj.f[v]);
        sq.lift.push_back(inc.f[v] * sect);
        sq.press.push_back(proj.f[v] * left_inverse_of_columns(W[v].basis()));
    }
    return sq;
}

/* Induced map on subquotients along an ambient map g (requires g(W_a) ⊆ W_b
 * and g(V_a) ⊆ V_b; verified through morphism_valid by the caller). */
RepMorphism induced_map(const SubQuot& a, const SubQuot& b, const RepMorphism& g) {
    RepMorphism out;
    out.source = a.rep;
    out.target = b.rep;
    for (int v = 0; v < a.rep.Q->n; ++v) out.f.push_back(b.press[v] * g.f[v] * a.lift[v]);
    return out;
}

bool rep_in_G(const Catalog& c, const Rep& M) {
    for (int ci : c.cogen_entries)
        if (hom_dim(M, c.e(ci).rep) > 0) return false;
    return true;
}

/* Strictness of an arbitrary submodule, via the precomputed lattice when the
 * ambient is canonical and from scratch otherwise. */
bool strict_in(const Catalog& c, const Rep& B, const std::vector<Subspace>& A,
               std::vector<Subspace>* witness) {
    int idx = canonical_entry(c, B);
    if (idx >= 0) {
        const Entry& e = c.e(idx);
        int li = lattice_lookup(e, A);
        if (li >= 0) {
            const LatticeElem& le = e.lattice[static_cast<size_t>(li)];
            if (!le.strict && witness && le.witness >= 0)
                *witness = e.lattice[static_cast<size_t>(le.witness)].U;
            return le.strict;
        }
    }
    auto lat = submodule_lattice(B);
    std::vector<bool> in_G(lat.size());
    for (size_t i = 0; i < lat.size(); ++i) in_G[i] = rep_in_G(c, subrep(B, lat[i]).first);
    for (size_t i = 0; i < lat.size(); ++i) {
        if (!in_G[i]) continue;
        std::vector<Subspace> inter;
        for (int v = 0; v < B.Q->n; ++v) inter.push_back(A[v].intersect(lat[i][v]));
        if (!rep_in_G(c, subrep(B, inter).first)) {
            if (witness) *witness = lat[i];
            return false;
        }
    }
    return true;
}

void enumerate_span(const Catalog& c, const std::vector<RepMorphism>& basis, int cap,
                    const std::function<bool(const RepMorphism&)>& visit) {
    int h = static_cast<int>(basis.size());
    if (h == 0) return;
    if (h > cap) throw CapacityError("Hom-space exhaustion cap exceeded (dim " +
                                     std::to_string(h) + " > " + std::to_string(cap) + ")");
    int q = basis[0].source.Q->base->q();
    long long total = 1;
    for (int i = 0; i < h; ++i) total *= q;
    std::vector<uint8_t> coef(static_cast<size_t>(h), 0);
    for (long long code = 1; code < total; ++code) {
        long long t = code;
        for (int i = 0; i < h; ++i) {
            coef[static_cast<size_t>(i)] = static_cast<uint8_t>(t % q);
            t /= q;
        }
        /* canonical representative: first nonzero coefficient equal to 1
         * (scalar multiples share kernel and image) */
        int first = 0;
        while (coef[static_cast<size_t>(first)] == 0) ++first;
        if (coef[static_cast<size_t>(first)] != 1) continue;
        RepMorphism f = basis[static_cast<size_t>(first)];
        for (int i = first + 1; i < h; ++i) {
            uint8_t ci = coef[static_cast<size_t>(i)];
            if (ci == 0) continue;
            for (int v = 0; v < f.source.Q->n; ++v)
                f.f[v] = f.f[v] + basis[static_cast<size_t>(i)].f[v].scaled(ci);
        }
        if (visit(f)) return;
    }
}

}  // namespace

bool ClassSet::contains(int idx) const {
    return std::binary_search(members.begin(), members.end(), idx);
}

ClassSet class_from(const Catalog& c, std::vector<int> members, ClassKind kind) {
    members.push_back(c.zero_entry());
    members = sorted_unique(std::move(members));
    for (int m : members)
        if (!c.e(m).in_G)
            throw PreconditionError("class member " + c.entry_name(m) + " is not in G");
    return ClassSet{std::move(members), kind};
}

ClassSet add_of(const Catalog& c, const std::vector<int>& indecs) {
    std::set<int> gen(indecs.begin(), indecs.end());
    std::vector<int> members;
    for (int i = 0; i < c.size(); ++i) {
        const Entry& e = c.e(i);
        bool ok = true;
        for (int s : e.summands)
            if (!gen.count(s)) { ok = false; break; }
        if (ok) members.push_back(i);
    }
    return class_from(c, std::move(members));
}

ClassSet full_class(const Catalog& c) {
    std::vector<int> members;
    for (int i = 0; i < c.size(); ++i)
        if (c.e(i).in_G) members.push_back(i);
    return class_from(c, std::move(members), ClassKind::pseudo_torsion);
}

bool in_torsion_class(const Catalog& c, const Rep& M) { return rep_in_G(c, M); }

bool is_strict_subobject(const Catalog& c, const Rep& B, const std::vector<Subspace>& A,
                         std::vector<Subspace>* witness) {
    if (!is_submodule(B, A)) throw PreconditionError("A is not a submodule of B");
    if (!rep_in_G(c, B)) throw PreconditionError("ambient B does not lie in G");
    if (!rep_in_G(c, subrep(B, A).first)) throw PreconditionError("A does not lie in G");
    return strict_in(c, B, A, witness);
}

std::vector<int> strict_subobjects(const Catalog& c, int entry) {
    if (!c.e(entry).in_G) throw PreconditionError("entry not in G");
    return c.e(entry).strict_sub_iso;
}

std::vector<int> strict_quotients(const Catalog& c, int entry) {
    if (!c.e(entry).in_G) throw PreconditionError("entry not in G");
    return c.e(entry).strict_quot_iso;
}

std::vector<int> strict_subquotients(const Catalog& c, int entry) {
    const Entry& e = c.e(entry);
    if (!e.in_G) throw PreconditionError("entry not in G");
    std::vector<int> out;
    for (const auto& a : e.lattice) {
        if (!a.strict) continue;
        for (const auto& b : e.lattice) {
            if (!b.strict) continue;
            bool contained = true;
            for (int v = 0; v < c.Q->n && contained; ++v)
                contained = b.U[v].contains(a.U[v]);
            if (!contained) continue;
            auto [Rb, inc] = subrep(e.rep, b.U);
            std::vector<Subspace> Ac;
            for (int v = 0; v < c.Q->n; ++v) Ac.push_back(transport_into(a.U[v], b.U[v]));
            out.push_back(c.identify(quotient_rep(Rb, Ac).first));
        }
    }
    return sorted_unique(std::move(out));
}

std::vector<int> strict_subquotients_via_subs(const Catalog& c, int entry) {
    std::vector<int> out;
    for (int s : c.e(entry).strict_sub_iso)
        for (int q : c.e(s).strict_quot_iso) out.push_back(q);
    return sorted_unique(std::move(out));
}

std::vector<int> strict_subquotients_via_quots(const Catalog& c, int entry) {
    std::vector<int> out;
    for (int q : c.e(entry).strict_quot_iso)
        for (int s : c.e(q).strict_sub_iso) out.push_back(s);
    return sorted_unique(std::move(out));
}

bool is_strict_morphism(const Catalog& c, const RepMorphism& f) {
    if (!morphism_valid(f)) throw PreconditionError("invalid morphism");
    if (!rep_in_G(c, f.source) || !rep_in_G(c, f.target))
        throw PreconditionError("strict morphisms require source and target in G");
    std::vector<Subspace> kerU = kernel_subspaces(f);
    if (!rep_in_G(c, subrep(f.source, kerU).first)) return false;
    if (!strict_in(c, f.source, kerU, nullptr)) return false;
    std::vector<Subspace> imU = image_subspaces(f);
    return strict_in(c, f.target, imU, nullptr);
}

MainDiagram main_diagram(const Catalog& c, const Rep& B, const std::vector<Subspace>& Bp,
                         const RepMorphism& p) {
    const int n = B.Q->n;
    std::vector<Subspace> witness;
    if (!is_strict_subobject(c, B, Bp, &witness))
        throw PreconditionError("B' is not a strict subobject of B");
    /* p must be a fibration: an epimorphism with strict kernel */
    for (int v = 0; v < n; ++v)
        if (p.f[v].rank() != p.target.fdim[v])
            throw PreconditionError("p is not an epimorphism");
    std::vector<Subspace> Aker = kernel_subspaces(p);
    if (!rep_in_G(c, subrep(B, Aker).first) || !strict_in(c, B, Aker, nullptr))
        throw PreconditionError("p is not a fibration: its kernel is not strict in B");

    std::vector<Subspace> Ap, Cp, zeroB, fullB, zeroC, fullC;
    for (int v = 0; v < n; ++v) {
        Ap.push_back(Aker[v].intersect(Bp[v]));
        Cp.push_back(Bp[v].apply(p.f[v]));
        zeroB.emplace_back(B.Q->base, B.fdim[v]);
        fullB.push_back(Subspace::full(B.Q->base, B.fdim[v]));
        zeroC.emplace_back(B.Q->base, p.target.fdim[v]);
        fullC.push_back(Subspace::full(B.Q->base, p.target.fdim[v]));
    }

    /* subquotients: columns live over ambient B, B, C */
    SubQuot sq[3][3] = {
        {make_subquot(B, zeroB, Ap), make_subquot(B, zeroB, Bp),
         make_subquot(p.target, zeroC, Cp)},
        {make_subquot(B, zeroB, Aker), make_subquot(B, zeroB, fullB),
         make_subquot(p.target, zeroC, fullC)},
        {make_subquot(B, Ap, Aker), make_subquot(B, Bp, fullB),
         make_subquot(p.target, Cp, fullC)},
    };
    RepMorphism idB = identity_morphism(B), idC = identity_morphism(p.target);

    MainDiagram d;
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col) d.obj[r][col] = sq[r][col].rep;
    for (int r = 0; r < 3; ++r) {
        d.row_map[r][0] = induced_map(sq[r][0], sq[r][1], idB);
        d.row_map[r][1] = induced_map(sq[r][1], sq[r][2], p);
    }
    for (int col = 0; col < 3; ++col) {
        const RepMorphism& g = (col == 2) ? idC : idB;
        d.col_map[0][col] = induced_map(sq[0][col], sq[1][col], g);
        d.col_map[1][col] = induced_map(sq[1][col], sq[2][col], g);
    }

    /* verification: membership, strictness, commutativity, exactness */
    for (int r = 0; r < 3; ++r)
        for (int col = 0; col < 3; ++col)
            if (!rep_in_G(c, d.obj[r][col]))
                throw PreconditionError("main diagram corner (" + std::to_string(r) + "," +
                                        std::to_string(col) + ") does not lie in G");
    auto require_strict = [&](const RepMorphism& f, const std::string& what) {
        if (!morphism_valid(f)) throw InternalInconsistency("main diagram: invalid " + what);
        if (!is_strict_morphism(c, f))
            throw PreconditionError("main diagram: " + what + " is not strict");
    };
    for (int r = 0; r < 3; ++r) {
        require_strict(d.row_map[r][0], "row " + std::to_string(r) + " cofibration");
        require_strict(d.row_map[r][1], "row " + std::to_string(r) + " fibration");
    }
    for (int col = 0; col < 3; ++col) {
        require_strict(d.col_map[0][col], "column " + std::to_string(col) + " cofibration");
        require_strict(d.col_map[1][col], "column " + std::to_string(col) + " fibration");
    }
    for (int r = 0; r < 2; ++r)
        for (int col = 0; col < 2; ++col) {
            RepMorphism lhs = compose(d.col_map[r][col + 1], d.row_map[r][col]);
            RepMorphism rhs = compose(d.row_map[r + 1][col], d.col_map[r][col]);
            for (int v = 0; v < n; ++v)
                if (!(lhs.f[v] == rhs.f[v]))
                    throw InternalInconsistency("main diagram: square does not commute");
        }
    auto check_exact = [&](const Rep& X, const Rep& Z, const RepMorphism& u,
                           const RepMorphism& v) {
        int ru = 0, rv = 0;
        for (int vv = 0; vv < n; ++vv) ru += u.f[vv].rank(), rv += v.f[vv].rank();
        if (ru != X.total_fdim() || rv != Z.total_fdim() ||
            !morphism_is_zero(compose(v, u)) ||
            u.target.total_fdim() != X.total_fdim() + Z.total_fdim())
            throw InternalInconsistency("main diagram: row or column is not exact");
    };
    for (int r = 0; r < 3; ++r)
        check_exact(d.obj[r][0], d.obj[r][2], d.row_map[r][0], d.row_map[r][1]);
    for (int col = 0; col < 3; ++col)
        check_exact(d.obj[0][col], d.obj[2][col], d.col_map[0][col], d.col_map[1][col]);
    return d;
}

ClassSet perp_right(const Catalog& c, const ClassSet& X) {
    std::vector<int> members;
    for (int g = 0; g < c.size(); ++g) {
        if (!c.e(g).in_G) continue;
        bool ok = true;
        for (int x : X.members)
            if (c.strict_hom_exists(x, g)) { ok = false; break; }
        if (ok) members.push_back(g);
    }
    return class_from(c, std::move(members), ClassKind::pseudo_torsionfree);
}

ClassSet perp_left(const Catalog& c, const ClassSet& Y) {
    std::vector<int> members;
    for (int g = 0; g < c.size(); ++g) {
        if (!c.e(g).in_G) continue;
        bool ok = true;
        for (int y : Y.members)
            if (c.strict_hom_exists(g, y)) { ok = false; break; }
        if (ok) members.push_back(g);
    }
    return class_from(c, std::move(members), ClassKind::pseudo_torsion);
}

bool strict_hom_exists_exhaustive(const Catalog& c, int x, int y, int hom_dim_cap) {
    if (x == c.zero_entry() || y == c.zero_entry()) return false;
    bool found = false;
    enumerate_span(c, hom_basis(c.e(x).rep, c.e(y).rep), hom_dim_cap,
                   [&](const RepMorphism& f) {
                       if (!morphism_is_zero(f) && is_strict_morphism(c, f)) {
                           found = true;
                           return true;
                       }
                       return false;
                   });
    return found;
}

ClassSet filt_closure(const Catalog& c, const ClassSet& X) {
    std::set<int> S(X.members.begin(), X.members.end());
    S.insert(c.zero_entry());
    for (int m : S)
        if (!c.e(m).in_G) throw PreconditionError("filt_closure: member not in G");
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<int> cur(S.begin(), S.end());
        for (int m : cur)
            for (int q : c.e(m).strict_quot_iso)
                if (S.insert(q).second) changed = true;
        for (int m = 0; m < c.size(); ++m) {
            if (!c.e(m).in_G || S.count(m)) continue;
            for (auto [a, q] : c.e(m).strict_ext_pairs)
                if (S.count(a) && S.count(q)) {
                    S.insert(m);
                    changed = true;
                    break;
                }
        }
    }
    return class_from(c, std::vector<int>(S.begin(), S.end()), ClassKind::pseudo_torsion);
}

TorsionSplit torsion_pair_split(const Catalog& c, int entry, const ClassSet& P) {
    const Entry& e = c.e(entry);
    if (!e.in_G) throw PreconditionError("torsion_pair_split: M not in G");
    ClosureViolation v;
    if (!is_pseudo_torsion_class(c, P, &v))
        throw PreconditionError("torsion_pair_split: P is not pseudo-torsion (" + v.reason + ")");
    ClassSet Q = perp_right(c, P);
    std::vector<const LatticeElem*> candidates;
    for (const auto& le : e.lattice)
        if (le.strict && P.contains(le.iso) && Q.contains(le.quot_iso))
            candidates.push_back(&le);
    if (candidates.size() != 1)
        throw InternalInconsistency("torsion_pair_split: expected a unique strict extension, found " +
                                    std::to_string(candidates.size()));
    const LatticeElem& t = *candidates.front();
    return TorsionSplit{t.iso, t.quot_iso, t.U};
}

bool is_pseudo_torsion_class(const Catalog& c, const ClassSet& S, ClosureViolation* violation) {
    auto fail = [&](ClosureViolation v) {
        if (violation) *violation = std::move(v);
        return false;
    };
    if (!S.contains(c.zero_entry()))
        return fail({"does not contain 0", -1, -1, -1});
    for (int m : S.members)
        for (int q : c.e(m).strict_quot_iso)
            if (!S.contains(q))
                return fail({"not closed under strict quotients", m, q, -1});
    for (int m = 0; m < c.size(); ++m) {
        if (!c.e(m).in_G || S.contains(m)) continue;
        for (auto [a, q] : c.e(m).strict_ext_pairs)
            if (S.contains(a) && S.contains(q))
                return fail({"not closed under strict extensions", a, q, m});
    }
    return true;
}

bool is_pseudo_torsionfree(const Catalog& c, const ClassSet& S, ClosureViolation* violation) {
    auto fail = [&](ClosureViolation v) {
        if (violation) *violation = std::move(v);
        return false;
    };
    if (!S.contains(c.zero_entry()))
        return fail({"does not contain 0", -1, -1, -1});
    for (int m : S.members)
        for (int s : c.e(m).strict_sub_iso)
            if (!S.contains(s))
                return fail({"not closed under strict subobjects", m, s, -1});
    for (int m = 0; m < c.size(); ++m) {
        if (!c.e(m).in_G || S.contains(m)) continue;
        for (auto [a, q] : c.e(m).strict_ext_pairs)
            if (S.contains(a) && S.contains(q))
                return fail({"not closed under strict extensions", a, q, m});
    }
    return true;
}

bool is_pseudo_wide(const Catalog& c, const ClassSet& S, ClosureViolation* violation,
                    int hom_dim_cap) {
    auto fail = [&](ClosureViolation v) {
        if (violation) *violation = std::move(v);
        return false;
    };
    if (!S.contains(c.zero_entry()))
        return fail({"does not contain 0", -1, -1, -1});
    for (int m = 0; m < c.size(); ++m) {
        if (!c.e(m).in_G || S.contains(m)) continue;
        for (auto [a, q] : c.e(m).strict_ext_pairs)
            if (S.contains(a) && S.contains(q))
                return fail({"not closed under strict extensions", a, q, m});
    }
    for (int x : S.members)
        for (int y : S.members) {
            bool bad = false;
            ClosureViolation v;
            enumerate_span(c, hom_basis(c.e(x).rep, c.e(y).rep), hom_dim_cap,
                           [&](const RepMorphism& f) {
                               if (morphism_is_zero(f) || !is_strict_morphism(c, f))
                                   return false;
                               KernelImageCokernel kic = kernel_image_cokernel(f);
                               for (const Rep* part : {&kic.ker, &kic.im, &kic.coker})
                                   if (!S.contains(c.identify(*part))) {
                                       v = {"kernel/image/cokernel escapes the class", x, y,
                                            c.identify(*part)};
                                       bad = true;
                                       return true;
                                   }
                               return false;
                           });
            if (bad) return fail(std::move(v));
        }
    return true;
}

ClassSet relative_perp(const Catalog& c, const ClassSet& P0, const ClassSet& X) {
    for (int p : P0.members)
        if (!X.contains(p)) throw PreconditionError("relative_perp: P0 is not contained in X");
    std::vector<int> members;
    for (int x : X.members) {
        bool ok = true;
        for (int p : P0.members)
            if (c.strict_hom_exists(p, x)) { ok = false; break; }
        if (ok) members.push_back(x);
    }
    return class_from(c, std::move(members));
}

std::vector<Ghost> find_ghosts(const Catalog& c) {
    std::vector<Ghost> out;
    std::set<std::vector<IntVec>> seen;  // (dim A, dim B, dim C)
    for (int b = 0; b < c.size(); ++b) {
        const Entry& eb = c.e(b);
        if (!eb.in_G || !eb.indecomposable) continue;
        for (const auto& le : eb.lattice) {
            const Entry& ea = c.e(le.iso);
            if (ea.in_G || !ea.indecomposable) continue;
            if (!c.e(le.quot_iso).in_G)
                throw InternalInconsistency("quotient of a G-object left G");
            if (!seen.insert({ea.dim, eb.dim, c.e(le.quot_iso).dim}).second) continue;
            Ghost g;
            g.missing = le.iso;
            g.ambient = b;
            g.quotient = le.quot_iso;
            g.embed = subrep(eb.rep, le.U).second;
            g.quot = quotient_rep(eb.rep, le.U).second;
            out.push_back(std::move(g));
        }
    }
    return out;
}

}  // namespace swc
