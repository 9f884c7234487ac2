#include "swc/cone.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "swc/smith.hpp"

namespace swc {
namespace {

struct Ineq {
    std::vector<Rat> a;
    bool strict = false;
};

/* Eliminate variables from the back; keep each level's system for
 * back-substitution. */
bool fm_run(std::vector<Ineq> sys, int dim, std::vector<Rat>* sample) {
    std::vector<std::vector<Ineq>> levels(static_cast<size_t>(dim));
    for (int k = dim - 1; k >= 0; --k) {
        levels[static_cast<size_t>(k)] = sys;
        std::vector<Ineq> next;
        std::vector<const Ineq*> lower, upper;
        for (const Ineq& c : sys) {
            const Rat& ck = c.a[static_cast<size_t>(k)];
            if (ck == Rat(0))
                next.push_back(c);
            else if (ck > Rat(0))
                upper.push_back(&c);
            else
                lower.push_back(&c);
        }
        for (const Ineq* l : lower)
            for (const Ineq* u : upper) {
                Ineq m;
                m.strict = l->strict || u->strict;
                m.a.resize(static_cast<size_t>(dim), Rat(0));
                const Rat lu = u->a[static_cast<size_t>(k)];
                const Rat ll = -l->a[static_cast<size_t>(k)];
                for (int i = 0; i < dim; ++i)
                    m.a[static_cast<size_t>(i)] =
                        ll * u->a[static_cast<size_t>(i)] + lu * l->a[static_cast<size_t>(i)];
                next.push_back(std::move(m));
            }
        sys = std::move(next);
    }
    for (const Ineq& c : sys)
        if (c.strict) return false;  // all coefficients are zero by now: 0 < 0
    if (!sample) return true;
    sample->assign(static_cast<size_t>(dim), Rat(0));
    for (int k = 0; k < dim; ++k) {
        bool has_lo = false, has_hi = false;
        Rat lo(0), hi(0);
        bool lo_strict = false, hi_strict = false;
        for (const Ineq& c : levels[static_cast<size_t>(k)]) {
            const Rat& ck = c.a[static_cast<size_t>(k)];
            if (ck == Rat(0)) continue;
            Rat rest(0);
            for (int i = 0; i < k; ++i)
                rest += c.a[static_cast<size_t>(i)] * (*sample)[static_cast<size_t>(i)];
            Rat bound = -rest / ck;
            if (ck > Rat(0)) {  // x_k <= bound
                if (!has_hi || bound < hi || (bound == hi && c.strict)) hi_strict = c.strict;
                if (!has_hi || bound < hi) hi = bound;
                has_hi = true;
            } else {  // x_k >= bound
                if (!has_lo || bound > lo || (bound == lo && c.strict)) lo_strict = c.strict;
                if (!has_lo || bound > lo) lo = bound;
                has_lo = true;
            }
        }
        Rat x(0);
        if (has_lo && has_hi)
            x = (lo == hi) ? lo : (lo + hi) / Rat(2);
        else if (has_lo)
            x = lo_strict ? lo + Rat(1) : lo;
        else if (has_hi)
            x = hi_strict ? hi - Rat(1) : hi;
        (*sample)[static_cast<size_t>(k)] = x;
    }
    return true;
}

long long cross2(const IntVec& p, const IntVec& q) { return p[0] * q[1] - p[1] * q[0]; }
long long dot2(const IntVec& p, const IntVec& q) { return p[0] * q[0] + p[1] * q[1]; }

bool feasible_dir2(const IntVec& r, const std::vector<IntVec>& cons) {
    for (const IntVec& c : cons)
        if (dot2(c, r) > 0) return false;
    return true;
}

/* Extreme generators of {t in R^2 : c·t <= 0 for all c}, c's nonzero. */
std::vector<IntVec> cone2_gens(const std::vector<IntVec>& cons) {
    std::set<IntVec> cand;
    for (const IntVec& c : cons) {
        cand.insert(primitive({-c[1], c[0]}));
        cand.insert(primitive({c[1], -c[0]}));
        cand.insert(primitive({-c[0], -c[1]}));
    }
    std::vector<IntVec> F;
    for (const IntVec& r : cand)
        if (feasible_dir2(r, cons)) F.push_back(r);
    // lineality: r and -r both feasible
    std::set<IntVec> fs(F.begin(), F.end());
    IntVec line;
    for (const IntVec& r : F) {
        IntVec neg = {-r[0], -r[1]};
        if (fs.count(neg)) {
            IntVec n = normalize_hyperplane(r);
            if (!line.empty() && n != line)
                throw InternalInconsistency("cone2_gens: two lineality directions with constraints");
            line = n;
        }
    }
    if (!line.empty()) {
        IntVec neg = {-line[0], -line[1]};
        bool off_line = false;
        for (const IntVec& r : F)
            if (cross2(line, r) != 0) off_line = true;
        std::vector<IntVec> g = {line, neg};
        if (off_line) {
            IntVec in1 = primitive({-line[1], line[0]});
            IntVec in2 = {-in1[0], -in1[1]};
            if (feasible_dir2(in1, cons))
                g.push_back(in1);
            else if (feasible_dir2(in2, cons))
                g.push_back(in2);
            else
                throw InternalInconsistency("cone2_gens: half-plane without feasible inward normal");
        }
        std::sort(g.begin(), g.end());
        return g;
    }
    // pointed: drop every ray that is a nonnegative combination of two others
    std::vector<IntVec> ext;
    for (size_t i = 0; i < F.size(); ++i) {
        bool redundant = false;
        for (size_t p = 0; p < F.size() && !redundant; ++p) {
            if (p == i) continue;
            for (size_t q = p + 1; q < F.size() && !redundant; ++q) {
                if (q == i) continue;
                long long det = cross2(F[p], F[q]);
                if (det == 0) continue;  // primitives, so F[q] = -F[p]: excluded by pointedness
                Rat alpha = Rat(cross2(F[i], F[q]), det);
                Rat beta = Rat(cross2(F[p], F[i]), det);
                if (alpha >= Rat(0) && beta >= Rat(0)) redundant = true;
            }
        }
        if (!redundant) ext.push_back(F[i]);
    }
    if (ext.size() > 2) throw InternalInconsistency("cone2_gens: pointed cone with >2 extreme rays");
    std::sort(ext.begin(), ext.end());
    return ext;
}

int int_rank(std::vector<IntVec> rows, int dim) {
    int rank = 0;
    for (int c = 0; c < dim && rank < static_cast<int>(rows.size()); ++c) {
        size_t piv = static_cast<size_t>(rank);
        while (piv < rows.size() && rows[piv][static_cast<size_t>(c)] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[static_cast<size_t>(rank)], rows[piv]);
        for (size_t r = static_cast<size_t>(rank) + 1; r < rows.size(); ++r) {
            long long a = rows[r][static_cast<size_t>(c)];
            if (a == 0) continue;
            long long b = rows[static_cast<size_t>(rank)][static_cast<size_t>(c)];
            for (int j = 0; j < dim; ++j)
                rows[r][static_cast<size_t>(j)] =
                    rows[r][static_cast<size_t>(j)] * b -
                    rows[static_cast<size_t>(rank)][static_cast<size_t>(j)] * a;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

bool fm_feasible(const std::vector<LinCon>& cons, int dim, std::vector<Rat>* sample) {
    std::vector<Ineq> sys;
    for (const LinCon& c : cons) {
        Ineq p;
        p.a = c.a;
        p.a.resize(static_cast<size_t>(dim), Rat(0));
        p.strict = (c.rel == Rel::lt);
        sys.push_back(p);
        if (c.rel == Rel::eq) {
            Ineq n = sys.back();
            for (Rat& x : n.a) x = -x;
            sys.push_back(std::move(n));
        }
    }
    return fm_run(std::move(sys), dim, sample);
}

IntVec primitive(IntVec v) {
    long long g = 0;
    for (long long x : v) g = gcd_ll(g, x);
    if (g > 1)
        for (long long& x : v) x /= g;
    return v;
}

IntVec normalize_hyperplane(IntVec v) {
    v = primitive(std::move(v));
    for (long long x : v) {
        if (x > 0) break;
        if (x < 0) {
            for (long long& y : v) y = -y;
            break;
        }
    }
    return v;
}

namespace {

std::vector<LinCon> pattern_cons(const std::vector<IntVec>& normals, const std::vector<int>& signs) {
    std::vector<LinCon> cons;
    for (size_t i = 0; i < normals.size(); ++i) {
        LinCon c;
        c.a.reserve(normals[i].size());
        for (long long x : normals[i]) c.a.push_back(Rat(signs[i] > 0 ? -x : x));
        c.rel = (signs[i] == 0) ? Rel::eq : Rel::lt;
        cons.push_back(std::move(c));
    }
    return cons;
}

bool pattern_holds(const std::vector<IntVec>& normals, const std::vector<int>& signs,
                   const IntVec& x) {
    for (size_t i = 0; i < normals.size(); ++i) {
        long long s = 0;
        for (size_t j = 0; j < x.size(); ++j) s += normals[i][j] * x[j];
        if (signs[i] == 0 ? s != 0 : (signs[i] > 0 ? s <= 0 : s >= 0)) return false;
    }
    return true;
}

}  // namespace

bool sign_pattern_feasible(const std::vector<IntVec>& normals, const std::vector<int>& signs,
                           int dim) {
    return fm_feasible(pattern_cons(normals, signs), dim);
}

IntVec sign_pattern_sample(const std::vector<IntVec>& normals, const std::vector<int>& signs,
                           int dim) {
    IntVec x(static_cast<size_t>(dim), 0);
    for (long long R = 1; R <= 24; ++R) {
        std::vector<long long> idx(static_cast<size_t>(dim), -R);
        while (true) {
            long long mx = 0;
            for (long long v : idx) mx = std::max(mx, v < 0 ? -v : v);
            if (mx == R) {
                for (int i = 0; i < dim; ++i) x[static_cast<size_t>(i)] = idx[static_cast<size_t>(i)];
                if (pattern_holds(normals, signs, x)) return x;
            }
            int k = dim - 1;
            while (k >= 0 && idx[static_cast<size_t>(k)] == R) idx[static_cast<size_t>(k--)] = -R;
            if (k < 0) break;
            ++idx[static_cast<size_t>(k)];
        }
    }
    std::vector<Rat> s;
    if (!fm_feasible(pattern_cons(normals, signs), dim, &s))
        throw PreconditionError("sign_pattern_sample: infeasible pattern");
    long long lcm = 1;
    for (const Rat& r : s) lcm = lcm / gcd_ll(lcm, r.denominator()) * r.denominator();
    for (int i = 0; i < dim; ++i) {
        const Rat v = s[static_cast<size_t>(i)] * Rat(lcm);
        x[static_cast<size_t>(i)] = v.numerator();
    }
    x = primitive(std::move(x));
    if (!pattern_holds(normals, signs, x))
        throw InternalInconsistency("sign_pattern_sample: scaled witness lost the pattern");
    return x;
}

ConeCanon cone_canonical(const IntVec& m, const std::vector<IntVec>& subs, int dim) {
    if (dim != 2 && dim != 3)
        throw PreconditionError("cone_canonical: only dimensions 2 and 3 are supported");
    bool m_zero = true;
    for (long long v : m)
        if (v != 0) m_zero = false;
    if (m_zero) throw PreconditionError("cone_canonical: zero wall normal");
    ConeCanon out;
    out.ambient = dim;
    if (dim == 2) {
        IntVec d = primitive({-m[1], m[0]});
        IntVec nd = {-d[0], -d[1]};
        auto ok = [&](const IntVec& r) {
            for (const IntVec& s : subs)
                if (dot2(s, r) > 0) return false;
            return true;
        };
        if (ok(d)) out.gens.push_back(d);
        if (ok(nd)) out.gens.push_back(nd);
        std::sort(out.gens.begin(), out.gens.end());
        if (!out.gens.empty()) out.normal = normalize_hyperplane(m);
        return out;
    }
    // dim == 3: parametrize the plane m-perp with an integer kernel basis
    IntMat mm(1, 3);
    for (int j = 0; j < 3; ++j) mm.at(0, j) = m[static_cast<size_t>(j)];
    SmithResult sm = smith_normal_form(mm);
    std::vector<IntVec> basis;
    for (int col = 0; col < 3; ++col) {
        if (col < static_cast<int>(sm.diag.size()) && sm.diag[static_cast<size_t>(col)] != 0)
            continue;
        IntVec b(3);
        for (int rrow = 0; rrow < 3; ++rrow) b[static_cast<size_t>(rrow)] = sm.V.at(rrow, col);
        long long check = 0;
        for (int j = 0; j < 3; ++j) check += m[static_cast<size_t>(j)] * b[static_cast<size_t>(j)];
        if (check != 0) throw InternalInconsistency("cone_canonical: kernel basis check failed");
        basis.push_back(std::move(b));
    }
    if (basis.size() != 2) throw InternalInconsistency("cone_canonical: plane basis has wrong size");
    std::vector<IntVec> cons;
    for (const IntVec& s : subs) {
        long long c0 = 0, c1 = 0;
        for (int j = 0; j < 3; ++j) {
            c0 += s[static_cast<size_t>(j)] * basis[0][static_cast<size_t>(j)];
            c1 += s[static_cast<size_t>(j)] * basis[1][static_cast<size_t>(j)];
        }
        if (c0 != 0 || c1 != 0) cons.push_back({c0, c1});
    }
    if (cons.empty()) {
        out.full_plane = true;
        out.normal = normalize_hyperplane(m);
        return out;
    }
    for (const IntVec& t : cone2_gens(cons)) {
        IntVec g(3);
        for (int j = 0; j < 3; ++j)
            g[static_cast<size_t>(j)] =
                t[0] * basis[0][static_cast<size_t>(j)] + t[1] * basis[1][static_cast<size_t>(j)];
        out.gens.push_back(primitive(std::move(g)));
    }
    std::sort(out.gens.begin(), out.gens.end());
    if (int_rank(out.gens, 3) == 2) out.normal = normalize_hyperplane(m);
    return out;
}

}  // namespace swc
