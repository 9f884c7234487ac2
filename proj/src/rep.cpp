#include "swc/rep.hpp"

#include <algorithm>

namespace swc {

namespace {

/* Companion matrix of the default modulus for F_{q^d} over F_q. */
Mat companion(const std::shared_ptr<const Field>& base, int d) {
    /* We realize the extension as base-characteristic digits: use the default
     * modulus over the PRIME field only when base is prime; the artifact only
     * needs prime base fields under valued vertices. */
    if (base->k() != 1)
        throw PreconditionError("valued vertices require a prime base field");
    std::vector<int> mod = default_modulus(base->p(), d);
    Mat c(base, d, d);
    for (int i = 1; i < d; ++i) c.at(i, i - 1) = 1;
    for (int i = 0; i < d; ++i) c.at(i, d - 1) = static_cast<uint8_t>((base->p() - mod[i]) % base->p());
    return c;
}

Mat block_diag(const Mat& block, int copies, const std::shared_ptr<const Field>& f) {
    int d = block.rows();
    Mat out(f, d * copies, d * copies);
    for (int b = 0; b < copies; ++b)
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) out.at(b * d + i, b * d + j) = block.at(i, j);
    return out;
}

}  // namespace

std::shared_ptr<const ValuedQuiver> make_quiver(std::shared_ptr<const Field> base,
                                                std::vector<int> degrees,
                                                std::vector<std::pair<int, int>> arrows) {
    auto q = std::make_shared<ValuedQuiver>();
    q->base = std::move(base);
    q->n = static_cast<int>(degrees.size());
    q->degrees = std::move(degrees);
    q->arrows = std::move(arrows);
    for (auto [s, t] : q->arrows) {
        if (s < 0 || s >= q->n || t < 0 || t >= q->n)
            throw PreconditionError("arrow endpoint out of range");
        int ds = q->degrees[s], dt = q->degrees[t];
        if (ds != dt && dt != 1)
            throw PreconditionError("unsupported valued arrow: target degree must equal the "
                                    "source degree or be 1");
    }
    /* acyclicity by repeated sink removal */
    {
        std::vector<int> outdeg(q->n, 0);
        std::vector<std::pair<int, int>> rem = q->arrows;
        std::vector<bool> gone(q->n, false);
        for (int round = 0; round < q->n; ++round) {
            std::fill(outdeg.begin(), outdeg.end(), 0);
            for (auto [s, t] : rem)
                if (!gone[s] && !gone[t]) ++outdeg[s];
            int sink = -1;
            for (int v = 0; v < q->n; ++v)
                if (!gone[v] && outdeg[v] == 0) { sink = v; break; }
            if (sink < 0) throw PreconditionError("quiver has an oriented cycle");
            gone[sink] = true;
        }
    }
    q->companion.resize(q->n);
    for (int v = 0; v < q->n; ++v)
        if (q->degrees[v] > 1) q->companion[v] = companion(q->base, q->degrees[v]);
    return q;
}

int Rep::total_fdim() const {
    int t = 0;
    for (int d : fdim) t += d;
    return t;
}

Rep zero_rep(std::shared_ptr<const ValuedQuiver> Q) {
    return rep_from_dims(std::move(Q), std::vector<int>(static_cast<size_t>(0), 0));
}

Rep rep_from_dims(std::shared_ptr<const ValuedQuiver> Q, const std::vector<int>& fdim) {
    Rep m;
    m.Q = std::move(Q);
    m.fdim = fdim;
    m.fdim.resize(m.Q->n, 0);
    m.action.resize(m.Q->n);
    for (int v = 0; v < m.Q->n; ++v) {
        int d = m.Q->degrees[v];
        if (m.fdim[v] % d)
            throw PreconditionError("vertex dimension not a multiple of the vertex degree");
        if (d > 1) m.action[v] = block_diag(m.Q->companion[v], m.fdim[v] / d, m.Q->base);
    }
    m.arrow.reserve(m.Q->arrows.size());
    for (auto [s, t] : m.Q->arrows) m.arrow.push_back(Mat(m.Q->base, m.fdim[t], m.fdim[s]));
    return m;
}

Rep direct_sum(const Rep& a, const Rep& b) {
    std::vector<int> fdim(a.Q->n);
    for (int v = 0; v < a.Q->n; ++v) fdim[v] = a.fdim[v] + b.fdim[v];
    Rep m = rep_from_dims(a.Q, fdim);
    for (size_t i = 0; i < a.arrow.size(); ++i) {
        auto [s, t] = a.Q->arrows[i];
        for (int r = 0; r < a.fdim[t]; ++r)
            for (int c = 0; c < a.fdim[s]; ++c) m.arrow[i].at(r, c) = a.arrow[i].at(r, c);
        for (int r = 0; r < b.fdim[t]; ++r)
            for (int c = 0; c < b.fdim[s]; ++c)
                m.arrow[i].at(a.fdim[t] + r, a.fdim[s] + c) = b.arrow[i].at(r, c);
    }
    /* note: block-diagonal action layout differs from rep_from_dims' when both
     * summands are nonzero at a valued vertex, but both are block-companion up
     * to permutation; rebuild the action to keep the canonical layout. */
    for (int v = 0; v < a.Q->n; ++v) {
        if (a.Q->degrees[v] <= 1) continue;
        int d = a.Q->degrees[v];
        Mat J(a.Q->base, m.fdim[v], m.fdim[v]);
        auto put = [&](const Mat& src, int off) {
            for (int r = 0; r < src.rows(); ++r)
                for (int c = 0; c < src.cols(); ++c) J.at(off + r, off + c) = src.at(r, c);
        };
        if (a.fdim[v]) put(a.action[v], 0);
        if (b.fdim[v]) put(b.action[v], a.fdim[v]);
        (void)d;
        m.action[v] = J;
    }
    return m;
}

Rep sum_power(const Rep& a, int n) {
    Rep out = rep_from_dims(a.Q, std::vector<int>(a.Q->n, 0));
    for (int i = 0; i < n; ++i) out = direct_sum(out, a);
    return out;
}

DimVector dim_vector(const Rep& m) {
    DimVector d(m.Q->n);
    for (int v = 0; v < m.Q->n; ++v) d[v] = m.fdim[v] / m.Q->degrees[v];
    return d;
}

void check_rep(const Rep& m) {
    for (size_t i = 0; i < m.arrow.size(); ++i) {
        auto [s, t] = m.Q->arrows[i];
        if (m.arrow[i].rows() != m.fdim[t] || m.arrow[i].cols() != m.fdim[s])
            throw PreconditionError("arrow matrix shape mismatch");
        /* arrows between two valued vertices of equal degree must intertwine */
        if (m.Q->degrees[s] > 1 && m.Q->degrees[t] > 1) {
            if (!(m.arrow[i] * m.action[s] == m.action[t] * m.arrow[i]))
                throw PreconditionError("arrow matrix fails to intertwine vertex actions");
        }
    }
}

bool morphism_valid(const RepMorphism& m) {
    const Rep& M = m.source;
    const Rep& N = m.target;
    for (int v = 0; v < M.Q->n; ++v) {
        if (m.f[v].rows() != N.fdim[v] || m.f[v].cols() != M.fdim[v]) return false;
        if (M.Q->degrees[v] > 1 && M.fdim[v] && N.fdim[v]) {
            if (!(m.f[v] * M.action[v] == N.action[v] * m.f[v])) return false;
        }
    }
    for (size_t i = 0; i < M.arrow.size(); ++i) {
        auto [s, t] = M.Q->arrows[i];
        if (!(m.f[t] * M.arrow[i] == N.arrow[i] * m.f[s])) return false;
    }
    return true;
}

RepMorphism identity_morphism(const Rep& m) {
    RepMorphism out{m, m, {}};
    for (int v = 0; v < m.Q->n; ++v) out.f.push_back(Mat::identity(m.Q->base, m.fdim[v]));
    return out;
}

RepMorphism compose(const RepMorphism& g, const RepMorphism& f) {
    RepMorphism out{f.source, g.target, {}};
    for (int v = 0; v < f.source.Q->n; ++v) out.f.push_back(g.f[v] * f.f[v]);
    return out;
}

bool morphism_is_zero(const RepMorphism& m) {
    for (const Mat& x : m.f)
        if (!x.is_zero()) return false;
    return true;
}

std::vector<RepMorphism> hom_basis(const Rep& M, const Rep& N) {
    auto F = M.Q->base;
    int n = M.Q->n;
    std::vector<int> offset(n + 1, 0);
    for (int v = 0; v < n; ++v) offset[v + 1] = offset[v] + N.fdim[v] * M.fdim[v];
    int unknowns = offset[n];
    if (unknowns == 0) return {};

    std::vector<std::vector<uint8_t>> rows;  // constraint rows
    auto idx = [&](int v, int i, int j) { return offset[v] + i * M.fdim[v] + j; };
    const Field& Fq = *F;
    auto add_commute = [&](int vsrc, int vtgt, const Mat& AM, const Mat& AN) {
        /* f_t * AM - AN * f_s = 0, entry (i, j): i < N.fdim[vtgt], j < M.fdim[vsrc] */
        for (int i = 0; i < N.fdim[vtgt]; ++i)
            for (int j = 0; j < M.fdim[vsrc]; ++j) {
                std::vector<uint8_t> row(unknowns, 0);
                bool nz = false;
                for (int k = 0; k < M.fdim[vtgt]; ++k) {
                    uint8_t c = AM.at(k, j);
                    if (!c) continue;
                    int u = idx(vtgt, i, k);
                    row[u] = Fq.add(row[u], c);
                    nz = true;
                }
                for (int k = 0; k < N.fdim[vsrc]; ++k) {
                    uint8_t c = AN.at(i, k);
                    if (!c) continue;
                    int u = idx(vsrc, k, j);
                    row[u] = Fq.sub(row[u], c);
                    nz = true;
                }
                if (nz) rows.push_back(std::move(row));
            }
    };
    for (size_t a = 0; a < M.Q->arrows.size(); ++a) {
        auto [s, t] = M.Q->arrows[a];
        add_commute(s, t, M.arrow[a], N.arrow[a]);
    }
    for (int v = 0; v < n; ++v)
        if (M.Q->degrees[v] > 1 && M.fdim[v] && N.fdim[v])
            add_commute(v, v, M.action[v], N.action[v]);

    Mat sys(F, static_cast<int>(rows.size()), unknowns);
    for (size_t r = 0; r < rows.size(); ++r)
        for (int c = 0; c < unknowns; ++c) sys.at(static_cast<int>(r), c) = rows[r][c];
    Mat ker = sys.right_kernel();

    std::vector<RepMorphism> out;
    for (int r = 0; r < ker.rows(); ++r) {
        RepMorphism m{M, N, {}};
        for (int v = 0; v < n; ++v) {
            Mat fv(F, N.fdim[v], M.fdim[v]);
            for (int i = 0; i < N.fdim[v]; ++i)
                for (int j = 0; j < M.fdim[v]; ++j) fv.at(i, j) = ker.at(r, idx(v, i, j));
            m.f.push_back(std::move(fv));
        }
        out.push_back(std::move(m));
    }
    return out;
}

int hom_dim(const Rep& M, const Rep& N) {
    return static_cast<int>(hom_basis(M, N).size());
}

bool is_submodule(const Rep& m, const std::vector<Subspace>& U) {
    for (int v = 0; v < m.Q->n; ++v) {
        if (U[v].ambient_dim() != m.fdim[v]) return false;
        if (m.Q->degrees[v] > 1 && m.fdim[v]) {
            Mat img = U[v].basis() * m.action[v].transpose();
            if (!U[v].basis().solve_left(img)) return false;
        }
    }
    for (size_t a = 0; a < m.arrow.size(); ++a) {
        auto [s, t] = m.Q->arrows[a];
        Mat img = U[s].basis() * m.arrow[a].transpose();
        if (!U[t].basis().solve_left(img)) return false;
    }
    return true;
}

std::pair<Rep, RepMorphism> subrep(const Rep& m, const std::vector<Subspace>& U) {
    if (!is_submodule(m, U)) throw PreconditionError("subspace tuple is not a submodule");
    Rep s;
    s.Q = m.Q;
    s.fdim.resize(m.Q->n);
    s.action.resize(m.Q->n);
    for (int v = 0; v < m.Q->n; ++v) s.fdim[v] = U[v].dim();
    auto restrict_map = [&](const Mat& A, int vs, int vt) {
        /* coords of A(basis_s vectors) in basis_t: Y with basis_s A^T = Y basis_t */
        Mat img = U[vs].basis() * A.transpose();
        Mat Y;
        if (!U[vt].basis().solve_left(img, &Y))
            throw InternalInconsistency("submodule not closed under map");
        return Y.transpose();
    };
    for (size_t a = 0; a < m.arrow.size(); ++a) {
        auto [vs, vt] = m.Q->arrows[a];
        s.arrow.push_back(restrict_map(m.arrow[a], vs, vt));
    }
    for (int v = 0; v < m.Q->n; ++v)
        if (m.Q->degrees[v] > 1 && s.fdim[v]) s.action[v] = restrict_map(m.action[v], v, v);
    RepMorphism inc{s, m, {}};
    for (int v = 0; v < m.Q->n; ++v) inc.f.push_back(U[v].basis().transpose());
    return {s, inc};
}

std::pair<Rep, RepMorphism> quotient_rep(const Rep& m, const std::vector<Subspace>& U) {
    if (!is_submodule(m, U)) throw PreconditionError("subspace tuple is not a submodule");
    Rep q;
    q.Q = m.Q;
    q.fdim.resize(m.Q->n);
    q.action.resize(m.Q->n);
    std::vector<Mat> proj(m.Q->n), sec(m.Q->n);
    const Field& F = *m.Q->base;
    for (int v = 0; v < m.Q->n; ++v) {
        const Mat& B = U[v].basis();
        int n = m.fdim[v];
        /* pivot columns of the RREF basis */
        std::vector<int> pivots;
        for (int r = 0; r < B.rows(); ++r)
            for (int c = 0; c < n; ++c)
                if (B.at(r, c)) { pivots.push_back(c); break; }
        std::vector<bool> is_piv(n, false);
        for (int c : pivots) is_piv[c] = true;
        std::vector<int> free_cols;
        for (int c = 0; c < n; ++c)
            if (!is_piv[c]) free_cols.push_back(c);
        int codim = static_cast<int>(free_cols.size());
        q.fdim[v] = codim;
        Mat P(m.Q->base, codim, n), S(m.Q->base, n, codim);
        for (int j = 0; j < n; ++j) {
            /* residue of e_j after reduction by the RREF rows */
            std::vector<uint8_t> r(n, 0);
            r[j] = 1;
            for (int br = 0; br < B.rows(); ++br) {
                uint8_t c = r[pivots[br]];
                if (!c) continue;
                for (int cc = 0; cc < n; ++cc) r[cc] = F.sub(r[cc], F.mul(c, B.at(br, cc)));
            }
            for (int i = 0; i < codim; ++i) P.at(i, j) = r[free_cols[i]];
        }
        for (int i = 0; i < codim; ++i) S.at(free_cols[i], i) = 1;
        proj[v] = P;
        sec[v] = S;
    }
    for (size_t a = 0; a < m.arrow.size(); ++a) {
        auto [vs, vt] = m.Q->arrows[a];
        q.arrow.push_back(proj[vt] * m.arrow[a] * sec[vs]);
    }
    for (int v = 0; v < m.Q->n; ++v)
        if (m.Q->degrees[v] > 1 && q.fdim[v]) q.action[v] = proj[v] * m.action[v] * sec[v];
    RepMorphism pr{m, q, proj};
    return {q, pr};
}

std::vector<Subspace> kernel_subspaces(const RepMorphism& f) {
    std::vector<Subspace> out;
    for (int v = 0; v < f.source.Q->n; ++v) out.push_back(Subspace::from_rows(f.f[v].right_kernel()));
    return out;
}

std::vector<Subspace> image_subspaces(const RepMorphism& f) {
    std::vector<Subspace> out;
    for (int v = 0; v < f.source.Q->n; ++v) out.push_back(Subspace::from_rows(f.f[v].transpose()));
    return out;
}

KernelImageCokernel kernel_image_cokernel(const RepMorphism& f) {
    KernelImageCokernel out;
    auto K = kernel_subspaces(f);
    auto I = image_subspaces(f);
    std::tie(out.ker, out.ker_inc) = subrep(f.source, K);
    std::tie(out.im, out.im_inc) = subrep(f.target, I);
    std::tie(out.coker, out.coker_proj) = quotient_rep(f.target, I);
    /* factor f through its image: coords of f(e_j) in the image basis */
    RepMorphism proj{f.source, out.im, {}};
    for (int v = 0; v < f.source.Q->n; ++v) {
        Mat Y;
        if (!I[v].basis().solve_left(f.f[v].transpose(), &Y))
            throw InternalInconsistency("image factorization failed");
        proj.f.push_back(Y.transpose());
    }
    out.im_proj = proj;
    return out;
}

namespace {

RepMorphism morphism_power(const RepMorphism& f, int n) {
    RepMorphism out = identity_morphism(f.source);
    for (int i = 0; i < n; ++i) out = compose(f, out);
    return out;
}

/* Fitting split along f^N; returns the two summands if nontrivial. */
std::optional<std::pair<Rep, Rep>> fitting_split(const Rep& m, const RepMorphism& f) {
    int N = m.total_fdim();
    RepMorphism g = morphism_power(f, N);
    auto K = kernel_subspaces(g);
    auto I = image_subspaces(g);
    int dk = 0, di = 0;
    for (auto& s : K) dk += s.dim();
    for (auto& s : I) di += s.dim();
    if (dk == 0 || di == 0) return std::nullopt;
    if (dk + di != m.total_fdim())
        throw InternalInconsistency("Fitting decomposition dimensions do not add up");
    return std::make_pair(subrep(m, K).first, subrep(m, I).first);
}

}  // namespace

std::vector<Rep> decompose(const Rep& m) {
    if (m.total_fdim() == 0) return {};
    std::vector<RepMorphism> endos = hom_basis(m, m);
    int h = static_cast<int>(endos.size());
    auto try_split = [&](const RepMorphism& f) -> std::optional<std::vector<Rep>> {
        auto s = fitting_split(m, f);
        if (!s) return std::nullopt;
        std::vector<Rep> out = decompose(s->first);
        std::vector<Rep> more = decompose(s->second);
        out.insert(out.end(), more.begin(), more.end());
        return out;
    };
    for (const auto& f : endos)
        if (auto r = try_split(f)) return *r;
    for (int i = 0; i < h; ++i)
        for (int j = i + 1; j < h; ++j) {
            RepMorphism f = endos[i];
            for (int v = 0; v < m.Q->n; ++v) f.f[v] = f.f[v] + endos[j].f[v];
            if (auto r = try_split(f)) return *r;
        }
    /* exhaustive span search modulo leading scalar */
    long long count = 1;
    const int q = m.Q->base->q();
    for (int i = 0; i < h; ++i) {
        count *= q;
        if (count > (1 << 16))
            throw CapacityError("decompose: endomorphism space of dim " + std::to_string(h) +
                                " exceeds the exhaustive-search cap");
    }
    for (long long v = 1; v < count; ++v) {
        long long rest = v;
        std::vector<uint8_t> coeff(h);
        for (int i = 0; i < h; ++i) { coeff[i] = static_cast<uint8_t>(rest % q); rest /= q; }
        /* normalize: first nonzero coefficient = 1 to kill scalar repeats */
        int lead = 0;
        while (coeff[lead] == 0) ++lead;
        if (coeff[lead] != 1) continue;
        RepMorphism f{m, m, {}};
        for (int vv = 0; vv < m.Q->n; ++vv) {
            Mat acc(m.Q->base, m.fdim[vv], m.fdim[vv]);
            for (int i = 0; i < h; ++i)
                if (coeff[i]) acc = acc + endos[i].f[vv].scaled(coeff[i]);
            f.f.push_back(std::move(acc));
        }
        if (auto r = try_split(f)) return *r;
    }
    return {m};  // endomorphism span exhausted: no Fitting split, indecomposable
}

std::optional<RepMorphism> find_iso(const Rep& a, const Rep& b) {
    if (dim_vector(a) != dim_vector(b)) return std::nullopt;
    if (a.total_fdim() == 0) return identity_morphism(a);
    for (auto& f : hom_basis(a, b)) {
        bool inv = true;
        for (int v = 0; v < a.Q->n; ++v)
            if (!f.f[v].is_invertible() && a.fdim[v]) { inv = false; break; }
        if (inv) return f;
    }
    return std::nullopt;
}

bool is_isomorphic(const Rep& a, const Rep& b) {
    if (dim_vector(a) != dim_vector(b)) return false;
    if (a.total_fdim() == 0) return true;
    if (find_iso(a, b)) return true;  // always succeeds for isomorphic indecomposables
    std::vector<Rep> da = decompose(a), db = decompose(b);
    if (da.size() != db.size()) return false;
    std::vector<bool> used(db.size(), false);
    for (const Rep& x : da) {
        bool matched = false;
        for (size_t j = 0; j < db.size(); ++j) {
            if (used[j]) continue;
            if (find_iso(x, db[j])) { used[j] = true; matched = true; break; }
        }
        if (!matched) return false;
    }
    return true;
}

std::vector<std::vector<Subspace>> submodule_lattice(const Rep& m) {
    int n = m.Q->n;
    std::vector<std::vector<Subspace>> per_vertex(n);
    for (int v = 0; v < n; ++v) {
        std::vector<Mat> actions;
        if (m.Q->degrees[v] > 1 && m.fdim[v]) actions.push_back(m.action[v]);
        per_vertex[v] = enumerate_subspaces(m.fdim[v], m.Q->base, actions);
    }
    std::vector<std::vector<Subspace>> out;
    std::vector<size_t> pick(n, 0);
    while (true) {
        std::vector<Subspace> tuple;
        tuple.reserve(n);
        for (int v = 0; v < n; ++v) tuple.push_back(per_vertex[v][pick[v]]);
        if (is_submodule(m, tuple)) out.push_back(std::move(tuple));
        int v = n - 1;
        while (v >= 0 && ++pick[v] == per_vertex[v].size()) { pick[v] = 0; --v; }
        if (v < 0) break;
    }
    return out;
}

}  // namespace swc
