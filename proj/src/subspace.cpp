#include "swc/subspace.hpp"

#include <algorithm>

namespace swc {

Subspace::Subspace(std::shared_ptr<const Field> f, int ambient)
    : ambient_(ambient), basis_(Mat(std::move(f), 0, ambient)) {}

Subspace Subspace::full(std::shared_ptr<const Field> f, int n) {
    return from_rows(Mat::identity(std::move(f), n));
}

Subspace Subspace::from_rows(const Mat& generators) {
    Subspace s;
    s.ambient_ = generators.cols();
    Mat m = generators;
    std::vector<int> pivots = m.rref();
    s.basis_ = m.submatrix_rows([&] {
        std::vector<int> keep(pivots.size());
        for (size_t i = 0; i < pivots.size(); ++i) keep[i] = static_cast<int>(i);
        return keep;
    }());
    return s;
}

bool Subspace::contains(const Mat& row_vector) const {
    return basis_.solve_left(row_vector);
}

bool Subspace::contains(const Subspace& other) const {
    return basis_.solve_left(other.basis_);
}

Subspace Subspace::sum(const Subspace& other) const {
    return from_rows(basis_.vstack(other.basis_));
}

Subspace Subspace::intersect(const Subspace& other) const {
    /* x in both row spaces: x = u A = v B; solve [A^T | -B^T] kernel. */
    if (dim() == 0 || other.dim() == 0) return Subspace(basis_.field_ptr(), ambient_);
    Mat at = basis_.transpose();
    Mat bt = other.basis_.transpose();
    /* negate bt */
    Mat nbt(bt.field_ptr(), bt.rows(), bt.cols());
    for (int i = 0; i < bt.rows(); ++i)
        for (int j = 0; j < bt.cols(); ++j) nbt.at(i, j) = bt.field().neg(bt.at(i, j));
    Mat sys = at.hstack(nbt);
    Mat ker = sys.right_kernel();  // rows (u | v)
    Mat gens(basis_.field_ptr(), ker.rows(), ambient_);
    const Field& F = basis_.field();
    for (int r = 0; r < ker.rows(); ++r)
        for (int k = 0; k < dim(); ++k) {
            uint8_t c = ker.at(r, k);
            if (!c) continue;
            for (int j = 0; j < ambient_; ++j)
                gens.at(r, j) = F.add(gens.at(r, j), F.mul(c, basis_.at(k, j)));
        }
    return from_rows(gens);
}

Subspace Subspace::apply(const Mat& A) const {
    /* basis rows v become (A v^T)^T = v A^T. */
    return from_rows(basis_ * A.transpose());
}

Subspace Subspace::preimage(const Mat& A) const {
    /* {x : A x in span}: complement test via kernel of projection.  Solve for
     * x with A x expressible in the basis: x in kernel of (I - proj)∘A is
     * awkward; instead row-reduce [A^T row expression]: x satisfies
     * A x ∈ span(B) ⟺ x ⟂ every functional vanishing on span(B) pulled back.
     * Functionals vanishing on span(B): kernel K of B (right kernel, rows w
     * with B w^T = 0).  Condition: (A x)·w = 0 ∀w ⟺ x ∈ right kernel of
     * W A where W has rows w. */
    Mat W = basis_.right_kernel();
    if (W.rows() == 0) return Subspace::full(A.field_ptr(), A.cols());
    Mat WA = W * A;
    return from_rows(WA.right_kernel());
}

bool Subspace::operator<(const Subspace& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return basis_.entries() < o.basis_.entries();
}

std::vector<uint8_t> Subspace::key() const {
    std::vector<uint8_t> k;
    k.push_back(static_cast<uint8_t>(dim()));
    k.insert(k.end(), basis_.entries().begin(), basis_.entries().end());
    return k;
}

std::vector<Subspace> enumerate_subspaces(int n, std::shared_ptr<const Field> f,
                                          const std::vector<Mat>& actions, int cap_bits) {
    {
        long long total = 1;
        for (int i = 0; i < n; ++i) {
            total *= f->q();
            if (total > cap_bits)
                throw CapacityError("subspace enumeration: ambient dim " + std::to_string(n) +
                                    " over F_" + std::to_string(f->q()) + " exceeds cap");
        }
    }
    std::vector<Subspace> out;
    auto invariant = [&](const Subspace& s) {
        for (const Mat& A : actions) {
            Mat img = s.basis() * A.transpose();
            if (!s.basis().solve_left(img)) return false;
        }
        return true;
    };
    for (int k = 0; k <= n; ++k) {
        /* choose pivot columns c_0 < ... < c_{k-1} */
        std::vector<int> piv(k);
        for (int i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            /* free entries: (row i, col j) with j > piv[i], j not a pivot */
            std::vector<std::pair<int, int>> free_pos;
            std::vector<bool> is_piv(n, false);
            for (int c : piv) is_piv[c] = true;
            for (int i = 0; i < k; ++i)
                for (int j = piv[i] + 1; j < n; ++j)
                    if (!is_piv[j]) free_pos.emplace_back(i, j);
            long long count = 1;
            for (size_t i = 0; i < free_pos.size(); ++i) count *= f->q();
            for (long long v = 0; v < count; ++v) {
                Mat b(f, k, n);
                for (int i = 0; i < k; ++i) b.at(i, piv[i]) = 1;
                long long rest = v;
                for (auto& [ri, cj] : free_pos) {
                    b.at(ri, cj) = static_cast<uint8_t>(rest % f->q());
                    rest /= f->q();
                }
                Subspace s = Subspace::from_rows(b);
                if (invariant(s)) out.push_back(std::move(s));
            }
            /* next pivot combination */
            if (k == 0) break;
            int i = k - 1;
            while (i >= 0 && piv[i] == n - k + i) --i;
            if (i < 0) break;
            ++piv[i];
            for (int j = i + 1; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace swc
