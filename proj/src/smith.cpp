#include "swc/smith.hpp"

#include <cstdlib>

namespace swc {

IntMat IntMat::identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (cols != o.rows) throw PreconditionError("integer matrix product shape mismatch");
    IntMat out(rows, o.cols);
    for (int i = 0; i < rows; ++i)
        for (int k = 0; k < cols; ++k) {
            long long a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < o.cols; ++j) out.at(i, j) += a * o.at(k, j);
        }
    return out;
}

namespace {

/* Elementary operations mirrored onto the transforms; the inverse transform
 * receives the inverse operation on the opposite side. */
struct Worker {
    IntMat A, U, V, Uinv, Vinv;

    void row_swap(int i, int j) {
        for (int c = 0; c < A.cols; ++c) std::swap(A.at(i, c), A.at(j, c));
        for (int c = 0; c < U.cols; ++c) std::swap(U.at(i, c), U.at(j, c));
        for (int r = 0; r < Uinv.rows; ++r) std::swap(Uinv.at(r, i), Uinv.at(r, j));
    }
    void row_add(int i, int j, long long f) {  // row i += f * row j
        for (int c = 0; c < A.cols; ++c) A.at(i, c) += f * A.at(j, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) += f * U.at(j, c);
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, j) -= f * Uinv.at(r, i);
    }
    void row_negate(int i) {
        for (int c = 0; c < A.cols; ++c) A.at(i, c) = -A.at(i, c);
        for (int c = 0; c < U.cols; ++c) U.at(i, c) = -U.at(i, c);
        for (int r = 0; r < Uinv.rows; ++r) Uinv.at(r, i) = -Uinv.at(r, i);
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < A.rows; ++r) std::swap(A.at(r, i), A.at(r, j));
        for (int r = 0; r < V.rows; ++r) std::swap(V.at(r, i), V.at(r, j));
        for (int c = 0; c < Vinv.cols; ++c) std::swap(Vinv.at(i, c), Vinv.at(j, c));
    }
    void col_add(int i, int j, long long f) {  // col i += f * col j
        for (int r = 0; r < A.rows; ++r) A.at(r, i) += f * A.at(r, j);
        for (int r = 0; r < V.rows; ++r) V.at(r, i) += f * V.at(r, j);
        for (int c = 0; c < Vinv.cols; ++c) Vinv.at(j, c) -= f * Vinv.at(i, c);
    }
    void col_negate(int i) {
        for (int r = 0; r < A.rows; ++r) A.at(r, i) = -A.at(r, i);
        for (int r = 0; r < V.rows; ++r) V.at(r, i) = -V.at(r, i);
        for (int c = 0; c < Vinv.cols; ++c) Vinv.at(i, c) = -Vinv.at(i, c);
    }
};

}  // namespace

SmithResult smith_normal_form(const IntMat& m) {
    Worker w;
    w.A = m;
    w.U = IntMat::identity(m.rows);
    w.Uinv = IntMat::identity(m.rows);
    w.V = IntMat::identity(m.cols);
    w.Vinv = IntMat::identity(m.cols);

    int n = std::min(m.rows, m.cols);
    for (int t = 0; t < n; ++t) {
        /* find a nonzero pivot of minimal absolute value in the remaining block */
        while (true) {
            int pr = -1, pc = -1;
            long long best = 0;
            for (int i = t; i < m.rows; ++i)
                for (int j = t; j < m.cols; ++j) {
                    long long v = std::llabs(w.A.at(i, j));
                    if (v != 0 && (pr < 0 || v < best)) { pr = i; pc = j; best = v; }
                }
            if (pr < 0) break;  // block is zero
            if (pr != t) w.row_swap(pr, t);
            if (pc != t) w.col_swap(pc, t);
            if (w.A.at(t, t) < 0) w.row_negate(t);
            long long piv = w.A.at(t, t);
            bool clean = true;
            for (int i = t + 1; i < m.rows; ++i) {
                long long v = w.A.at(i, t);
                if (v % piv) { w.row_add(i, t, -(v / piv)); clean = false; }
                else if (v) w.row_add(i, t, -(v / piv));
            }
            for (int j = t + 1; j < m.cols; ++j) {
                long long v = w.A.at(t, j);
                if (v % piv) { w.col_add(j, t, -(v / piv)); clean = false; }
                else if (v) w.col_add(j, t, -(v / piv));
            }
            if (!clean) continue;  // smaller remainders appeared, repeat
            /* pivot must also divide every remaining entry for the chain */
            bool divides_all = true;
            for (int i = t + 1; i < m.rows && divides_all; ++i)
                for (int j = t + 1; j < m.cols; ++j)
                    if (w.A.at(i, j) % piv) {
                        w.row_add(t, i, 1);  // pull the offending row up
                        divides_all = false;
                        break;
                    }
            if (divides_all) break;
        }
    }
    SmithResult out;
    out.diag.resize(n);
    for (int i = 0; i < n; ++i) out.diag[i] = w.A.at(i, i);
    out.U = w.U;
    out.V = w.V;
    out.Uinv = w.Uinv;
    out.Vinv = w.Vinv;
    return out;
}

}  // namespace swc
