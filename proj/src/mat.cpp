#include "swc/mat.hpp"

namespace swc {

Mat Mat::identity(std::shared_ptr<const Field> f, int n) {
    Mat m(std::move(f), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw PreconditionError("matrix product shape mismatch");
    Mat out(field_ ? field_ : o.field_, rows_, o.cols_);
    const Field& F = out.field();
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            uint8_t a = at(i, k);
            if (!a) continue;
            for (int j = 0; j < o.cols_; ++j) {
                uint8_t b = o.at(k, j);
                if (b) out.at(i, j) = F.add(out.at(i, j), F.mul(a, b));
            }
        }
    return out;
}

Mat Mat::operator+(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix sum shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_->add(e_[i], o.e_[i]);
    return out;
}

Mat Mat::operator-(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw PreconditionError("matrix difference shape mismatch");
    Mat out = *this;
    for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_->sub(e_[i], o.e_[i]);
    return out;
}

Mat Mat::scaled(uint8_t c) const {
    Mat out = *this;
    for (auto& x : out.e_) x = field_->mul(x, c);
    return out;
}

Mat Mat::transpose() const {
    Mat out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

bool Mat::is_zero() const {
    for (uint8_t x : e_)
        if (x) return false;
    return true;
}

Mat Mat::vstack(const Mat& o) const {
    if (cols_ != o.cols_) throw PreconditionError("vstack width mismatch");
    Mat out(field_ ? field_ : o.field_, rows_ + o.rows_, cols_);
    std::copy(e_.begin(), e_.end(), out.e_.begin());
    std::copy(o.e_.begin(), o.e_.end(), out.e_.begin() + e_.size());
    return out;
}

Mat Mat::hstack(const Mat& o) const {
    if (rows_ != o.rows_) throw PreconditionError("hstack height mismatch");
    Mat out(field_ ? field_ : o.field_, rows_, cols_ + o.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) out.at(i, j) = at(i, j);
        for (int j = 0; j < o.cols_; ++j) out.at(i, cols_ + j) = o.at(i, j);
    }
    return out;
}

Mat Mat::row(int r) const {
    Mat out(field_, 1, cols_);
    for (int j = 0; j < cols_; ++j) out.at(0, j) = at(r, j);
    return out;
}

Mat Mat::submatrix_rows(const std::vector<int>& which) const {
    Mat out(field_, static_cast<int>(which.size()), cols_);
    for (size_t i = 0; i < which.size(); ++i)
        for (int j = 0; j < cols_; ++j) out.at(static_cast<int>(i), j) = at(which[i], j);
    return out;
}

std::vector<int> Mat::rref() {
    const Field& F = *field_;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int pr = -1;
        for (int i = r; i < rows_; ++i)
            if (at(i, c)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(pr, j), at(r, j));
        uint8_t inv = F.inv(at(r, c));
        for (int j = 0; j < cols_; ++j) at(r, j) = F.mul(at(r, j), inv);
        for (int i = 0; i < rows_; ++i) {
            if (i == r) continue;
            uint8_t f = at(i, c);
            if (!f) continue;
            for (int j = 0; j < cols_; ++j) at(i, j) = F.sub(at(i, j), F.mul(f, at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
}

Mat Mat::right_kernel() const {
    Mat m = *this;
    std::vector<int> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (int c : pivots) is_pivot[c] = true;
    int nullity = cols_ - static_cast<int>(pivots.size());
    Mat out(field_, nullity, cols_);
    int kr = 0;
    for (int c = 0; c < cols_; ++c) {
        if (is_pivot[c]) continue;
        out.at(kr, c) = 1;
        for (size_t pi = 0; pi < pivots.size(); ++pi)
            out.at(kr, pivots[pi]) = field_->neg(m.at(static_cast<int>(pi), c));
        ++kr;
    }
    return out;
}

bool Mat::solve_left(const Mat& b, Mat* x) const {
    if (b.cols() != cols_) throw PreconditionError("solve_left width mismatch");
    /* Row-reduce [this | I] and express b rows against the reduced rows. */
    Mat aug = hstack(Mat::identity(field_, rows_));
    std::vector<int> pivots;
    {
        /* rref of the left block only, carrying the right block along. */
        const Field& F = *field_;
        int r = 0;
        for (int c = 0; c < cols_ && r < rows_; ++c) {
            int pr = -1;
            for (int i = r; i < rows_; ++i)
                if (aug.at(i, c)) { pr = i; break; }
            if (pr < 0) continue;
            if (pr != r)
                for (int j = 0; j < aug.cols(); ++j) std::swap(aug.at(pr, j), aug.at(r, j));
            uint8_t inv = F.inv(aug.at(r, c));
            for (int j = 0; j < aug.cols(); ++j) aug.at(r, j) = F.mul(aug.at(r, j), inv);
            for (int i = 0; i < rows_; ++i) {
                if (i == r) continue;
                uint8_t f = aug.at(i, c);
                if (!f) continue;
                for (int j = 0; j < aug.cols(); ++j)
                    aug.at(i, j) = F.sub(aug.at(i, j), F.mul(f, aug.at(r, j)));
            }
            pivots.push_back(c);
            ++r;
        }
    }
    const Field& F = *field_;
    if (x) *x = Mat(field_, b.rows(), rows_);
    for (int br = 0; br < b.rows(); ++br) {
        std::vector<uint8_t> residue(cols_);
        for (int j = 0; j < cols_; ++j) residue[j] = b.at(br, j);
        std::vector<uint8_t> combo(rows_, 0);
        for (size_t pi = 0; pi < pivots.size(); ++pi) {
            uint8_t f = residue[pivots[pi]];
            if (!f) continue;
            for (int j = 0; j < cols_; ++j)
                residue[j] = F.sub(residue[j], F.mul(f, aug.at(static_cast<int>(pi), j)));
            for (int j = 0; j < rows_; ++j)
                combo[j] = F.add(combo[j], F.mul(f, aug.at(static_cast<int>(pi), cols_ + j)));
        }
        for (int j = 0; j < cols_; ++j)
            if (residue[j]) return false;
        if (x)
            for (int j = 0; j < rows_; ++j) x->at(br, j) = combo[j];
    }
    return true;
}

bool Mat::is_invertible() const {
    return rows_ == cols_ && rank() == rows_;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) throw PreconditionError("inverse of non-square matrix");
    Mat aug = hstack(Mat::identity(field_, rows_));
    std::vector<int> pivots = aug.rref();
    if (static_cast<int>(pivots.size()) != rows_ || pivots.back() >= rows_)
        throw PreconditionError("matrix is singular");
    Mat out(field_, rows_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < rows_; ++j) out.at(i, j) = aug.at(i, rows_ + j);
    return out;
}

std::pair<int, Mat> rref_rank_kernel(const Mat& m) {
    Mat k = m.right_kernel();
    return {m.cols() - k.rows(), k};
}

}  // namespace swc
