#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "swc/field.hpp"

namespace swc {

/* Dense row-major matrix over a small finite field. */
class Mat {
public:
    Mat() : field_(nullptr), rows_(0), cols_(0) {}
    Mat(std::shared_ptr<const Field> f, int rows, int cols)
        : field_(std::move(f)), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {}

    static Mat identity(std::shared_ptr<const Field> f, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const Field& field() const { return *field_; }
    std::shared_ptr<const Field> field_ptr() const { return field_; }

    uint8_t at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
    uint8_t& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const std::vector<uint8_t>& entries() const { return e_; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scaled(uint8_t c) const;
    Mat transpose() const;
    bool is_zero() const;
    bool operator==(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    /* Stack o below/right of *this. */
    Mat vstack(const Mat& o) const;
    Mat hstack(const Mat& o) const;
    Mat row(int r) const;
    Mat submatrix_rows(const std::vector<int>& which) const;

    /* In-place reduced row echelon form; returns pivot column list. */
    std::vector<int> rref();
    int rank() const;
    /* Basis of the right null space, one kernel vector per row. */
    Mat right_kernel() const;
    /* Solve x * A = b for a row vector b (row-space membership); returns
     * false if inconsistent. */
    bool solve_left(const Mat& b, Mat* x = nullptr) const;
    bool is_invertible() const;
    Mat inverse() const;

private:
    std::shared_ptr<const Field> field_;
    int rows_, cols_;
    std::vector<uint8_t> e_;
};

/* rank + right kernel in one call. */
std::pair<int, Mat> rref_rank_kernel(const Mat& m);

}  // namespace swc
