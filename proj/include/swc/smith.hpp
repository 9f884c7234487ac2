#pragma once

#include <vector>

#include "swc/common.hpp"

namespace swc {

/* Dense integer matrix, row-major. */
struct IntMat {
    int rows = 0, cols = 0;
    std::vector<long long> e;
    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), e(static_cast<size_t>(r) * c, 0) {}
    long long& at(int r, int c) { return e[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return e[static_cast<size_t>(r) * cols + c]; }
    static IntMat identity(int n);
    IntMat operator*(const IntMat& o) const;
    bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && e == o.e; }
};

struct SmithResult {
    std::vector<long long> diag;  // d1 | d2 | ..., nonnegative
    IntMat U, V;                  // unimodular, U*m*V = diag embedded in rows x cols
    IntMat Uinv, Vinv;            // exact inverses of U and V
};

SmithResult smith_normal_form(const IntMat& m);

}  // namespace swc
