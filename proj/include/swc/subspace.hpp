#pragma once

#include <vector>

#include "swc/mat.hpp"

namespace swc {

/* A subspace of F_q^n stored by its unique RREF row basis; equal subspaces
 * compare equal bitwise. */
class Subspace {
public:
    Subspace() : ambient_(0) {}
    Subspace(std::shared_ptr<const Field> f, int ambient);        // zero space
    static Subspace full(std::shared_ptr<const Field> f, int n);
    static Subspace from_rows(const Mat& generators);             // canonicalizes

    int ambient_dim() const { return ambient_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }

    bool contains(const Mat& row_vector) const;
    bool contains(const Subspace& other) const;
    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    /* Image of this subspace under x -> A x (column-vector convention);
     * basis rows are treated as vectors. */
    Subspace apply(const Mat& A) const;
    /* Preimage under x -> A x of this subspace inside the source space. */
    Subspace preimage(const Mat& A) const;

    bool operator==(const Subspace& o) const {
        return ambient_ == o.ambient_ && basis_ == o.basis_;
    }
    bool operator<(const Subspace& o) const;  // deterministic total order

    std::vector<uint8_t> key() const;  // hashing / dedup bytes

private:
    int ambient_;
    Mat basis_;
};

/* All subspaces of F_q^n invariant under every action matrix (n x n, acting
 * on column vectors), enumerated by RREF pivot patterns, canonically sorted.
 * The cap guards against accidental exponential blowups. */
std::vector<Subspace> enumerate_subspaces(int n, std::shared_ptr<const Field> f,
                                          const std::vector<Mat>& actions,
                                          int cap_bits = 256);

}  // namespace swc
