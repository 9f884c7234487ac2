#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "swc/mat.hpp"

namespace swc {

/* A valued (modulated) quiver over a base field F_q.  Vertex i carries the
 * division algebra F_{q^{d_i}}, realized inside F_q-matrices by the companion
 * matrix of the default degree-d_i irreducible polynomial.  Arrows between
 * vertices of different degree carry the obvious bimodule; only the shapes
 * needed for the B2/C2 species (degree d -> degree 1) are supported. */
struct ValuedQuiver {
    std::shared_ptr<const Field> base;
    int n = 0;
    std::vector<int> degrees;                  // d_i >= 1
    std::vector<std::pair<int, int>> arrows;   // (source, target), 0-based
    std::vector<Mat> companion;                // d_i x d_i companion matrix; empty when d_i == 1

    bool plain() const {
        for (int d : degrees)
            if (d != 1) return false;
        return true;
    }
};

std::shared_ptr<const ValuedQuiver> make_quiver(std::shared_ptr<const Field> base,
                                                std::vector<int> degrees,
                                                std::vector<std::pair<int, int>> arrows);

}  // namespace swc
