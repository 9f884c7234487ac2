#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace swc {

/* Error taxonomy: capacity errors are resource-budget refusals (we never
 * sample or approximate instead), precondition errors are caller mistakes. */
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};
struct InternalInconsistency : std::runtime_error {
    explicit InternalInconsistency(const std::string& what) : std::runtime_error(what) {}
};

using Rat = boost::rational<long long>;

inline std::string rat_str(const Rat& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

using IntVec = std::vector<long long>;

inline Rat dot(const std::vector<Rat>& theta, const IntVec& d) {
    Rat s(0);
    for (size_t i = 0; i < theta.size(); ++i) s += theta[i] * Rat(d[i]);
    return s;
}

inline long long gcd_ll(long long a, long long b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) { long long t = a % b; a = b; b = t; }
    return a;
}

}  // namespace swc
