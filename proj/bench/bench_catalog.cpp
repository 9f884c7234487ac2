/* Benchmark of the OpenMP catalog kernels against the serial reference
 * path.  Builds each fixture catalog with both paths, times them, and
 * asserts that the results are identical entry for entry. */
#include <chrono>
#include <cstdio>

#include "swc/catalog.hpp"
#include "swc/parallel.hpp"

using namespace swc;

namespace {

struct Fixture {
    const char* name;
    std::vector<int> degrees;
    std::vector<std::pair<int, int>> arrows;
    std::vector<DimVector> cogens;
    int length;
};

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

bool same_catalog(const Catalog& a, const Catalog& b) {
    if (a.size() != b.size()) return false;
    for (int i = 0; i < a.size(); ++i) {
        const Entry &x = a.e(i), &y = b.e(i);
        if (x.dim != y.dim || x.in_G != y.in_G || x.pseudo_brick != y.pseudo_brick ||
            x.summands != y.summands || x.strict_sub_iso != y.strict_sub_iso ||
            x.strict_quot_iso != y.strict_quot_iso || x.strict_ext_pairs != y.strict_ext_pairs)
            return false;
    }
    return true;
}

}  // namespace

int main() {
    const Fixture fixtures[] = {
        {"b2 (F4/F2, perp P2, L=6)", {2, 1}, {{0, 1}}, {{0, 1}}, 6},
        {"a3-left (perp S1, L=5)", {1, 1, 1}, {{1, 0}, {2, 1}}, {{1, 0, 0}}, 5},
        {"a3-right (perp S2, L=5)", {1, 1, 1}, {{0, 1}, {1, 2}}, {{0, 1, 0}}, 5},
    };
    std::printf("%-28s %10s %10s %8s  %s\n", "fixture", "serial", "openmp", "speedup",
                "identical");
    bool all_same = true;
    for (const Fixture& f : fixtures) {
        auto quiver = make_quiver(Field::make(2, 1), f.degrees, f.arrows);
        TorsionSpec spec{f.cogens};
        CatalogOptions opts;
        opts.length_bound = f.length;

        parallel_enabled() = false;
        auto t0 = std::chrono::steady_clock::now();
        Catalog serial = build_catalog(quiver, spec, opts);
        double serial_ms = ms_since(t0);

        parallel_enabled() = true;
        t0 = std::chrono::steady_clock::now();
        Catalog parallel = build_catalog(quiver, spec, opts);
        double parallel_ms = ms_since(t0);

        bool same = same_catalog(serial, parallel);
        all_same = all_same && same;
        std::printf("%-28s %8.1fms %8.1fms %7.2fx  %s\n", f.name, serial_ms, parallel_ms,
                    serial_ms / parallel_ms, same ? "yes" : "NO");
    }
    if (!all_same) {
        std::fprintf(stderr, "serial and OpenMP catalogs disagree\n");
        return 1;
    }
    return 0;
}
