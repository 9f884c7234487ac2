#pragma once

#include <string>

#include "swc/greenpath.hpp"

namespace swc {

/* Executable theorem suite: every proved statement becomes a named check
 * over the catalog, and `verify_table` prints the pass/fail matrix keyed by
 * theorem name.  All checks are exact; a single counterexample fails the
 * item and is reported in `detail`. */
struct VerifyItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    int min_theta_samples = 50;
    int class_samples = 20;
    unsigned seed = 20260826;
    int composition_budget = 200;  // rep-level morphism composites per check
    int diagram_budget = 40;       // main diagrams constructed
};

/* Catalog-level and ambient stability-space checks. */
std::vector<VerifyItem> verify_suite(const Catalog& c, const VerifyOptions& opts = {});
/* Green-path checks along one validated linear path. */
std::vector<VerifyItem> verify_greenpath_suite(const StabilityContext& ctx,
                                               const GreenPathLinear& path);

std::string verify_table(const std::vector<VerifyItem>& items);
bool verify_all_pass(const std::vector<VerifyItem>& items);

}  // namespace swc
