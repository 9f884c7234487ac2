#pragma once

#include <string>

#include "swc/chambers.hpp"
#include "swc/greenpath.hpp"

namespace swc {

/* Deterministic plain-text reports backing the CLI subcommands and the
 * golden-file tests.  Output depends only on the catalog contents, never on
 * iteration order of unordered containers or on the thread count. */
std::string report_catalog(const Catalog& c);
std::string report_classify(const StabilityContext& ctx, const Theta& theta);
std::string report_walls(const StabilityContext& ctx);
std::string report_chambers(const StabilityContext& ctx,
                            const std::vector<ChamberRecord>& records);
std::string report_greenpath(const StabilityContext& ctx, const GreenPathLinear& path);
std::string report_ghosts(const Catalog& c);
std::string report_k0(const Catalog& c, const ReducedK0& k);

}  // namespace swc
