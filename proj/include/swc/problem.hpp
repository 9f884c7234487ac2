#pragma once

#include <map>
#include <string>

#include "swc/catalog.hpp"
#include "swc/greenpath.hpp"

namespace swc {

/* A problem file bundles everything needed to rebuild a catalog and replay
 * the named stability points and green paths of an example: base field,
 * valued quiver, torsion cogenerators, length bound, and optional named θ
 * points and linear paths.  Two interchangeable encodings are accepted: a
 * line-oriented text format with a versioned header, and a JSON rendering
 * of the same fields. */
struct NamedPath {
    Theta theta0, eta;
};

struct ProblemFile {
    int version = 1;
    std::string name;
    int p = 2, k = 1;
    int vertices = 0;
    std::vector<int> degrees;
    std::vector<std::pair<int, int>> arrows;
    std::vector<DimVector> cogenerators;
    int length_bound = 5;
    std::map<std::string, Theta> thetas;
    std::map<std::string, NamedPath> paths;
};

ProblemFile parse_problem(const std::string& text);
ProblemFile load_problem(const std::string& path);
std::string problem_to_text(const ProblemFile& pf);
std::string problem_to_json(const ProblemFile& pf);

Catalog build_from_problem(const ProblemFile& pf);

}  // namespace swc
