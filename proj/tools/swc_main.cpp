#include <fstream>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "swc/problem.hpp"
#include "swc/render.hpp"
#include "swc/report.hpp"
#include "swc/verify.hpp"

namespace {

using namespace swc;

Theta parse_theta_arg(const std::string& s) {
    Theta th;
    std::string cur;
    auto flush = [&] {
        size_t slash = cur.find('/');
        if (slash == std::string::npos) {
            th.push_back(Rat(std::stoll(cur)));
        } else {
            th.push_back(Rat(std::stoll(cur.substr(0, slash)), std::stoll(cur.substr(slash + 1))));
        }
        cur.clear();
    };
    for (char ch : s) {
        if (ch == ',') {
            flush();
        } else {
            cur += ch;
        }
    }
    flush();
    return th;
}

struct Session {
    ProblemFile pf;
    std::optional<Catalog> cat;
    std::optional<ReducedK0> k0;

    const Catalog& catalog() {
        if (!cat) cat = build_from_problem(pf);
        return *cat;
    }
    const ReducedK0& reduced() {
        if (!k0) k0 = reduced_K0(catalog());
        return *k0;
    }
    StabilityContext context(bool use_reduced) {
        return use_reduced ? reduced_context(catalog(), reduced()) : ambient_context(catalog());
    }
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw PreconditionError("cannot open output file: " + out_path);
    out << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact wall-and-chamber stability diagrams for torsion classes"};
    app.require_subcommand(1);

    std::string problem_path, out_path, theta_arg, theta0_arg, eta_arg, path_name, diagram;
    std::string pole_arg;
    bool use_reduced = false;
    int segments = 128;
    app.add_option("-p,--problem", problem_path, "problem file (text or JSON)")->required();
    app.add_option("-o,--out", out_path, "write output to a file instead of stdout");

    CLI::App* sc_catalog = app.add_subcommand("catalog", "dump the catalog with strictness tables");
    CLI::App* sc_classify = app.add_subcommand("classify", "the six classes at a stability point");
    sc_classify->add_option("--theta", theta_arg, "comma-separated rationals, or a named theta")
        ->required();
    sc_classify->add_flag("--reduced", use_reduced, "use the reduced space");
    CLI::App* sc_walls = app.add_subcommand("walls", "distinct pseudo-walls with kinds");
    sc_walls->add_flag("--reduced", use_reduced, "use the reduced space");
    CLI::App* sc_chambers = app.add_subcommand("chambers", "chamber records with adjacency");
    sc_chambers->add_flag("--reduced", use_reduced, "use the reduced space");
    CLI::App* sc_green = app.add_subcommand("greenpath", "schedule, FHO sequence, HN filtrations");
    sc_green->add_option("--theta0", theta0_arg, "start point");
    sc_green->add_option("--eta", eta_arg, "direction (all coordinates positive)");
    sc_green->add_option("--path", path_name, "named path from the problem file");
    CLI::App* sc_ghosts = app.add_subcommand("ghosts", "non-strict epimorphisms of missing objects");
    CLI::App* sc_k0 = app.add_subcommand("k0", "reduced K-theory presentation");
    CLI::App* sc_render = app.add_subcommand("render", "SVG stability diagram");
    sc_render->add_option("--diagram", diagram, "ambient or reduced")->required();
    sc_render->add_option("--pole", pole_arg, "stereographic pole for rank-3 (x,y,z)");
    sc_render->add_option("--segments", segments, "polyline resolution");
    CLI::App* sc_verify = app.add_subcommand("verify", "run the theorem suite");

    CLI11_PARSE(app, argc, argv);

    try {
        Session s;
        s.pf = load_problem(problem_path);
        if (sc_catalog->parsed()) {
            emit(report_catalog(s.catalog()), out_path);
        } else if (sc_classify->parsed()) {
            Theta th = s.pf.thetas.count(theta_arg) ? s.pf.thetas.at(theta_arg)
                                                    : parse_theta_arg(theta_arg);
            emit(report_classify(s.context(use_reduced), th), out_path);
        } else if (sc_walls->parsed()) {
            emit(report_walls(s.context(use_reduced)), out_path);
        } else if (sc_chambers->parsed()) {
            StabilityContext ctx = s.context(use_reduced);
            emit(report_chambers(ctx, enumerate_chambers(ctx)), out_path);
        } else if (sc_green->parsed()) {
            StabilityContext ctx = s.context(false);
            GreenPathLinear path{};
            if (!path_name.empty()) {
                if (!s.pf.paths.count(path_name))
                    throw PreconditionError("no path named '" + path_name + "' in problem file");
                const NamedPath& np = s.pf.paths.at(path_name);
                path = validate_green(ctx, np.theta0, np.eta);
            } else if (!theta0_arg.empty() && !eta_arg.empty()) {
                path = validate_green(ctx, parse_theta_arg(theta0_arg), parse_theta_arg(eta_arg));
            } else {
                throw PreconditionError("greenpath needs --path or both --theta0 and --eta");
            }
            emit(report_greenpath(ctx, path), out_path);
        } else if (sc_ghosts->parsed()) {
            emit(report_ghosts(s.catalog()), out_path);
        } else if (sc_k0->parsed()) {
            emit(report_k0(s.catalog(), s.reduced()), out_path);
        } else if (sc_render->parsed()) {
            if (diagram != "ambient" && diagram != "reduced")
                throw PreconditionError("--diagram must be 'ambient' or 'reduced'");
            StabilityContext ctx = s.context(diagram == "reduced");
            DiagramSpec spec;
            spec.segments = segments;
            if (!pole_arg.empty()) {
                spec.pole.clear();
                for (const Rat& r : parse_theta_arg(pole_arg)) {
                    if (r.denominator() != 1)
                        throw PreconditionError("--pole must be an integer vector");
                    spec.pole.push_back(r.numerator());
                }
            }
            std::vector<ChamberRecord> chambers = enumerate_chambers(ctx);
            std::string svg = ctx.dim == 2 ? render_rank2(ctx, chambers, spec)
                                           : render_rank3_stereo(ctx, chambers, spec);
            emit(svg, out_path);
        } else if (sc_verify->parsed()) {
            std::vector<VerifyItem> items = verify_suite(s.catalog());
            for (const auto& [name, np] : s.pf.paths) {
                StabilityContext ctx = s.context(false);
                GreenPathLinear path = validate_green(ctx, np.theta0, np.eta);
                for (VerifyItem& it : verify_greenpath_suite(ctx, path)) {
                    it.name += " [path " + name + "]";
                    items.push_back(std::move(it));
                }
            }
            emit(verify_table(items), out_path);
            return verify_all_pass(items) ? 0 : 1;
        }
        return 0;
    } catch (const swc::PreconditionError& ex) {
        std::cerr << "precondition error: " << ex.what() << "\n";
        return 2;
    } catch (const swc::CapacityError& ex) {
        std::cerr << "capacity error: " << ex.what() << "\n";
        return 3;
    } catch (const swc::InternalInconsistency& ex) {
        std::cerr << "internal inconsistency: " << ex.what() << "\n";
        return 4;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 5;
    }
}
