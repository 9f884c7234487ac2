#include "swc/report.hpp"

#include <sstream>

namespace swc {

namespace {

std::string theta_str(const Theta& th) {
    std::string out = "(";
    for (size_t i = 0; i < th.size(); ++i) {
        if (i) out += ",";
        out += rat_str(th[i]);
    }
    return out + ")";
}

std::string vec_str(const IntVec& v) {
    std::string out = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    return out + ")";
}

std::string names(const Catalog& c, const std::vector<int>& entries) {
    std::string out = "{";
    bool first = true;
    for (int e : entries) {
        if (e == c.zero_entry()) continue;  // zero is implicit in every class
        if (!first) out += ", ";
        out += c.entry_name(e);
        first = false;
    }
    return out + "}";
}

const char* kind_name(WallKind::Kind k) {
    switch (k) {
        case WallKind::none: return "none";
        case WallKind::thin: return "thin";
        case WallKind::quasi_thin: return "quasi-thin";
        case WallKind::thick: return "thick";
    }
    return "?";
}

}  // namespace

std::string report_catalog(const Catalog& c) {
    std::ostringstream out;
    out << "catalog: " << c.size() << " iso classes, length bound " << c.opts.length_bound
        << ", base field q=" << c.Q->base->q() << "\n";
    out << "cogenerators:";
    for (int e : c.cogen_entries) out << " " << c.entry_name(e);
    if (c.cogen_entries.empty()) out << " (none; G = mod-Lambda)";
    out << "\n";
    for (int i = 0; i < c.size(); ++i) {
        const Entry& e = c.e(i);
        out << "[" << i << "] " << c.entry_name(i) << " dim=" << vec_str(e.dim)
            << " total=" << e.total << (e.indecomposable ? " indec" : "")
            << (e.in_G ? " in-G" : "") << (e.in_G && e.pseudo_brick ? " pseudo-brick" : "");
        if (e.in_G) {
            out << "\n    strict subs: " << names(c, e.strict_sub_iso);
            out << "\n    strict quots: " << names(c, e.strict_quot_iso);
        }
        out << "\n";
    }
    return out.str();
}

std::string report_classify(const StabilityContext& ctx, const Theta& theta) {
    const Catalog& c = *ctx.cat;
    ClassesAt cls = classes_at(ctx, theta);
    std::ostringstream out;
    out << "theta = " << theta_str(theta) << (ctx.reduced ? " (reduced)" : " (ambient)") << "\n";
    out << "P    = " << names(c, cls.P.members) << "\n";
    out << "Pbar = " << names(c, cls.Pbar.members) << "\n";
    out << "Q    = " << names(c, cls.Q.members) << "\n";
    out << "Qbar = " << names(c, cls.Qbar.members) << "\n";
    out << "W    = " << names(c, cls.W) << "\n";
    out << "W0   = " << names(c, cls.W0) << "\n";
    WallKind wk = wall_kind_at(ctx, theta);
    out << "wall kind: " << kind_name(wk.kind);
    if (wk.X >= 0) out << " generated by " << c.entry_name(wk.X);
    out << "\n";
    return out.str();
}

std::string report_walls(const StabilityContext& ctx) {
    const Catalog& c = *ctx.cat;
    std::ostringstream out;
    auto walls = distinct_walls(ctx);
    int nontrivial = 0;
    for (const auto& [canon, members] : walls)
        if (canon.full_plane || !canon.gens.empty()) ++nontrivial;
    out << "distinct pseudo-walls: " << walls.size() << " (" << nontrivial << " nontrivial)\n";
    for (const auto& [canon, members] : walls) {
        out << "D(" << c.entry_name(members.front()) << ")";
        for (size_t i = 1; i < members.size(); ++i)
            out << " = D(" << c.entry_name(members[i]) << ")";
        WallDescriptor wd = wall_descriptor(ctx, members.front());
        out << "  normal=" << vec_str(wd.normal);
        if (canon.full_plane) {
            out << "  full hyperplane";
        } else if (canon.gens.empty()) {
            out << "  empty";
        } else {
            out << "  gens:";
            for (const IntVec& g : canon.gens) out << " " << vec_str(g);
        }
        out << "\n";
    }
    return out.str();
}

std::string report_chambers(const StabilityContext& ctx,
                            const std::vector<ChamberRecord>& records) {
    const Catalog& c = *ctx.cat;
    std::ostringstream out;
    out << "chambers: " << records.size() << (ctx.reduced ? " (reduced space)" : " (ambient)")
        << "\n";
    for (const ChamberRecord& r : records) {
        out << "[" << r.id << "] sample=" << theta_str(r.sample) << "\n";
        out << "    P = " << names(c, r.P.members) << "\n";
        out << "    Q = " << names(c, r.Q.members) << "\n";
        out << "    adjacent:";
        for (const auto& [nbr, wall] : r.adjacency)
            out << " " << nbr << "(D(" << c.entry_name(wall) << "))";
        out << "\n";
    }
    return out.str();
}

std::string report_greenpath(const StabilityContext& ctx, const GreenPathLinear& path) {
    const Catalog& c = *ctx.cat;
    std::ostringstream out;
    out << "green path: theta0=" << theta_str(path.theta0) << " eta=" << theta_str(path.eta)
        << "\n";
    out << "crossing schedule:\n";
    for (const CrossingEvent& ev : crossing_schedule(ctx, path)) {
        out << "  t=" << rat_str(ev.t) << "  " << kind_name(ev.kind.kind) << "  walls:";
        for (int b : ev.labels) out << " D(" << c.entry_name(b) << ")";
        out << "\n";
    }
    out << "forward Hom-orthogonal sequence:\n";
    for (const auto& [brick, t] : fho_sequence(ctx, path).entries)
        out << "  pi=" << rat_str(t) << "  " << c.entry_name(brick) << "\n";
    out << "HN stratifications of G-members:\n";
    for (int i = 1; i < c.size(); ++i) {
        if (!c.e(i).in_G) continue;
        HNFiltration hn = hn_filtration(ctx, i, path);
        out << "  " << c.entry_name(i) << ": ";
        for (size_t k = 0; k < hn.slices.size(); ++k) {
            if (k) out << " > ";
            out << c.entry_name(hn.slices[k]) << "@" << rat_str(hn.times[k]);
        }
        out << "\n";
    }
    return out.str();
}

std::string report_ghosts(const Catalog& c) {
    std::ostringstream out;
    std::vector<Ghost> gs = find_ghosts(c);
    out << "ghosts: " << gs.size() << "\n";
    for (const Ghost& g : gs)
        out << "  " << c.entry_name(g.ambient) << " ->> " << c.entry_name(g.quotient)
            << "  (missing " << c.entry_name(g.missing) << ")\n";
    return out.str();
}

std::string report_k0(const Catalog& c, const ReducedK0& k) {
    std::ostringstream out;
    out << "reduced K0: rank " << k.rank << ", " << k.generators.size() << " generators, "
        << k.relations.rows << " relations\n";
    out << "invariant factors:";
    for (long long f : k.invariant_factors) out << " " << f;
    out << "\n";
    for (size_t g = 0; g < k.generators.size(); ++g)
        out << "  [" << c.entry_name(k.generators[g]) << "] -> " << vec_str(k.coords[g]) << "\n";
    return out.str();
}

}  // namespace swc
