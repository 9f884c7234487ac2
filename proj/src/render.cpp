#include "swc/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace swc {

namespace {

constexpr double kCanvas = 600.0;
constexpr double kCenter = kCanvas / 2.0;

std::string px(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

struct XY {
    double x = 0, y = 0;
};

XY to_canvas(double x, double y) { return {kCenter + x, kCenter - y}; }

void open_svg(std::ostringstream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kCanvas
        << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas << " " << kCanvas
        << "\">\n"
        << "<style>.wall{stroke:#1a1a8c;stroke-width:1.5;fill:none}"
        << ".wall-label{font:11px sans-serif;fill:#1a1a8c}"
        << ".region{font:11px sans-serif;fill:#444;text-anchor:middle}</style>\n";
}

std::vector<double> unit(const IntVec& v) {
    double n = 0;
    for (long long x : v) n += double(x) * double(x);
    n = std::sqrt(n);
    std::vector<double> out;
    for (long long x : v) out.push_back(double(x) / n);
    return out;
}

IntVec cross(const IntVec& a, const IntVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

std::string wall_title(const Catalog& c, const std::vector<int>& members) {
    std::string s = "D(" + c.entry_name(members.front()) + ")";
    for (size_t i = 1; i < members.size(); ++i) s += "=D(" + c.entry_name(members[i]) + ")";
    return s;
}

}  // namespace

std::string render_rank2(const StabilityContext& ctx, const std::vector<ChamberRecord>& chambers,
                         const DiagramSpec& spec) {
    if (ctx.dim != 2) throw PreconditionError("render_rank2: stability space has rank != 2");
    const Catalog& c = *ctx.cat;
    std::ostringstream out;
    open_svg(out);
    out << "<circle cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\"" << px(spec.radius)
        << "\" fill=\"none\" stroke=\"#cccccc\"/>\n";
    for (const auto& [canon, members] : distinct_walls(ctx)) {
        if (!canon.full_plane && canon.gens.empty()) continue;
        std::vector<IntVec> rays = canon.gens;
        if (canon.full_plane) {
            const IntVec& n = ctx.coord(members.front());
            rays = {{-n[1], n[0]}, {n[1], -n[0]}};
        }
        out << "<path class=\"wall\" data-wall=\"" << wall_title(c, members) << "\" d=\"";
        for (const IntVec& g : rays) {
            std::vector<double> d = unit(g);
            XY tip = to_canvas(spec.radius * d[0], spec.radius * d[1]);
            out << "M" << px(kCenter) << " " << px(kCenter) << " L" << px(tip.x) << " "
                << px(tip.y) << " ";
        }
        out << "\"/>\n";
        std::vector<double> d = unit(rays.front());
        XY lab = to_canvas(1.08 * spec.radius * d[0], 1.08 * spec.radius * d[1]);
        out << "<text class=\"wall-label\" x=\"" << px(lab.x) << "\" y=\"" << px(lab.y) << "\">"
            << wall_title(c, members) << "</text>\n";
    }
    for (const ChamberRecord& r : chambers) {
        std::vector<double> s(2, 0.0);
        double n = 0;
        for (int i = 0; i < 2; ++i) {
            s[i] = boost::rational_cast<double>(r.sample[i]);
            n += s[i] * s[i];
        }
        n = std::sqrt(n);
        double scale = n == 0 ? 0 : 0.72 * spec.radius / n;
        XY at = to_canvas(scale * s[0], scale * s[1]);
        out << "<text class=\"region\" data-chamber=\"" << r.id << "\" x=\"" << px(at.x)
            << "\" y=\"" << px(at.y) << "\">C" << r.id << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_rank3_stereo(const StabilityContext& ctx,
                                const std::vector<ChamberRecord>& chambers,
                                const DiagramSpec& spec) {
    if (ctx.dim != 3) throw PreconditionError("render_rank3_stereo: stability space has rank != 3");
    if (spec.pole.size() != 3 || spec.pole == IntVec{0, 0, 0})
        throw PreconditionError("render_rank3_stereo: pole must be a nonzero integer 3-vector");
    const Catalog& c = *ctx.cat;
    auto walls = distinct_walls(ctx);

    Theta pole_theta;
    for (long long x : spec.pole) pole_theta.push_back(Rat(x));
    for (const auto& [canon, members] : walls)
        if ((canon.full_plane || !canon.gens.empty()) &&
            wall_membership(ctx, pole_theta, members.front()) != WallPosition::off)
            throw PreconditionError("render_rank3_stereo: pole lies on " +
                                    wall_title(c, members) +
                                    "; pick a generic direction (try permuting (3,5,7))");

    // Orthonormal frame with w = pole direction.
    std::vector<double> w = unit(spec.pole);
    int least = 0;
    for (int i = 1; i < 3; ++i)
        if (std::abs(w[i]) < std::abs(w[least])) least = i;
    IntVec e(3, 0);
    e[least] = 1;
    std::vector<double> u = unit(cross(spec.pole, e));
    std::vector<double> v = {w[1] * u[2] - w[2] * u[1], w[2] * u[0] - w[0] * u[2],
                             w[0] * u[1] - w[1] * u[0]};

    const double clip = 0.9;  // drop samples too close to the pole
    auto project = [&](const std::vector<double>& x) {
        double n = std::sqrt(x[0] * x[0] + x[1] * x[1] + x[2] * x[2]);
        double a = (x[0] * u[0] + x[1] * u[1] + x[2] * u[2]) / n;
        double b = (x[0] * v[0] + x[1] * v[1] + x[2] * v[2]) / n;
        double cw = (x[0] * w[0] + x[1] * w[1] + x[2] * w[2]) / n;
        bool clipped = cw > clip;
        if (clipped) cw = clip;
        XY p = to_canvas(spec.radius * a / (1.0 - cw), spec.radius * b / (1.0 - cw));
        return std::pair<XY, bool>(p, clipped);
    };

    std::ostringstream out;
    open_svg(out);
    const long long kScale = 1 << 20;  // fixed-point sample directions, exact sign tests
    for (const auto& [canon, members] : walls) {
        if (!canon.full_plane && canon.gens.empty()) continue;
        const IntVec& n = ctx.coord(members.front());
        int least_n = 0;
        for (int i = 1; i < 3; ++i)
            if (std::abs(double(n[i])) < std::abs(double(n[least_n]))) least_n = i;
        IntVec en(3, 0);
        en[least_n] = 1;
        IntVec b1 = primitive(cross(n, en));
        IntVec b2 = primitive(cross(n, b1));
        std::vector<double> u1 = unit(b1), u2 = unit(b2);

        // Membership of each sampled direction, decided exactly on an
        // integer vector that lies exactly in the wall's hyperplane.  The
        // cone generators are merged into the sample set so narrow or
        // ray-shaped walls are never missed by the fixed angular grid.
        struct Sample {
            double angle;
            bool member;
            std::vector<double> dir;
        };
        std::vector<Sample> samples;
        auto exact_member = [&](const IntVec& v) {
            Theta th;
            for (long long x : v) th.push_back(Rat(x));
            return wall_membership(ctx, th, members.front()) != WallPosition::off;
        };
        int K = spec.segments;
        for (int k = 0; k < K; ++k) {
            double phi = 2.0 * M_PI * k / K;
            long long ci = llround(std::cos(phi) * kScale);
            long long si = llround(std::sin(phi) * kScale);
            IntVec v(3);
            for (int i = 0; i < 3; ++i) v[i] = ci * b1[i] + si * b2[i];
            samples.push_back({phi, exact_member(v),
                               {std::cos(phi) * u1[0] + std::sin(phi) * u2[0],
                                std::cos(phi) * u1[1] + std::sin(phi) * u2[1],
                                std::cos(phi) * u1[2] + std::sin(phi) * u2[2]}});
        }
        for (const IntVec& g : canon.gens) {
            std::vector<double> gd = unit(g);
            double a = gd[0] * u1[0] + gd[1] * u1[1] + gd[2] * u1[2];
            double b = gd[0] * u2[0] + gd[1] * u2[1] + gd[2] * u2[2];
            double phi = std::atan2(b, a);
            if (phi < 0) phi += 2.0 * M_PI;
            samples.push_back({phi, exact_member(g), gd});
        }
        std::sort(samples.begin(), samples.end(),
                  [](const Sample& a, const Sample& b) { return a.angle < b.angle; });
        std::string d;
        bool pen_down = false;
        int run_len = 0;
        XY first_on{};
        bool have_first = false;
        int S = static_cast<int>(samples.size());
        for (int k = 0; k <= S; ++k) {
            const Sample& smp = samples[k % S];
            auto [p, clipped] = project(smp.dir);
            if (smp.member && !clipped) {
                d += (pen_down ? "L" : "M") + px(p.x) + " " + px(p.y) + " ";
                pen_down = true;
                ++run_len;
                if (run_len == 1 && k < S) d += "l0.01 0 ";  // keep isolated points visible
                if (!have_first) {
                    first_on = p;
                    have_first = true;
                }
            } else {
                pen_down = false;
                run_len = 0;
            }
        }
        if (d.empty()) continue;
        out << "<path class=\"wall\" data-wall=\"" << wall_title(c, members) << "\" d=\"" << d
            << "\"/>\n";
        out << "<text class=\"wall-label\" x=\"" << px(first_on.x + 4) << "\" y=\""
            << px(first_on.y - 4) << "\">" << wall_title(c, members) << "</text>\n";
    }
    for (const ChamberRecord& r : chambers) {
        std::vector<double> s(3);
        for (int i = 0; i < 3; ++i) s[i] = boost::rational_cast<double>(r.sample[i]);
        auto [p, clipped] = project(s);
        (void)clipped;  // clamped projection keeps one label per chamber on canvas
        double dx = p.x - kCenter, dy = p.y - kCenter;
        double norm = std::sqrt(dx * dx + dy * dy);
        double maxr = 0.94 * kCenter;
        if (norm > maxr) {
            p.x = kCenter + dx * maxr / norm;
            p.y = kCenter + dy * maxr / norm;
        }
        out << "<text class=\"region\" data-chamber=\"" << r.id << "\" x=\"" << px(p.x)
            << "\" y=\"" << px(p.y) << "\">C" << r.id << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace swc
