#include "swc/problem.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace swc {

namespace {

using nlohmann::json;

Rat parse_rat(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(std::stoll(s));
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw PreconditionError("problem file: zero denominator in '" + s + "'");
        return Rat(num, den);
    } catch (const std::invalid_argument&) {
        throw PreconditionError("problem file: malformed rational '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

Theta parse_theta(const std::string& s) {
    Theta th;
    for (const std::string& part : split(s, ',')) th.push_back(parse_rat(part));
    return th;
}

DimVector parse_dim(const std::string& s) {
    DimVector d;
    for (const std::string& part : split(s, ',')) {
        try {
            d.push_back(std::stoll(part));
        } catch (const std::invalid_argument&) {
            throw PreconditionError("problem file: malformed dimension vector '" + s + "'");
        }
    }
    return d;
}

std::string theta_str(const Theta& th) {
    std::string out;
    for (size_t i = 0; i < th.size(); ++i) {
        if (i) out += ',';
        out += rat_str(th[i]);
    }
    return out;
}

std::string dim_str(const DimVector& d) {
    std::string out;
    for (size_t i = 0; i < d.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(d[i]);
    }
    return out;
}

ProblemFile parse_problem_json(const std::string& text) {
    json j = json::parse(text);
    if (j.value("format", "") != "swc-problem")
        throw PreconditionError("problem file: JSON missing \"format\": \"swc-problem\"");
    ProblemFile pf;
    pf.version = j.at("version").get<int>();
    if (pf.version != 1)
        throw PreconditionError("problem file: unsupported version " + std::to_string(pf.version));
    pf.name = j.value("name", "");
    pf.p = j.at("field").at("p").get<int>();
    pf.k = j.at("field").at("k").get<int>();
    pf.vertices = j.at("vertices").get<int>();
    pf.degrees = j.at("degrees").get<std::vector<int>>();
    for (const auto& a : j.at("arrows"))
        pf.arrows.emplace_back(a.at(0).get<int>() - 1, a.at(1).get<int>() - 1);
    for (const auto& c : j.at("cogenerators")) pf.cogenerators.push_back(c.get<DimVector>());
    pf.length_bound = j.at("length").get<int>();
    if (j.contains("thetas"))
        for (const auto& [name, v] : j.at("thetas").items())
            pf.thetas[name] = parse_theta(v.get<std::string>());
    if (j.contains("paths"))
        for (const auto& [name, v] : j.at("paths").items())
            pf.paths[name] = NamedPath{parse_theta(v.at("theta0").get<std::string>()),
                                       parse_theta(v.at("eta").get<std::string>())};
    return pf;
}

ProblemFile parse_problem_text(const std::string& text) {
    ProblemFile pf;
    std::istringstream in(text);
    std::string line;
    bool header_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key)) continue;
        std::string where = " (line " + std::to_string(lineno) + ")";
        if (!header_seen) {
            int v = -1;
            if (key != "swc-problem" || !(ls >> v))
                throw PreconditionError("problem file: first line must be 'swc-problem 1'" + where);
            if (v != 1)
                throw PreconditionError("problem file: unsupported version " + std::to_string(v) +
                                        where);
            pf.version = v;
            header_seen = true;
        } else if (key == "name") {
            ls >> pf.name;
        } else if (key == "field") {
            if (!(ls >> pf.p >> pf.k))
                throw PreconditionError("problem file: 'field p k' expected" + where);
        } else if (key == "vertices") {
            ls >> pf.vertices;
        } else if (key == "degrees") {
            int d;
            while (ls >> d) pf.degrees.push_back(d);
        } else if (key == "arrow") {
            int s, t;
            if (!(ls >> s >> t))
                throw PreconditionError("problem file: 'arrow source target' expected" + where);
            pf.arrows.emplace_back(s - 1, t - 1);  // file vertices are 1-based
        } else if (key == "cogenerator") {
            std::string d;
            ls >> d;
            pf.cogenerators.push_back(parse_dim(d));
        } else if (key == "length") {
            ls >> pf.length_bound;
        } else if (key == "theta") {
            std::string name, v;
            if (!(ls >> name >> v))
                throw PreconditionError("problem file: 'theta name a,b,...' expected" + where);
            pf.thetas[name] = parse_theta(v);
        } else if (key == "path") {
            std::string name, t0, eta;
            if (!(ls >> name >> t0 >> eta))
                throw PreconditionError("problem file: 'path name theta0 eta' expected" + where);
            pf.paths[name] = NamedPath{parse_theta(t0), parse_theta(eta)};
        } else {
            throw PreconditionError("problem file: unknown key '" + key + "'" + where);
        }
    }
    if (!header_seen) throw PreconditionError("problem file: empty input");
    return pf;
}

void validate(const ProblemFile& pf) {
    if (pf.vertices <= 0) throw PreconditionError("problem file: vertices must be positive");
    if (static_cast<int>(pf.degrees.size()) != pf.vertices)
        throw PreconditionError("problem file: degrees count != vertices");
    for (const auto& [s, t] : pf.arrows)
        if (s < 0 || s >= pf.vertices || t < 0 || t >= pf.vertices)
            throw PreconditionError("problem file: arrow endpoint out of range");
    for (const DimVector& d : pf.cogenerators)
        if (static_cast<int>(d.size()) != pf.vertices)
            throw PreconditionError("problem file: cogenerator dimension vector has wrong length");
}

}  // namespace

ProblemFile parse_problem(const std::string& text) {
    size_t first = text.find_first_not_of(" \t\r\n");
    ProblemFile pf = (first != std::string::npos && text[first] == '{')
                         ? parse_problem_json(text)
                         : parse_problem_text(text);
    validate(pf);
    return pf;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open problem file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_problem(buf.str());
}

std::string problem_to_text(const ProblemFile& pf) {
    std::ostringstream out;
    out << "swc-problem " << pf.version << "\n";
    if (!pf.name.empty()) out << "name " << pf.name << "\n";
    out << "field " << pf.p << " " << pf.k << "\n";
    out << "vertices " << pf.vertices << "\n";
    out << "degrees";
    for (int d : pf.degrees) out << " " << d;
    out << "\n";
    for (const auto& [s, t] : pf.arrows) out << "arrow " << s + 1 << " " << t + 1 << "\n";
    for (const DimVector& c : pf.cogenerators) out << "cogenerator " << dim_str(c) << "\n";
    out << "length " << pf.length_bound << "\n";
    for (const auto& [name, th] : pf.thetas) out << "theta " << name << " " << theta_str(th) << "\n";
    for (const auto& [name, p] : pf.paths)
        out << "path " << name << " " << theta_str(p.theta0) << " " << theta_str(p.eta) << "\n";
    return out.str();
}

std::string problem_to_json(const ProblemFile& pf) {
    json j;
    j["format"] = "swc-problem";
    j["version"] = pf.version;
    j["name"] = pf.name;
    j["field"] = {{"p", pf.p}, {"k", pf.k}};
    j["vertices"] = pf.vertices;
    j["degrees"] = pf.degrees;
    j["arrows"] = json::array();
    for (const auto& [s, t] : pf.arrows) j["arrows"].push_back({s + 1, t + 1});
    j["cogenerators"] = pf.cogenerators;
    j["length"] = pf.length_bound;
    j["thetas"] = json::object();
    for (const auto& [name, th] : pf.thetas) j["thetas"][name] = theta_str(th);
    j["paths"] = json::object();
    for (const auto& [name, p] : pf.paths)
        j["paths"][name] = {{"theta0", theta_str(p.theta0)}, {"eta", theta_str(p.eta)}};
    return j.dump(2) + "\n";
}

Catalog build_from_problem(const ProblemFile& pf) {
    auto field = Field::make(pf.p, pf.k);
    auto quiver = make_quiver(field, pf.degrees, pf.arrows);
    TorsionSpec spec;
    spec.cogenerators = pf.cogenerators;
    CatalogOptions opts;
    opts.length_bound = pf.length_bound;
    return build_catalog(std::move(quiver), spec, opts);
}

}  // namespace swc
