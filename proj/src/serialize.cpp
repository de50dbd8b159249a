#include "cvnet/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cvnet {

using nlohmann::json;

namespace {

double need_number(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw StructuralError(std::string("missing or non-numeric field \"") + key + "\"");
    return j[key].get<double>();
}

Complex parse_complex(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array() || j[key].size() != 2
        || !j[key][0].is_number() || !j[key][1].is_number())
        throw StructuralError(std::string("field \"") + key + "\" must be [re, im]");
    return {j[key][0].get<double>(), j[key][1].get<double>()};
}

} // namespace

GaussianState parse_state_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw StructuralError("state: object with a \"kind\" string required");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "epr") return epr_state(need_number(j, "r"));
    if (kind == "sts")
        return sts_state(StsParams(need_number(j, "v1"), need_number(j, "v2"),
                                   need_number(j, "r")));
    if (kind == "custom") {
        if (!j.contains("cov") || !j["cov"].is_array())
            throw StructuralError("state: custom kind requires a \"cov\" matrix");
        const auto& rows = j["cov"];
        const int dim = static_cast<int>(rows.size());
        if (dim == 0 || dim % 2 != 0)
            throw StructuralError("state: covariance must be 2n x 2n");
        GaussianState st;
        st.modes = dim / 2;
        st.cov.resize(dim, dim);
        for (int a = 0; a < dim; ++a) {
            if (!rows[a].is_array() || static_cast<int>(rows[a].size()) != dim)
                throw StructuralError("state: covariance rows must all have length 2n");
            for (int b = 0; b < dim; ++b) {
                if (!rows[a][b].is_number())
                    throw StructuralError("state: covariance entries must be numbers");
                st.cov(a, b) = rows[a][b].get<double>();
            }
        }
        st.mean = Eigen::VectorXd::Zero(dim);
        const ValidityReport rep = validate(st);
        if (!rep.valid) throw DomainError("state: custom covariance fails validation");
        return st;
    }
    throw StructuralError("state: unknown kind \"" + kind + "\"");
}

NetworkTopology parse_topology_json(const json& j) {
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
        throw StructuralError("topology: object with a \"family\" string required");
    const std::string family = j["family"].get<std::string>();

    if (j.contains("sources") || family == "custom") {
        if (!j.contains("sources") || !j["sources"].is_array())
            throw StructuralError("topology: \"sources\" array required");
        const int parties = static_cast<int>(need_number(j, "parties"));
        std::vector<std::pair<int, int>> sources;
        for (const auto& e : j["sources"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer()
                || !e[1].is_number_integer())
                throw StructuralError("topology: each source must be [p, q]");
            sources.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        return custom_topology(parties, std::move(sources));
    }
    if (family == "chain") return chain(static_cast<int>(need_number(j, "parties")));
    if (family == "star") return star(static_cast<int>(need_number(j, "parties")));
    if (family == "cycle") return cycle(static_cast<int>(need_number(j, "parties")));
    if (family == "tree")
        return tree(static_cast<int>(need_number(j, "m")),
                    static_cast<int>(need_number(j, "f")));
    throw StructuralError("topology: unknown family \"" + family + "\"");
}

BellAssignment parse_assignment_json(const json& j) {
    if (!j.is_object() || !j.contains("sources") || !j["sources"].is_array())
        throw StructuralError("assignment: object with a \"sources\" array required");
    BellAssignment out;
    for (const auto& e : j["sources"]) {
        SourceDisplacements d;
        d.a0 = parse_complex(e, "a0");
        d.a1 = parse_complex(e, "a1");
        d.b0 = parse_complex(e, "b0");
        d.b1 = parse_complex(e, "b1");
        out.push_back(d);
    }
    if (out.empty()) throw StructuralError("assignment: no sources");
    return out;
}

json evaluation_json(const BellEvaluation& e) {
    return json{{"I", e.i_value}, {"J", e.j_value}, {"k", e.k}, {"B", e.b_value}};
}

json assignment_json(const BellAssignment& a) {
    json sources = json::array();
    for (const auto& d : a)
        sources.push_back(json{{"a0", {d.a0.real(), d.a0.imag()}},
                               {"a1", {d.a1.real(), d.a1.imag()}},
                               {"b0", {d.b0.real(), d.b0.imag()}},
                               {"b1", {d.b1.real(), d.b1.imag()}}});
    return json{{"sources", sources}};
}

SourceDescriptor parse_source_descriptor(const std::string& text) {
    SourceDescriptor d;
    std::string head = text, args;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
        head = text.substr(0, colon);
        args = text.substr(colon + 1);
    }
    if (head == "epr") d.kind = SourceKind::Epr;
    else if (head == "sts") d.kind = SourceKind::Sts;
    else throw StructuralError("source: unknown kind \"" + head + "\" (use epr or sts)");

    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw StructuralError("source: expected key=value, got \"" + item + "\"");
        const std::string key = item.substr(0, eq);
        double value;
        try {
            value = std::stod(item.substr(eq + 1));
        } catch (const std::exception&) {
            throw StructuralError("source: non-numeric value in \"" + item + "\"");
        }
        if (key == "r") { d.has_r = true; d.r = value; }
        else if (key == "v") { d.v1 = d.v2 = value; }
        else if (key == "v1") d.v1 = value;
        else if (key == "v2") d.v2 = value;
        else throw StructuralError("source: unknown key \"" + key + "\"");
    }
    return d;
}

GaussianState make_state(const SourceDescriptor& d, double r) {
    if (d.kind == SourceKind::Epr) return epr_state(r);
    return sts_state(StsParams(d.v1, d.v2, r));
}

std::vector<double> parse_grid(const std::string& text) {
    std::vector<double> out;
    try {
        if (const auto colon = text.find(':'); colon != std::string::npos) {
            const auto colon2 = text.find(':', colon + 1);
            if (colon2 == std::string::npos)
                throw StructuralError("grid: expected start:end:step");
            const double start = std::stod(text.substr(0, colon));
            const double end = std::stod(text.substr(colon + 1, colon2 - colon - 1));
            const double step = std::stod(text.substr(colon2 + 1));
            if (!(step > 0.0)) throw StructuralError("grid: step must be > 0");
            for (double v = start; v <= end + 0.5 * step; v += step)
                out.push_back(v);
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ','))
                out.push_back(std::stod(item));
        }
    } catch (const StructuralError&) {
        throw;
    } catch (const std::exception&) {
        throw StructuralError("grid: could not parse \"" + text + "\"");
    }
    if (out.empty()) throw StructuralError("grid: empty");
    return out;
}

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

std::string render_csv(const std::vector<SweepRow>& rows) {
    std::string out = "family,params,s,r1,r2,B,I,J,k,restarts,evals,boundary_hit,seed\n";
    for (const auto& r : rows) {
        out += r.family + ',' + r.params + ',' + num(r.s) + ',' + num(r.r1) + ','
               + num(r.r2) + ',' + num(r.b) + ',' + num(r.i_value) + ','
               + num(r.j_value) + ',' + std::to_string(r.k) + ','
               + std::to_string(r.restarts) + ',' + std::to_string(r.evals) + ','
               + (r.boundary_hit ? "1" : "0") + ',' + std::to_string(r.seed) + '\n';
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ResourceError("cannot open for writing: " + path);
    f << content;
    if (!f.good()) throw ResourceError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ResourceError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace cvnet
