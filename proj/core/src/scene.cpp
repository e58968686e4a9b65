#include "cmcgk/scene.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace cmcgk::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& origin, const std::string& what) {
    throw ConfigError(origin + ": " + what);
}

void check_keys(const json& obj, const std::string& origin, const std::string& section,
                const std::set<std::string>& allowed) {
    for (const auto& item : obj.items())
        if (!allowed.contains(item.key()))
            fail(origin, "unknown key '" + item.key() + "' in " + section);
}

double get_number(const json& obj, const std::string& origin, const std::string& field) {
    if (!obj.contains(field)) fail(origin, "missing field '" + field + "'");
    if (!obj[field].is_number()) fail(origin, "field '" + field + "' must be a number");
    return obj[field].get<double>();
}

cx get_complex(const json& obj, const std::string& origin, const std::string& field) {
    if (!obj.contains(field)) fail(origin, "missing field '" + field + "'");
    const json& v = obj[field];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        fail(origin, "field '" + field + "' must be [re, im]");
    return {v[0].get<double>(), v[1].get<double>()};
}

GaussMapSpec parse_gauss_map(const json& obj, const std::string& origin,
                             const std::string& section) {
    check_keys(obj, origin, section, {"kind", "coeffs", "a", "path"});
    if (!obj.contains("kind") || !obj["kind"].is_string())
        fail(origin, section + ".kind must be a string");
    const std::string kind = obj["kind"].get<std::string>();

    GaussMapSpec spec;
    if (kind == "identity") {
        spec.kind = GaussMapKind::identity;
    } else if (kind == "holomorphic") {
        spec.kind = GaussMapKind::holomorphic;
        if (!obj.contains("coeffs") || !obj["coeffs"].is_array() || obj["coeffs"].empty())
            fail(origin, section + ".coeffs required for holomorphic maps");
        for (const json& c : obj["coeffs"]) {
            if (!c.is_array() || c.size() != 2) fail(origin, section + ".coeffs entries must be [re, im]");
            spec.coeffs.emplace_back(c[0].get<double>(), c[1].get<double>());
        }
    } else if (kind == "geodesic_tanh") {
        spec.kind = GaussMapKind::geodesic_tanh;
        spec.a = get_number(obj, origin, "a");
    } else if (kind == "sampled-file") {
        spec.kind = GaussMapKind::sampled_file;
        if (!obj.contains("path") || !obj["path"].is_string())
            fail(origin, section + ".path required for sampled-file maps");
        spec.path = obj["path"].get<std::string>();
    } else {
        fail(origin, section + ".kind '" + kind + "' is not one of identity|holomorphic|geodesic_tanh|sampled-file");
    }
    return spec;
}

}  // namespace

SceneConfig parse_config(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(origin, std::string("JSON parse error: ") + e.what());
    }
    if (!root.is_object()) fail(origin, "top level must be an object");
    check_keys(root, origin, "config",
               {"kappa", "tau", "domain", "grid", "gauss_map", "basepoint", "tolerances",
                "outputs", "sister"});

    SceneConfig cfg;
    cfg.kappa = get_number(root, origin, "kappa");
    cfg.tau = get_number(root, origin, "tau");

    if (!root.contains("domain")) fail(origin, "missing section 'domain'");
    {
        const json& d = root["domain"];
        check_keys(d, origin, "domain", {"center", "half_width", "half_height"});
        cfg.domain.center = get_complex(d, origin, "center");
        cfg.domain.half_width = get_number(d, origin, "half_width");
        cfg.domain.half_height = get_number(d, origin, "half_height");
    }

    if (!root.contains("grid")) fail(origin, "missing section 'grid'");
    {
        const json& g = root["grid"];
        check_keys(g, origin, "grid", {"nu", "nv"});
        cfg.grid.nu = static_cast<int>(get_number(g, origin, "nu"));
        cfg.grid.nv = static_cast<int>(get_number(g, origin, "nv"));
        if (cfg.grid.nu < 33 || cfg.grid.nv < 33)
            fail(origin, "grid must be at least 33x33");
    }

    if (!root.contains("gauss_map")) fail(origin, "missing section 'gauss_map'");
    cfg.gauss_map = parse_gauss_map(root["gauss_map"], origin, "gauss_map");

    if (root.contains("basepoint")) {
        const json& b = root["basepoint"];
        check_keys(b, origin, "basepoint", {"z0", "zeta0", "x30"});
        if (b.contains("z0")) cfg.basepoint.z0 = get_complex(b, origin, "z0");
        if (b.contains("zeta0")) cfg.basepoint.zeta0 = get_complex(b, origin, "zeta0");
        if (b.contains("x30")) cfg.basepoint.x30 = get_number(b, origin, "x30");
    }

    if (root.contains("tolerances")) {
        const json& t = root["tolerances"];
        check_keys(t, origin, "tolerances", {"domain_guard", "harmonic_max", "hopf_max"});
        if (t.contains("domain_guard")) cfg.tolerances.domain_guard = get_number(t, origin, "domain_guard");
        if (t.contains("harmonic_max")) cfg.tolerances.harmonic_max = get_number(t, origin, "harmonic_max");
        if (t.contains("hopf_max")) cfg.tolerances.hopf_max = get_number(t, origin, "hopf_max");
    }

    if (root.contains("outputs")) {
        const json& o = root["outputs"];
        check_keys(o, origin, "outputs", {"mesh_path", "report_path", "samples_path"});
        if (o.contains("mesh_path")) cfg.outputs.mesh_path = o["mesh_path"].get<std::string>();
        if (o.contains("report_path")) cfg.outputs.report_path = o["report_path"].get<std::string>();
        if (o.contains("samples_path")) cfg.outputs.samples_path = o["samples_path"].get<std::string>();
    }

    if (root.contains("sister")) {
        const json& sj = root["sister"];
        check_keys(sj, origin, "sister", {"g_hat", "optimize_phase"});
        SisterSpec ss;
        if (sj.contains("g_hat")) ss.g_hat = parse_gauss_map(sj["g_hat"], origin, "sister.g_hat");
        if (sj.contains("optimize_phase")) {
            if (!sj["optimize_phase"].is_boolean())
                fail(origin, "sister.optimize_phase must be a boolean");
            ss.optimize_phase = sj["optimize_phase"].get<bool>();
        }
        cfg.sister = ss;
    }
    return cfg;
}

SceneConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::vector<cx> load_samples_csv(const std::string& path, int nu, int nv) {
    std::ifstream in(path);
    if (!in) throw ConfigError(path + ": cannot open samples file");
    std::string line;
    if (!std::getline(in, line)) throw ConfigError(path + ": empty samples file");

    std::vector<cx> values;
    values.reserve(static_cast<std::size_t>(nu) * nv);
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream ls(line);
        double u, v, re, im;
        char comma;
        if (!(ls >> u >> comma >> v >> comma >> re >> comma >> im))
            throw ConfigError(path + ":" + std::to_string(lineno) + ": bad CSV row");
        values.emplace_back(re, im);
    }
    if (values.size() != static_cast<std::size_t>(nu) * nv)
        throw ConfigError(path + ": expected " + std::to_string(nu * nv) + " rows, got " +
                          std::to_string(values.size()));
    return values;
}

}  // namespace cmcgk::cli
