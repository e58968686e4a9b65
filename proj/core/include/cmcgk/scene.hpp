#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cmcgk/types.hpp"

namespace cmcgk::cli {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainSpec {
    cx center{};
    double half_width = 0.55, half_height = 0.55;
};

struct GridSpec {
    int nu = 161, nv = 161;
};

enum class GaussMapKind { identity, holomorphic, geodesic_tanh, sampled_file };

struct GaussMapSpec {
    GaussMapKind kind = GaussMapKind::identity;
    std::vector<cx> coeffs;  // holomorphic: g(z) = sum coeffs[k] z^k
    double a = 0.7;          // geodesic_tanh parameter
    std::string path;        // sampled-file CSV: u,v,Re g,Im g
};

struct BasepointSpec {
    cx z0{}, zeta0{};
    double x30 = 0.0;
};

struct ToleranceSpec {
    double domain_guard = 1e-6;
    double harmonic_max = 1e-6;
    double hopf_max = 1e-4;
};

struct OutputSpec {
    std::string mesh_path, report_path, samples_path;
};

struct SisterSpec {
    std::optional<GaussMapSpec> g_hat;  // defaults to the scene gauss_map
    bool optimize_phase = false;
};

// Flat JSON scene description; unknown keys are rejected.
struct SceneConfig {
    double kappa = -4.0;
    double tau = 1.0;
    DomainSpec domain;
    GridSpec grid;
    GaussMapSpec gauss_map;
    BasepointSpec basepoint;
    ToleranceSpec tolerances;
    OutputSpec outputs;
    std::optional<SisterSpec> sister;
};

SceneConfig load_config(const std::string& path);
SceneConfig parse_config(const std::string& text, const std::string& origin = "<config>");

// CSV with header "u,v,re_g,im_g", nodes in row-major node order.
std::vector<cx> load_samples_csv(const std::string& path, int nu, int nv);

}  // namespace cmcgk::cli
