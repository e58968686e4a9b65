#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cmcgk/grid.hpp"
#include "cmcgk/types.hpp"

namespace cmcgk::harmonic {

// Value and Wirtinger derivatives of a map at one parameter point.
struct JetSample {
    cx g{}, gz{}, gzb{}, gzzb{};
};
using JetFn = std::function<JetSample(cx)>;

// Sampled complex map with either an analytic jet supplier ("exact" mode) or
// finite-difference derivative access.
struct ComplexGrid {
    grid::CxGrid values;
    std::optional<JetFn> analytic;

    bool exact() const { return analytic.has_value(); }
    int margin() const { return exact() ? 0 : 2; }
};

ComplexGrid sample_exact(const grid::GridShape& shape, JetFn jet);
ComplexGrid sample_values(const grid::GridShape& shape, std::vector<cx> values);

struct DerivativeField {
    grid::CxGrid gz, gzb, gzzb;
    int margin = 0;
};
DerivativeField derivatives(const ComplexGrid& g);

// Per-node |(1-|g|^2) g_{z zbar} + 2 conj(g) g_z g_zbar|; requires |g| < 1.
grid::RealGrid harmonic_residual(const ComplexGrid& g);

// Hopf differential of the map: Q = 4 g_z conj(g_zbar)/(1-|g|^2)^2.
grid::CxGrid hopf_q(const ComplexGrid& g);

// Energy density mu = 4(|g_z|^2 + |g_zbar|^2)/(1-|g|^2)^2.
grid::RealGrid energy_mu(const ComplexGrid& g);

struct ResidualReport {
    double max_residual = 0.0;
    double mean_residual = 0.0;
    double min_abs_gz = 0.0;
    double max_abs_gz = 0.0;
    double max_abs_g = 0.0;
};

// A map into the unit disk, nowhere antiholomorphic.  Construction validates
// |g| < 1, min |g_z| > 1e-10 max |g_z|, and (in exact mode) cross-checks the
// supplied derivatives against stencils at 10 interior nodes.
class HarmonicMap {
public:
    static HarmonicMap make(ComplexGrid g);

    const ComplexGrid& map() const { return grid_; }
    const grid::GridShape& shape() const { return grid_.values.shape; }
    const ResidualReport& report() const { return report_; }

private:
    HarmonicMap(ComplexGrid g, ResidualReport r) : grid_(std::move(g)), report_(r) {}
    ComplexGrid grid_;
    ResidualReport report_;
};

HarmonicMap generate_identity(const grid::GridShape& shape);
HarmonicMap generate_holomorphic(const grid::GridShape& shape, std::vector<cx> coeffs);
// g(z) = tanh(a Re z): harmonic with geodesic image (-1,1).
HarmonicMap generate_geodesic_tanh(const grid::GridShape& shape, double a);
// Finite-difference mode from plain samples (row-major over v).
HarmonicMap from_samples(const grid::GridShape& shape, std::vector<cx> values);
HarmonicMap from_jet(const grid::GridShape& shape, JetFn jet);

}  // namespace cmcgk::harmonic
