#include "cmcgk/harmonic.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace cmcgk::harmonic {

ComplexGrid sample_exact(const grid::GridShape& shape, JetFn jet) {
    ComplexGrid g{grid::CxGrid(shape), jet};
    for (int j = 0; j < shape.nv; ++j)
        for (int i = 0; i < shape.nu; ++i) g.values.at(i, j) = jet(shape.node(i, j)).g;
    return g;
}

ComplexGrid sample_values(const grid::GridShape& shape, std::vector<cx> values) {
    if (values.size() != shape.size())
        throw std::invalid_argument("sample_values: value count does not match grid");
    ComplexGrid g{grid::CxGrid(shape), std::nullopt};
    g.values.data = std::move(values);
    return g;
}

DerivativeField derivatives(const ComplexGrid& g) {
    const grid::GridShape& s = g.values.shape;
    if (g.exact()) {
        DerivativeField out{grid::CxGrid(s), grid::CxGrid(s), grid::CxGrid(s), 0};
        for (int j = 0; j < s.nv; ++j)
            for (int i = 0; i < s.nu; ++i) {
                const JetSample js = (*g.analytic)(s.node(i, j));
                out.gz.at(i, j) = js.gz;
                out.gzb.at(i, j) = js.gzb;
                out.gzzb.at(i, j) = js.gzzb;
            }
        return out;
    }
    grid::WirtingerPair first = grid::wirtinger(g.values);
    return {std::move(first.fz), std::move(first.fzb), grid::mixed_second(g.values), 2};
}

namespace {

void require_in_disk(const ComplexGrid& g) {
    for (const cx& v : g.values.data)
        if (!(std::abs(v) < 1.0))
            throw std::domain_error("harmonic: map must take values in the unit disk");
}

}  // namespace

grid::RealGrid harmonic_residual(const ComplexGrid& g) {
    require_in_disk(g);
    const DerivativeField d = derivatives(g);
    grid::RealGrid out(g.values.shape);
    const grid::GridShape& s = g.values.shape;
    const int m = g.margin();
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            const cx v = g.values.at(i, j);
            out.at(i, j) = std::abs((1.0 - std::norm(v)) * d.gzzb.at(i, j) +
                                    2.0 * std::conj(v) * d.gz.at(i, j) * d.gzb.at(i, j));
        }
    return out;
}

grid::CxGrid hopf_q(const ComplexGrid& g) {
    require_in_disk(g);
    const DerivativeField d = derivatives(g);
    grid::CxGrid out(g.values.shape);
    const grid::GridShape& s = g.values.shape;
    const int m = g.margin();
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            const double w = 1.0 - std::norm(g.values.at(i, j));
            out.at(i, j) = 4.0 * d.gz.at(i, j) * std::conj(d.gzb.at(i, j)) / (w * w);
        }
    return out;
}

grid::RealGrid energy_mu(const ComplexGrid& g) {
    require_in_disk(g);
    const DerivativeField d = derivatives(g);
    grid::RealGrid out(g.values.shape);
    const grid::GridShape& s = g.values.shape;
    const int m = g.margin();
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            const double w = 1.0 - std::norm(g.values.at(i, j));
            out.at(i, j) = 4.0 *
                           (std::norm(d.gz.at(i, j)) + std::norm(d.gzb.at(i, j))) / (w * w);
        }
    return out;
}

HarmonicMap HarmonicMap::make(ComplexGrid g) {
    require_in_disk(g);
    const grid::GridShape& s = g.values.shape;

    if (g.exact()) {
        // Cross-check the analytic jet against stencils at 10 interior nodes.
        const grid::WirtingerPair fd = grid::wirtinger(g.values);
        std::mt19937 rng(20240517u);
        std::uniform_int_distribution<int> pick_i(2, s.nu - 3), pick_j(2, s.nv - 3);
        for (int k = 0; k < 10; ++k) {
            const int i = pick_i(rng), j = pick_j(rng);
            const JetSample js = (*g.analytic)(s.node(i, j));
            const double scale =
                std::max({std::abs(js.gz), std::abs(js.gzb), 1e-8});
            if (std::abs(js.gz - fd.fz.at(i, j)) > 1e-4 * scale ||
                std::abs(js.gzb - fd.fzb.at(i, j)) > 1e-4 * scale)
                throw std::invalid_argument(
                    "HarmonicMap: analytic derivatives disagree with stencils");
        }
    }

    const DerivativeField d = derivatives(g);
    const grid::RealGrid res = harmonic_residual(g);
    ResidualReport rep;
    rep.min_abs_gz = std::numeric_limits<double>::infinity();
    const int m = g.margin();
    std::size_t count = 0;
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            rep.max_residual = std::max(rep.max_residual, res.at(i, j));
            rep.mean_residual += res.at(i, j);
            rep.min_abs_gz = std::min(rep.min_abs_gz, std::abs(d.gz.at(i, j)));
            rep.max_abs_gz = std::max(rep.max_abs_gz, std::abs(d.gz.at(i, j)));
            rep.max_abs_g = std::max(rep.max_abs_g, std::abs(g.values.at(i, j)));
            ++count;
        }
    rep.mean_residual /= static_cast<double>(count);

    if (!(rep.min_abs_gz > 1e-10 * rep.max_abs_gz) || rep.max_abs_gz == 0.0)
        throw std::domain_error("HarmonicMap: map is antiholomorphic somewhere (g_z ~ 0)");
    return HarmonicMap(std::move(g), rep);
}

HarmonicMap generate_identity(const grid::GridShape& shape) {
    return from_jet(shape, [](cx z) { return JetSample{z, 1.0, 0.0, 0.0}; });
}

HarmonicMap generate_holomorphic(const grid::GridShape& shape, std::vector<cx> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("generate_holomorphic: no coefficients");
    return from_jet(shape, [coeffs = std::move(coeffs)](cx z) {
        cx g = coeffs.back(), gz{};
        for (std::size_t k = coeffs.size() - 1; k-- > 0;) {
            gz = gz * z + g;
            g = g * z + coeffs[k];
        }
        return JetSample{g, gz, 0.0, 0.0};
    });
}

HarmonicMap generate_geodesic_tanh(const grid::GridShape& shape, double a) {
    if (a == 0.0) throw std::invalid_argument("generate_geodesic_tanh: a must be nonzero");
    return from_jet(shape, [a](cx z) {
        const double g = std::tanh(a * z.real());
        const cx gz = 0.5 * a * (1.0 - g * g);
        return JetSample{g, gz, gz, -0.5 * a * a * g * (1.0 - g * g)};
    });
}

HarmonicMap from_samples(const grid::GridShape& shape, std::vector<cx> values) {
    return HarmonicMap::make(sample_values(shape, std::move(values)));
}

HarmonicMap from_jet(const grid::GridShape& shape, JetFn jet) {
    return HarmonicMap::make(sample_exact(shape, std::move(jet)));
}

}  // namespace cmcgk::harmonic
