#include "cmcgk/sister.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cmcgk/gauss.hpp"

namespace cmcgk::sister {

grid::CxGrid nil_eta(const model::ModelParams& mp, const harmonic::ComplexGrid& g_hat) {
    const grid::GridShape& s = g_hat.values.shape;
    const harmonic::DerivativeField d = harmonic::derivatives(g_hat);
    grid::CxGrid out(s);
    const int m = g_hat.margin();
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            const cx gh = g_hat.values.at(i, j);
            const double w = 1.0 - std::norm(gh);
            if (!(w > 0.0)) throw std::domain_error("nil_eta: |g_hat| must be < 1");
            out.at(i, j) = 4.0 * iu / mp.tau_hat * std::conj(gh) * d.gz.at(i, j) / (w * w);
        }
    return out;
}

namespace {

struct PairData {
    harmonic::DerivativeField dg, dgh;
    int margin;
};

PairData pair_data(const harmonic::ComplexGrid& g, const harmonic::ComplexGrid& g_hat) {
    if (!(g.values.shape == g_hat.values.shape))
        throw std::invalid_argument("sister: maps must share a grid");
    return {harmonic::derivatives(g), harmonic::derivatives(g_hat),
            std::max(g.margin(), g_hat.margin())};
}

// Solves A (conj g - c conj zeta) = B (1 - c conj(zeta) g) for conj zeta.
cx solve_zeta_bar(double c, cx g, cx a, cx b, bool& ok, double scale) {
    const cx den = c * (b * g - a);
    if (std::abs(den) < 1e-12 * scale) {
        ok = false;
        return {};
    }
    ok = true;
    return (b - a * std::conj(g)) / den;
}

}  // namespace

ZetaRecovery zeta_algebraic(const model::ModelParams& mp, const harmonic::ComplexGrid& g,
                            const harmonic::ComplexGrid& g_hat) {
    if (!(mp.c > 0.0)) throw std::domain_error("zeta_algebraic: requires c > 0");
    const PairData pd = pair_data(g, g_hat);
    const grid::GridShape& s = g.values.shape;
    ZetaRecovery out{grid::CxGrid(s), std::vector<std::uint8_t>(s.size(), 0), pd.margin};
    const cx phase = std::polar(1.0, -2.0 * mp.theta);

    double scale = 0.0;
    for (int j = pd.margin; j < s.nv - pd.margin; ++j)
        for (int i = pd.margin; i < s.nu - pd.margin; ++i)
            scale = std::max(scale, std::abs(pd.dg.gz.at(i, j)) /
                                        (1.0 - std::norm(g.values.at(i, j))));
    if (scale == 0.0) scale = 1.0;

    for (int j = pd.margin; j < s.nv - pd.margin; ++j)
        for (int i = pd.margin; i < s.nu - pd.margin; ++i) {
            const cx gv = g.values.at(i, j);
            const cx gh = g_hat.values.at(i, j);
            const cx a = pd.dg.gz.at(i, j) / (1.0 - std::norm(gv));
            const cx b = phase * std::conj(gh) * pd.dgh.gz.at(i, j) / (1.0 - std::norm(gh));
            bool ok = false;
            const cx zb = solve_zeta_bar(mp.c, gv, a, b, ok, scale);
            if (!ok) {
                out.degenerate[s.index(i, j)] = 1;
                continue;
            }
            out.zeta.at(i, j) = std::conj(zb);
        }
    return out;
}

namespace {

harmonic::ComplexGrid rotate_map(const harmonic::ComplexGrid& g, double rho) {
    const cx f = std::polar(1.0, rho);
    harmonic::ComplexGrid out = g;
    for (cx& v : out.values.data) v *= f;
    if (g.analytic) {
        const harmonic::JetFn base = *g.analytic;
        out.analytic = [base, f](cx z) {
            harmonic::JetSample js = base(z);
            js.g *= f;
            js.gz *= f;
            js.gzb *= f;
            js.gzzb *= f;
            return js;
        };
    }
    return out;
}

AssociateReport run_checks(const model::ModelParams& mp, const harmonic::ComplexGrid& g,
                           const harmonic::ComplexGrid& g_hat, double rho) {
    const harmonic::ComplexGrid gh =
        rho == 0.0 ? g_hat : rotate_map(g_hat, rho);
    const PairData pd = pair_data(g, gh);
    const grid::GridShape& s = g.values.shape;
    const ZetaRecovery zr = zeta_algebraic(mp, g, gh);
    const grid::CxGrid qg = harmonic::hopf_q(g);
    const grid::CxGrid qh = harmonic::hopf_q(gh);
    const grid::RealGrid mug = harmonic::energy_mu(g);
    const grid::RealGrid muh = harmonic::energy_mu(gh);
    const cx qphase = std::polar(1.0, -2.0 * mp.theta);

    AssociateReport r;
    r.phase_used = rho;
    const int m = std::max(pd.margin, zr.margin);
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            const cx gv = g.values.at(i, j);
            const cx ghv = gh.values.at(i, j);
            const double wg = 1.0 - std::norm(gv);
            const double wh = 1.0 - std::norm(ghv);

            if (zr.degenerate[s.index(i, j)]) {
                ++r.degenerate_nodes;
            } else {
                const ExtComplex G =
                    gauss::auxiliary_from_gauss(mp, gv, zr.zeta.at(i, j));
                const double absG = G.inf ? std::numeric_limits<double>::infinity()
                                          : std::abs(G.v);
                r.angle = std::max(r.angle, std::abs(absG - std::abs(ghv)));
            }
            r.modulus1 = std::max(r.modulus1,
                                  std::abs(std::abs(pd.dg.gz.at(i, j)) / wg -
                                           std::abs(pd.dgh.gz.at(i, j)) / wh));
            r.modulus2 = std::max(r.modulus2,
                                  std::abs(std::abs(pd.dg.gzb.at(i, j)) / wg -
                                           std::abs(pd.dgh.gzb.at(i, j)) / wh));
            r.q_phase = std::max(r.q_phase,
                                 std::abs(qg.at(i, j) - qphase * qh.at(i, j)));
            r.mu = std::max(r.mu, std::abs(mug.at(i, j) - muh.at(i, j)));
        }
    return r;
}

}  // namespace

double AssociateReport::worst() const {
    return std::max({angle, modulus1, modulus2, q_phase, mu});
}

AssociateReport associate_checks(const model::ModelParams& mp, const harmonic::ComplexGrid& g,
                                 const harmonic::ComplexGrid& g_hat, bool optimize_phase) {
    if (!optimize_phase) return run_checks(mp, g, g_hat, 0.0);

    // The Nil Gauss map is defined up to a rotation of the disk; pick the
    // phase minimizing the angle residual (coarse scan + golden refinement).
    const double tau_g = 2.0 * std::numbers::pi;
    double best_rho = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 64; ++k) {
        const double rho = tau_g * k / 64.0;
        const double v = run_checks(mp, g, g_hat, rho).angle;
        if (v < best) {
            best = v;
            best_rho = rho;
        }
    }
    double lo = best_rho - tau_g / 64.0, hi = best_rho + tau_g / 64.0;
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
    double f1 = run_checks(mp, g, g_hat, x1).angle;
    double f2 = run_checks(mp, g, g_hat, x2).angle;
    for (int it = 0; it < 40; ++it) {
        if (f1 < f2) {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - gr * (hi - lo);
            f1 = run_checks(mp, g, g_hat, x1).angle;
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + gr * (hi - lo);
            f2 = run_checks(mp, g, g_hat, x2).angle;
        }
    }
    return run_checks(mp, g, g_hat, 0.5 * (lo + hi));
}

RevolutionSample example_revolution(const model::ModelParams& mp, cx z) {
    if (!(mp.c > 0.0)) throw std::domain_error("example_revolution: requires c > 0");
    if (!(std::abs(z) < 1.0)) throw std::domain_error("example_revolution: |z| must be < 1");
    const double c = mp.c, tau = mp.tau;
    const double r2 = std::norm(z);
    const cx e2t = std::polar(1.0, 2.0 * mp.theta);

    RevolutionSample out;
    out.zeta = (e2t - 1.0) / c * z / (e2t * r2 - 1.0);
    out.eta = 4.0 * iu / cx(tau, c) * std::conj(z) / ((1.0 - r2) * (1.0 - r2));

    const double cos2t = std::cos(2.0 * mp.theta);
    const double sin2t = std::sin(2.0 * mp.theta);
    if (tau == 0.0) {
        // theta = pi/2, sin 2theta = 0: the arctan term carries a zero factor
        // tau/c^2, so only the limit branch survives.
        out.x3 = 2.0 / (c * (1.0 - r2));
    } else {
        out.x3 = -tau / (c * c) * std::atan((r2 - cos2t) / sin2t) + 2.0 / (c * (1.0 - r2));
    }
    return out;
}

double phase_identity_defect(const model::ModelParams& mp) {
    const cx e2t = std::polar(1.0, 2.0 * mp.theta);
    const cx lhs = (1.0 - e2t) * (1.0 - std::conj(e2t));
    const double rhs = 4.0 * mp.c * mp.c / (mp.tau * mp.tau + mp.c * mp.c);
    return std::abs(lhs - rhs);
}

}  // namespace cmcgk::sister
