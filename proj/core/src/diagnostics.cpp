#include "cmcgk/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmcgk/gauss.hpp"

namespace cmcgk::diag {

namespace {

grid::CxGrid component(const grid::Grid<CxVec3>& a, int k) {
    grid::CxGrid out(a.shape);
    for (std::size_t n = 0; n < a.data.size(); ++n)
        out.data[n] = k == 0 ? a.data[n].x : k == 1 ? a.data[n].y : a.data[n].z;
    return out;
}

cx pick(const CxVec3& v, int k) { return k == 0 ? v.x : k == 1 ? v.y : v.z; }
double pick(const Vec3& v, int k) { return k == 0 ? v.x : k == 1 ? v.y : v.z; }

}  // namespace

ImmersionJet jet(const model::ModelParams& mp, const grid::CxGrid& zeta,
                 const grid::RealGrid& x3) {
    const grid::GridShape& s = zeta.shape;
    if (!(x3.shape == s)) throw std::invalid_argument("jet: shape mismatch");

    ImmersionJet out{mp,
                     zeta,
                     x3,
                     grid::Grid<CxVec3>(s),
                     grid::Grid<Vec3>(s),
                     grid::RealGrid(s),
                     grid::CxGrid(s),
                     2,
                     4,
                     false,
                     0.0,
                     std::vector<std::uint8_t>(s.size(), 0)};

    const grid::WirtingerPair dz = grid::wirtinger(zeta);
    const grid::WirtingerPair dx = grid::wirtinger(grid::to_complex(x3));

    double lambda_max = 0.0;
    for (int j = 2; j < s.nv - 2; ++j)
        for (int i = 2; i < s.nu - 2; ++i) {
            const cx z = zeta.at(i, j);
            const double lam = model::conformal_factor(mp, z);
            const cx zeta_z = dz.fz.at(i, j);
            const cx zetab_z = std::conj(dz.fzb.at(i, j));
            const cx x1_z = 0.5 * (zeta_z + zetab_z);
            const cx x2_z = -0.5 * iu * (zeta_z - zetab_z);
            CxVec3& a = out.a.at(i, j);
            a.x = lam * x1_z;
            a.y = lam * x2_z;
            a.z = dx.fz.at(i, j) - mp.tau * lam * (z.real() * x2_z - z.imag() * x1_z);
            out.eta.at(i, j) = 2.0 * a.z;
            out.lambda.at(i, j) =
                2.0 * (std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
            lambda_max = std::max(lambda_max, out.lambda.at(i, j));
        }

    double n3_sum = 0.0;
    std::size_t count = 0;
    for (int j = 2; j < s.nv - 2; ++j)
        for (int i = 2; i < s.nu - 2; ++i) {
            const double lam = out.lambda.at(i, j);
            if (!(lam > 1e-12 * lambda_max)) {
                out.degenerate[s.index(i, j)] = 1;
                continue;
            }
            const CxVec3& a = out.a.at(i, j);
            Vec3& n = out.normal.at(i, j);
            n.x = 4.0 / lam * std::imag(a.y * std::conj(a.z));
            n.y = 4.0 / lam * std::imag(a.z * std::conj(a.x));
            n.z = 4.0 / lam * std::imag(a.x * std::conj(a.y));
            n3_sum += n.z;
            ++count;
        }
    out.mean_n3 = count ? n3_sum / static_cast<double>(count) : 0.0;

    if (out.mean_n3 < -0.1) {
        // Orient with upward angle function; H and P are computed from this
        // normal, so the flip propagates consistently.
        for (Vec3& n : out.normal.data) n = -n;
        out.mean_n3 = -out.mean_n3;
        out.flipped = true;
    }
    return out;
}

ImmersionJet jet(const weier::ReconstructedSurface& surface) {
    if (!surface.complete())
        throw std::domain_error("jet: surface reconstruction is incomplete");
    return jet(surface.params, surface.zeta, surface.x3);
}

double AlgebraicResiduals::worst() const {
    return std::max({norm_sum, isotropy, unit_normal, tangency});
}

AlgebraicResiduals algebraic_residuals(const ImmersionJet& jet) {
    const grid::GridShape& s = jet.shape();
    AlgebraicResiduals r;
    const int m = jet.first_margin;
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            if (jet.degenerate[s.index(i, j)]) continue;
            const CxVec3& a = jet.a.at(i, j);
            const Vec3& n = jet.normal.at(i, j);
            const double lam = jet.lambda.at(i, j);
            const double scale = std::max(lam, 1e-300);
            r.norm_sum = std::max(
                r.norm_sum,
                std::abs(std::norm(a.x) + std::norm(a.y) + std::norm(a.z) - 0.5 * lam) /
                    scale);
            r.isotropy = std::max(
                r.isotropy, std::abs(a.x * a.x + a.y * a.y + a.z * a.z) / scale);
            r.unit_normal = std::max(r.unit_normal, std::abs(n.dot(n) - 1.0));
            r.tangency = std::max(
                r.tangency,
                std::abs(a.x * n.x + a.y * n.y + a.z * n.z) / std::sqrt(scale));
        }
    return r;
}

namespace {

// cov X_z along X_w for w in {z, zbar}: sum_i d(A_i) V_i + sum_{i,j} A_i W_j
// conj-as-needed table[j][i]; W = A for w=z and W = conj(A) for w=zbar.
CxVec3 covariant(const model::ConnectionTable& tbl, const CxVec3& a, const CxVec3& w,
                 const CxVec3& da) {
    CxVec3 out = da;
    const cx ai[3] = {a.x, a.y, a.z};
    const cx wj[3] = {w.x, w.y, w.z};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const Vec3& t = tbl[j][i];
            const cx f = ai[i] * wj[j];
            out.x += f * t.x;
            out.y += f * t.y;
            out.z += f * t.z;
        }
    return out;
}

struct FrameDerivatives {
    grid::WirtingerPair d1, d2, d3;
};

FrameDerivatives frame_derivatives(const ImmersionJet& jet) {
    return {grid::wirtinger(component(jet.a, 0)), grid::wirtinger(component(jet.a, 1)),
            grid::wirtinger(component(jet.a, 2))};
}

}  // namespace

grid::RealGrid mean_curvature(const ImmersionJet& jet) {
    const grid::GridShape& s = jet.shape();
    const FrameDerivatives fd = frame_derivatives(jet);
    grid::RealGrid h(s);
    const int m = jet.second_margin;
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            if (jet.degenerate[s.index(i, j)]) continue;
            const CxVec3& a = jet.a.at(i, j);
            const CxVec3 abar{std::conj(a.x), std::conj(a.y), std::conj(a.z)};
            const CxVec3 da{fd.d1.fzb.at(i, j), fd.d2.fzb.at(i, j), fd.d3.fzb.at(i, j)};
            const auto tbl = model::connection_coefficients(
                jet.params, model::AmbientPoint::from(jet.zeta.at(i, j), jet.x3.at(i, j)));
            const CxVec3 w = covariant(tbl, a, abar, da);
            const Vec3& n = jet.normal.at(i, j);
            const cx dot = w.x * n.x + w.y * n.y + w.z * n.z;
            h.at(i, j) = 2.0 * dot.real() / jet.lambda.at(i, j);
        }
    return h;
}

grid::CxGrid hopf_p(const ImmersionJet& jet) {
    const grid::GridShape& s = jet.shape();
    const FrameDerivatives fd = frame_derivatives(jet);
    grid::CxGrid p(s);
    const int m = jet.second_margin;
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            if (jet.degenerate[s.index(i, j)]) continue;
            const CxVec3& a = jet.a.at(i, j);
            const CxVec3 da{fd.d1.fz.at(i, j), fd.d2.fz.at(i, j), fd.d3.fz.at(i, j)};
            const auto tbl = model::connection_coefficients(
                jet.params, model::AmbientPoint::from(jet.zeta.at(i, j), jet.x3.at(i, j)));
            const CxVec3 w = covariant(tbl, a, a, da);
            const Vec3& n = jet.normal.at(i, j);
            p.at(i, j) = w.x * n.x + w.y * n.y + w.z * n.z;
        }
    return p;
}

grid::CxGrid abresch_rosenberg(const ImmersionJet& jet, const grid::CxGrid& p) {
    const grid::GridShape& s = jet.shape();
    if (!(p.shape == s)) throw std::invalid_argument("abresch_rosenberg: shape mismatch");
    grid::CxGrid phi(s);
    const double c = jet.params.c, tau = jet.params.tau;
    const int m = jet.second_margin;
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            const cx eta = jet.eta.at(i, j);
            phi.at(i, j) = 2.0 * cx(c, tau) * p.at(i, j) + (c * c + tau * tau) * eta * eta;
        }
    return phi;
}

double verify_hopf_relation(const harmonic::ComplexGrid& g, const ImmersionJet& jet) {
    const grid::GridShape& s = jet.shape();
    if (!(g.values.shape == s))
        throw std::invalid_argument("verify_hopf_relation: shape mismatch");
    const grid::CxGrid q = harmonic::hopf_q(g);
    const grid::CxGrid phi = abresch_rosenberg(jet, hopf_p(jet));
    const int m = std::max(jet.second_margin, g.margin());
    double worst = 0.0;
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            if (jet.degenerate[s.index(i, j)]) continue;
            worst = std::max(worst, std::abs(q.at(i, j) + phi.at(i, j)));
        }
    return worst;
}

double angle_consistency(const harmonic::ComplexGrid& g, const ImmersionJet& jet) {
    const grid::GridShape& s = jet.shape();
    if (!(g.values.shape == s))
        throw std::invalid_argument("angle_consistency: shape mismatch");
    const int m = jet.first_margin;
    double worst = 0.0;
    for (int j = m; j < s.nv - m; ++j)
        for (int i = m; i < s.nu - m; ++i) {
            if (jet.degenerate[s.index(i, j)]) continue;
            const ExtComplex G = gauss::auxiliary_from_gauss(jet.params, g.values.at(i, j),
                                                             jet.zeta.at(i, j));
            const double g2 = G.inf ? 1.0 : std::norm(G.v);
            const double n3 = G.inf ? -1.0 : (1.0 - g2) / (1.0 + g2);
            worst = std::max(worst, std::abs(jet.normal.at(i, j).z - n3));
        }
    return worst;
}

}  // namespace cmcgk::diag
