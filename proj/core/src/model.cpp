#include "cmcgk/model.hpp"

#include <cmath>
#include <stdexcept>

namespace cmcgk::model {

ModelParams ModelParams::make(double kappa, double tau) {
    if (!(kappa <= 0.0)) throw std::invalid_argument("ModelParams: kappa must be <= 0");
    if (kappa == 0.0 && tau == 0.0)
        throw std::invalid_argument("ModelParams: (kappa,tau) = (0,0) is Euclidean space");
    ModelParams mp;
    mp.kappa = kappa;
    mp.tau = tau;
    mp.c = std::sqrt(-kappa) / 2.0;
    mp.tau_hat = std::hypot(tau, mp.c);
    mp.theta = std::atan2(mp.c, tau);
    return mp;
}

bool in_base_disk(const ModelParams& mp, cx zeta) {
    return mp.c * std::abs(zeta) < 1.0;
}

double conformal_factor(const ModelParams& mp, cx zeta) {
    const double s = mp.c * mp.c * std::norm(zeta);
    if (s >= 1.0) throw std::domain_error("conformal_factor: point outside the base disk");
    return 1.0 / (1.0 - s);
}

Vec3 frame_to_coordinates(const ModelParams& mp, const AmbientPoint& p, const Vec3& f) {
    const double lam = conformal_factor(mp, p.zeta());
    return {f.x / lam,
            f.y / lam,
            f.z + mp.tau * (p.x1 * f.y - p.x2 * f.x)};
}

Vec3 coordinates_to_frame(const ModelParams& mp, const AmbientPoint& p, const Vec3& a) {
    const double lam = conformal_factor(mp, p.zeta());
    return {lam * a.x,
            lam * a.y,
            a.z - mp.tau * lam * (p.x1 * a.y - p.x2 * a.x)};
}

double metric(const ModelParams& mp, const AmbientPoint& p, const Vec3& a, const Vec3& b) {
    const double lam = conformal_factor(mp, p.zeta());
    const double wa = mp.tau * lam * (p.x2 * a.x - p.x1 * a.y) + a.z;
    const double wb = mp.tau * lam * (p.x2 * b.x - p.x1 * b.y) + b.z;
    return lam * lam * (a.x * b.x + a.y * b.y) + wa * wb;
}

ConnectionTable connection_coefficients(const ModelParams& mp, const AmbientPoint& p) {
    const double k2x1 = 0.5 * mp.kappa * p.x1;
    const double k2x2 = 0.5 * mp.kappa * p.x2;
    const double t = mp.tau;
    ConnectionTable tbl{};
    // along V1
    tbl[0][0] = {0.0, k2x2, 0.0};
    tbl[0][1] = {-k2x2, 0.0, t};
    tbl[0][2] = {0.0, -t, 0.0};
    // along V2
    tbl[1][0] = {0.0, -k2x1, -t};
    tbl[1][1] = {k2x1, 0.0, 0.0};
    tbl[1][2] = {t, 0.0, 0.0};
    // along V3
    tbl[2][0] = {0.0, -t, 0.0};
    tbl[2][1] = {t, 0.0, 0.0};
    tbl[2][2] = {0.0, 0.0, 0.0};
    return tbl;
}

BasePoint project(const ModelParams& mp, const AmbientPoint& p) {
    return {p.zeta(), conformal_factor(mp, p.zeta())};
}

LorentzVector hyperboloid_embed(const ModelParams& mp, cx zeta) {
    if (!(mp.c > 0.0)) throw std::domain_error("hyperboloid_embed: requires c > 0");
    const double c = mp.c;
    const double r2 = std::norm(zeta);
    const double d = 1.0 - c * c * r2;
    if (d <= 0.0) throw std::domain_error("hyperboloid_embed: point outside the base disk");
    const double s = 1.0 / (2.0 * c * d);
    return {s * (1.0 + c * c * r2), s * 2.0 * c * zeta.real(), s * 2.0 * c * zeta.imag()};
}

LorentzVector hyperboloid_pushforward(const ModelParams& mp, cx zeta, cx du) {
    if (!(mp.c > 0.0)) throw std::domain_error("hyperboloid_pushforward: requires c > 0");
    const double c = mp.c;
    const double x1 = zeta.real(), x2 = zeta.imag();
    const double d = 1.0 - c * c * std::norm(zeta);
    if (d <= 0.0) throw std::domain_error("hyperboloid_pushforward: point outside the base disk");
    const double d2 = d * d;
    const double u1 = du.real(), u2 = du.imag();
    // Columns of the chart Jacobian.
    const LorentzVector e1{2.0 * c * x1 / d2, (d + 2.0 * c * c * x1 * x1) / d2,
                           2.0 * c * c * x1 * x2 / d2};
    const LorentzVector e2{2.0 * c * x2 / d2, 2.0 * c * c * x1 * x2 / d2,
                           (d + 2.0 * c * c * x2 * x2) / d2};
    return {u1 * e1.p0 + u2 * e2.p0, u1 * e1.p1 + u2 * e2.p1, u1 * e1.p2 + u2 * e2.p2};
}

}  // namespace cmcgk::model
