#include "cmcgk/moebius.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <stdexcept>

namespace cmcgk::moebius {

SU11 SU11::disk_translation(const model::ModelParams& mp, cx w) {
    const double s = 1.0 - mp.c * mp.c * std::norm(w);
    if (s <= 0.0) throw std::domain_error("disk_translation: w outside the base disk");
    const double a = 1.0 / std::sqrt(s);
    return {cx{a, 0.0}, -a * mp.c * w};
}

SU11 operator*(const SU11& a, const SU11& b) {
    return {a.alpha * b.alpha + a.beta * std::conj(b.beta),
            a.alpha * b.beta + a.beta * std::conj(b.alpha)};
}

ExtComplex psi(const SU11& m, const ExtComplex& w) {
    cx a, b;  // homogeneous coordinates of w
    if (w.inf) {
        a = 1.0;
        b = 0.0;
    } else {
        a = w.v;
        b = 1.0;
        const double s = std::max(std::abs(a), 1.0);
        a /= s;
        b /= s;
    }
    return ext_div(m.alpha * a + m.beta * b, std::conj(m.beta) * a + std::conj(m.alpha) * b);
}

cx phi(const model::ModelParams& mp, const SU11& m, cx zeta) {
    if (!(mp.c > 0.0)) throw std::domain_error("phi: requires c > 0");
    if (!model::in_base_disk(mp, zeta)) throw std::domain_error("phi: zeta outside the base disk");
    const cx w = mp.c * zeta;
    return (m.alpha * w + m.beta) / (std::conj(m.beta) * w + std::conj(m.alpha)) / mp.c;
}

cx phi_derivative(const model::ModelParams& mp, const SU11& m, cx zeta) {
    const cx d = std::conj(m.beta) * mp.c * zeta + std::conj(m.alpha);
    return 1.0 / (d * d);
}

namespace {

// Connection 1-form beta = tau Lambda (x2 dx1 - x1 dx2) evaluated on the
// coordinate vector w = w1 + i w2 at zeta.
double beta_form(const model::ModelParams& mp, cx zeta, cx w) {
    const double lam = model::conformal_factor(mp, zeta);
    return mp.tau * lam * (zeta.imag() * w.real() - zeta.real() * w.imag());
}

}  // namespace

double AmbientIsometry::lift_height(cx zeta) const {
    if (params_.tau == 0.0) return 0.0;
    const cx z0 = anchor_.zeta();
    const cx dir = zeta - z0;
    if (std::abs(dir) == 0.0) return 0.0;
    auto integrand = [&](double t) {
        const cx z = z0 + t * dir;
        const cx image = phi(params_, m_, z);
        const cx dimage = phi_derivative(params_, m_, z) * dir;
        return beta_form(params_, z, dir) - beta_form(params_, image, dimage);
    };
    return boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        integrand, 0.0, 1.0, 12, 1e-13);
}

model::AmbientPoint AmbientIsometry::apply(const model::AmbientPoint& p) const {
    switch (kind_) {
        case IsometryKind::vertical_translation:
            return {p.x1, p.x2, p.x3 + shift_};
        case IsometryKind::axis_rotation: {
            const cx z = std::polar(1.0, shift_) * p.zeta();
            return model::AmbientPoint::from(z, p.x3);
        }
        case IsometryKind::general_lift: {
            const cx z = phi(params_, m_, p.zeta());
            return model::AmbientPoint::from(z, p.x3 + lift_height(p.zeta()));
        }
        case IsometryKind::pi_rotation:
            return rotation_r(p);
    }
    throw std::logic_error("AmbientIsometry: bad kind");
}

Vec3 AmbientIsometry::push_frame(const model::AmbientPoint& p, const Vec3& f) const {
    if (kind_ == IsometryKind::pi_rotation) return rotation_r_push_frame(f);
    if (kind_ == IsometryKind::vertical_translation) return f;
    // Horizontal components rotate by the conformal factor of phi_M; the
    // vertical component is preserved (Isom0 fixes xi).
    const cx zeta = p.zeta();
    const cx image = phi(params_, m_, zeta);
    const cx factor = phi_derivative(params_, m_, zeta) *
                      (model::conformal_factor(params_, image) /
                       model::conformal_factor(params_, zeta));
    const cx w = factor * cx{f.x, f.y};
    return {w.real(), w.imag(), f.z};
}

const SU11& AmbientIsometry::horizontal() const {
    if (kind_ == IsometryKind::pi_rotation)
        throw std::logic_error("pi_rotation has no SU11 horizontal part");
    return m_;
}

AmbientIsometry vertical_translation(const model::ModelParams& mp, double t) {
    AmbientIsometry f(mp, IsometryKind::vertical_translation);
    f.shift_ = t;
    return f;
}

AmbientIsometry axis_rotation(const model::ModelParams& mp, double angle) {
    AmbientIsometry f(mp, IsometryKind::axis_rotation);
    f.shift_ = angle;
    f.m_ = SU11::rotation(angle);
    return f;
}

AmbientIsometry lift_isometry(const model::ModelParams& mp, const SU11& m,
                              const model::AmbientPoint& anchor) {
    if (std::abs(m.beta) == 0.0) {
        // Diagonal matrices lift to exact rotations about the x3-axis.
        AmbientIsometry f = axis_rotation(mp, 2.0 * std::arg(m.alpha));
        return f;
    }
    AmbientIsometry f(mp, IsometryKind::general_lift);
    f.m_ = m;
    f.anchor_ = anchor;
    return f;
}

AmbientIsometry pi_rotation(const model::ModelParams& mp) {
    return AmbientIsometry(mp, IsometryKind::pi_rotation);
}

model::AmbientPoint rotation_r(const model::AmbientPoint& p) {
    return {p.x1, -p.x2, -p.x3};
}

Vec3 rotation_r_push_frame(const Vec3& f) {
    return {f.x, -f.y, -f.z};
}

double metric_pullback_residual(const AmbientIsometry& f, const model::AmbientPoint& p,
                                double step) {
    const auto& mp = f.params();
    const model::AmbientPoint q = f.apply(p);

    // df on the coordinate basis by central differences.
    Vec3 cols[3];
    for (int k = 0; k < 3; ++k) {
        model::AmbientPoint pp = p, pm = p;
        (k == 0 ? pp.x1 : k == 1 ? pp.x2 : pp.x3) += step;
        (k == 0 ? pm.x1 : k == 1 ? pm.x2 : pm.x3) -= step;
        const model::AmbientPoint fp = f.apply(pp), fm = f.apply(pm);
        cols[k] = {(fp.x1 - fm.x1) / (2.0 * step), (fp.x2 - fm.x2) / (2.0 * step),
                   (fp.x3 - fm.x3) / (2.0 * step)};
    }

    const Vec3 basis[3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
            const double pulled = model::metric(mp, q, cols[i], cols[j]);
            const double orig = model::metric(mp, p, basis[i], basis[j]);
            worst = std::max(worst, std::abs(pulled - orig));
        }
    return worst;
}

}  // namespace cmcgk::moebius
