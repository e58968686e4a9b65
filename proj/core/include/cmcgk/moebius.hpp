#pragma once

#include "cmcgk/model.hpp"
#include "cmcgk/types.hpp"

namespace cmcgk::moebius {

// [[alpha, beta], [conj beta, conj alpha]] with |alpha|^2 - |beta|^2 = 1.
struct SU11 {
    cx alpha{1.0, 0.0};
    cx beta{0.0, 0.0};

    SU11 inverse() const { return {std::conj(alpha), -beta}; }
    double unit_defect() const { return std::abs(std::norm(alpha) - std::norm(beta) - 1.0); }

    static SU11 identity() { return {}; }
    // psi_M(z) = e^{i phi} z (and phi_M(zeta) = e^{i phi} zeta).
    static SU11 rotation(double phi) { return {std::polar(1.0, phi / 2.0), cx{0.0, 0.0}}; }
    // The hyperbolic translation with phi_M(w) = 0, alpha real positive.
    static SU11 disk_translation(const model::ModelParams& mp, cx w);
};

SU11 operator*(const SU11& a, const SU11& b);

// Action on the Riemann sphere: psi_M(z) = (alpha z + beta)/(conj(beta) z + conj(alpha)).
ExtComplex psi(const SU11& m, const ExtComplex& w);

// Action on the base disk: phi_M(zeta) = (1/c)(alpha c zeta + beta)/(conj(beta) c zeta + conj(alpha)).
cx phi(const model::ModelParams& mp, const SU11& m, cx zeta);
cx phi_derivative(const model::ModelParams& mp, const SU11& m, cx zeta);

enum class IsometryKind { vertical_translation, axis_rotation, general_lift, pi_rotation };

// An explicit isometry of E3(kappa,tau).  Isom0 kinds carry the SU11 matrix of
// their horizontal part; kind pi_rotation is the orientation map r (which
// sends xi to -xi and is not in Isom0).
class AmbientIsometry {
public:
    model::AmbientPoint apply(const model::AmbientPoint& p) const;
    // Exact differential in frame components: frame vector at p -> frame
    // vector at apply(p).
    Vec3 push_frame(const model::AmbientPoint& p, const Vec3& frame) const;

    IsometryKind kind() const { return kind_; }
    const SU11& horizontal() const;  // throws for pi_rotation
    const model::ModelParams& params() const { return params_; }

    friend AmbientIsometry vertical_translation(const model::ModelParams&, double);
    friend AmbientIsometry axis_rotation(const model::ModelParams&, double);
    friend AmbientIsometry lift_isometry(const model::ModelParams&, const SU11&,
                                         const model::AmbientPoint&);
    friend AmbientIsometry pi_rotation(const model::ModelParams&);

private:
    AmbientIsometry(const model::ModelParams& mp, IsometryKind k) : params_(mp), kind_(k) {}

    double lift_height(cx zeta) const;  // h with h(anchor) = 0

    model::ModelParams params_;
    IsometryKind kind_;
    SU11 m_;
    double shift_ = 0.0;  // vertical translation amount
    model::AmbientPoint anchor_;
};

AmbientIsometry vertical_translation(const model::ModelParams& mp, double t);
AmbientIsometry axis_rotation(const model::ModelParams& mp, double angle);

// Lift of phi_M to E3(kappa,tau): (zeta, x3) -> (phi_M(zeta), x3 + h(zeta))
// where dh = beta_form - phi_M^* beta_form for the connection 1-form
// beta_form = tau Lambda (x2 dx1 - x1 dx2), integrated along straight chords
// from the anchor (h(anchor) = 0).
AmbientIsometry lift_isometry(const model::ModelParams& mp, const SU11& m,
                              const model::AmbientPoint& anchor);

// r(x1,x2,x3) = (x1,-x2,-x3), rotation by pi around the x1-axis.
AmbientIsometry pi_rotation(const model::ModelParams& mp);
model::AmbientPoint rotation_r(const model::AmbientPoint& p);
Vec3 rotation_r_push_frame(const Vec3& frame);

// max |g(df e_i, df e_j) - g(e_i, e_j)| over the coordinate basis at p,
// with df estimated by central differences of the given step.
double metric_pullback_residual(const AmbientIsometry& f, const model::AmbientPoint& p,
                                double step = 1e-5);

}  // namespace cmcgk::moebius
