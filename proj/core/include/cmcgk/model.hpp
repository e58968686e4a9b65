#pragma once

#include <array>

#include "cmcgk/types.hpp"

namespace cmcgk::model {

// Ambient-space constants of E3(kappa,tau), kappa <= 0, (kappa,tau) != (0,0).
// c = sqrt(-kappa)/2 is the critical mean curvature; tau + i c = e^{i theta} tau_hat.
struct ModelParams {
    double kappa = -4.0;
    double tau = 0.0;
    double c = 1.0;
    double tau_hat = 1.0;
    double theta = 0.0;

    static ModelParams make(double kappa, double tau);
};

// Model coordinates (x1,x2,x3); base coordinates as zeta = x1 + i x2.
struct AmbientPoint {
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;

    cx zeta() const { return {x1, x2}; }
    static AmbientPoint from(cx zeta, double x3) { return {zeta.real(), zeta.imag(), x3}; }
};

struct BasePoint {
    cx zeta{};
    double lambda = 1.0;  // conformal factor of the base metric at zeta
};

// Components in the orthonormal frame (V1,V2,V3) at a base point.
struct TangentVector {
    Vec3 frame;
    AmbientPoint base;
};

struct LorentzVector {
    double p0 = 0.0, p1 = 0.0, p2 = 0.0;  // p0 timelike
};

inline double minkowski(const LorentzVector& a, const LorentzVector& b) {
    return -a.p0 * b.p0 + a.p1 * b.p1 + a.p2 * b.p2;
}

bool in_base_disk(const ModelParams& mp, cx zeta);

// Lambda = 1/(1 - c^2 |zeta|^2); requires c|zeta| < 1.
double conformal_factor(const ModelParams& mp, cx zeta);

// Components in the coordinate basis (d/dx1, d/dx2, d/dx3) of a frame vector,
// and back.  Both are linear in the vector argument.
Vec3 frame_to_coordinates(const ModelParams& mp, const AmbientPoint& p, const Vec3& frame);
Vec3 coordinates_to_frame(const ModelParams& mp, const AmbientPoint& p, const Vec3& coord);

// Ambient metric on coordinate components.
double metric(const ModelParams& mp, const AmbientPoint& p, const Vec3& a, const Vec3& b);

// table[i][j] = frame components of the covariant derivative of V_{j+1}
// along V_{i+1}.
using ConnectionTable = std::array<std::array<Vec3, 3>, 3>;
ConnectionTable connection_coefficients(const ModelParams& mp, const AmbientPoint& p);

BasePoint project(const ModelParams& mp, const AmbientPoint& p);

// Disk -> hyperboloid chart used for the Lorentzian picture (c > 0):
//   p(zeta) = (1 + c^2|zeta|^2, 2c Re zeta, 2c Im zeta) / (2c (1 - c^2|zeta|^2)).
// Satisfies <p,p> = 1/kappa, p0 > 0, and pulls the Minkowski metric back to
// Lambda^2 |dzeta|^2.
LorentzVector hyperboloid_embed(const ModelParams& mp, cx zeta);

// Pushforward through the chart of a base tangent vector given in disk
// coordinates as du = du1 + i du2.
LorentzVector hyperboloid_pushforward(const ModelParams& mp, cx zeta, cx du);

}  // namespace cmcgk::model
