#pragma once

#include <cstdint>
#include <vector>

#include "cmcgk/grid.hpp"
#include "cmcgk/harmonic.hpp"
#include "cmcgk/model.hpp"
#include "cmcgk/types.hpp"
#include "cmcgk/weierstrass.hpp"

namespace cmcgk::diag {

// First-order differential geometry of a sampled immersion: X_z in the frame
// (A1,A2,A3), unit normal, conformal factor, eta = 2 A3.  Frame components
// come from 4th-order stencils, so fields are valid on the margin-2 interior;
// quantities built from second derivatives (H, P, Phi) live on margin 4.
struct ImmersionJet {
    model::ModelParams params;
    grid::CxGrid zeta;
    grid::RealGrid x3;
    grid::Grid<CxVec3> a;
    grid::Grid<Vec3> normal;
    grid::RealGrid lambda;
    grid::CxGrid eta;
    int first_margin = 2;
    int second_margin = 4;
    bool flipped = false;    // normal negated to make the mean angle positive
    double mean_n3 = 0.0;
    std::vector<std::uint8_t> degenerate;  // lambda below tolerance

    const grid::GridShape& shape() const { return zeta.shape; }
};

ImmersionJet jet(const model::ModelParams& mp, const grid::CxGrid& zeta,
                 const grid::RealGrid& x3);
ImmersionJet jet(const weier::ReconstructedSurface& surface);

// Max relative defects of the algebraic identities tying A, N and lambda
// (norm sum, isotropy, unit normal, tangency), over the margin interior.
struct AlgebraicResiduals {
    double norm_sum = 0.0;
    double isotropy = 0.0;
    double unit_normal = 0.0;
    double tangency = 0.0;

    double worst() const;
};
AlgebraicResiduals algebraic_residuals(const ImmersionJet& jet);

// Mean curvature by Gauss-Weingarten: H = (2/lambda) <cov X_z along X_zbar, N>
// with the covariant derivative assembled from the connection table and
// stencil derivatives of the frame components.
grid::RealGrid mean_curvature(const ImmersionJet& jet);

// Hopf differential coefficient P = <N, cov X_z along X_z>.
grid::CxGrid hopf_p(const ImmersionJet& jet);

// Abresch-Rosenberg coefficient Phi = 2(c + i tau) P + (c^2 + tau^2) eta^2.
grid::CxGrid abresch_rosenberg(const ImmersionJet& jet, const grid::CxGrid& p);

// Max |Q(g) + Phi| over the common interior margin.
double verify_hopf_relation(const harmonic::ComplexGrid& g, const ImmersionJet& jet);

// Angle-function consistency: max |N3 - (1-|G|^2)/(1+|G|^2)| with G the
// auxiliary map of the recovered Gauss data.
double angle_consistency(const harmonic::ComplexGrid& g, const ImmersionJet& jet);

}  // namespace cmcgk::diag
