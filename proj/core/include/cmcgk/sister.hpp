#pragma once

#include "cmcgk/grid.hpp"
#include "cmcgk/harmonic.hpp"
#include "cmcgk/model.hpp"
#include "cmcgk/types.hpp"

namespace cmcgk::sister {

// Weierstrass eta of the sister minimal surface in Nil3(tau_hat):
//   eta_hat = (4i/tau_hat) conj(g_hat) g_hat_z / (1-|g_hat|^2)^2.
grid::CxGrid nil_eta(const model::ModelParams& mp, const harmonic::ComplexGrid& g_hat);

// Recovers zeta algebraically from the pair (g, g_hat): the phase relation
// between g_z/(1-|g|^2) and g_hat_z/(1-|g_hat|^2) is linear-fractional in
// conj(zeta).  Nodes where the linear solve degenerates are flagged.
struct ZetaRecovery {
    grid::CxGrid zeta;
    std::vector<std::uint8_t> degenerate;
    int margin = 0;
};
ZetaRecovery zeta_algebraic(const model::ModelParams& mp, const harmonic::ComplexGrid& g,
                            const harmonic::ComplexGrid& g_hat);

// Residuals of the sister relations over the common interior: the angle
// identity |G| = |g_hat|, the two modulus identities, the Hopf phase relation
// Q(g) = e^{-2 i theta} Q(g_hat), and the energy equality mu(g) = mu(g_hat).
struct AssociateReport {
    double angle = 0.0;     // max | |G| - |g_hat| |
    double modulus1 = 0.0;  // max | |g_z|/(1-|g|^2) - |g_hat_z|/(1-|g_hat|^2) |
    double modulus2 = 0.0;  // same for zbar-derivatives
    double q_phase = 0.0;   // max |Q(g) - e^{-2 i theta} Q(g_hat)|
    double mu = 0.0;        // max |mu(g) - mu(g_hat)|
    double phase_used = 0.0;
    std::size_t degenerate_nodes = 0;

    double worst() const;
};
AssociateReport associate_checks(const model::ModelParams& mp, const harmonic::ComplexGrid& g,
                                 const harmonic::ComplexGrid& g_hat,
                                 bool optimize_phase = false);

// Closed-form rotational surface with conformal Gauss map g(z) = z:
//   zeta = ((e^{2 i theta}-1)/c) z / (e^{2 i theta}|z|^2 - 1)
//   x3   = -(tau/c^2) arctan((|z|^2 - cos 2theta)/sin 2theta) + 2/(c(1-|z|^2))
//   eta  = (4i/(tau + i c)) conj(z) / (1-|z|^2)^2
// For tau = 0 (theta = pi/2) the arctan term degenerates and the limit branch
// x3 = 2/(c(1-|z|^2)) is used.
struct RevolutionSample {
    cx zeta{};
    double x3 = 0.0;
    cx eta{};
};
RevolutionSample example_revolution(const model::ModelParams& mp, cx z);

// (1 - e^{2 i theta})(1 - e^{-2 i theta}) - 4c^2/(tau^2 + c^2), identically 0.
double phase_identity_defect(const model::ModelParams& mp);

}  // namespace cmcgk::sister
