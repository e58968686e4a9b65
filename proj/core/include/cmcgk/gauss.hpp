#pragma once

#include "cmcgk/model.hpp"
#include "cmcgk/types.hpp"

namespace cmcgk::gauss {

// Pi_x(Z) = (Z1 + iZ2 + c zeta (1+Z3)) / (c conj(zeta) (Z1+iZ2) + 1 + Z3)
// for a unit frame vector Z at x.  South pole maps to infinity.
ExtComplex projector_pi(const model::ModelParams& mp, const model::AmbientPoint& p,
                        const Vec3& unit_frame);

// Gauss map of a surface with unit normal N (frame components) over zeta.
ExtComplex gauss_from_normal(const model::ModelParams& mp, cx zeta, const Vec3& unit_normal);

// Frame-dependent auxiliary map: G = (g - c zeta)/(-c conj(zeta) g + 1) and
// its inverse g = (G + c zeta)/(c conj(zeta) G + 1).
ExtComplex auxiliary_from_gauss(const model::ModelParams& mp, const ExtComplex& g, cx zeta);
ExtComplex gauss_from_auxiliary(const model::ModelParams& mp, const ExtComplex& G, cx zeta);

// N = (2 Re G, 2 Im G, 1 - |G|^2)/(1 + |G|^2); infinity maps to (0,0,-1).
Vec3 normal_from_auxiliary(const ExtComplex& G);

// Lorentzian-model Gauss map (requires c > 0 and angle function N3 > 0):
//   g_tilde = (2c X_* + N_*)/nu  with X_* the hyperboloid image of zeta and
// N_* the chart pushforward of the horizontal part of N.
model::LorentzVector lorentz_gauss(const model::ModelParams& mp, cx zeta,
                                   const Vec3& unit_normal);

// F : D -> H^2(-1), w -> (1+|w|^2, 2 Re w, 2 Im w)/(1-|w|^2).
model::LorentzVector disk_to_hyperboloid(cx w);

enum class Hemisphere { equator, north, south };

// Band |,|g|-1,| < band classifies as equator.
Hemisphere classify(const ExtComplex& g, double band = 1e-10);

}  // namespace cmcgk::gauss
