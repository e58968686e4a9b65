#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cmcgk/grid.hpp"
#include "cmcgk/harmonic.hpp"
#include "cmcgk/model.hpp"
#include "cmcgk/types.hpp"

namespace cmcgk::weier {

// Right-hand side of the first-order representation system at one point:
//   zeta_z  =  (2/(c+i tau)) (1 - c zeta conj g)^2 g_z / (1-|g|^2)^2
//   zeta_zb = -(2/(c-i tau)) (g - c zeta)^2 conj(g_z) / (1-|g|^2)^2
//   x3_z    =  eta/2 + (i tau/2)(zeta conj(zeta_zb)... ) domain-corrected term
struct RhsValue {
    cx zeta_z{}, zeta_zb{}, x3_z{};
};
RhsValue rhs(const model::ModelParams& mp, cx g, cx gz, cx gzb, cx zeta);

// eta = 2<X_z, xi> in terms of the Gauss map data.
cx eta_of(const model::ModelParams& mp, cx g, cx gz, cx zeta);

// Conformal factor of the reconstructed immersion (critical case H = c).
double lambda_of(const model::ModelParams& mp, cx g, cx zeta);

struct ReconstructionInput {
    model::ModelParams params;  // requires c > 0
    harmonic::HarmonicMap g;
    int i0 = 0, j0 = 0;  // basepoint node
    cx zeta0{};
    double x30 = 0.0;
    double domain_guard = 1e-6;   // abort when 1 - c^2|zeta|^2 falls below
    double harmonic_max = 1e-6;   // reject inputs with larger max residual
    bool enforce_harmonicity = true;
};

enum class RunStatus : std::uint8_t { ok, domain_guard_abort };

struct ReconstructedSurface {
    model::ModelParams params;
    grid::CxGrid zeta;
    grid::RealGrid x3;
    grid::CxGrid eta;
    grid::RealGrid lambda;
    std::vector<std::uint8_t> filled;  // per-node validity (partial on abort)

    RunStatus status = RunStatus::ok;
    int abort_i = -1, abort_j = -1;  // first offending node on abort
    std::string abort_reason;
    double min_domain_margin = 1.0;  // min over filled nodes of 1 - c^2|zeta|^2

    bool complete() const { return status == RunStatus::ok; }
};

// Integrates the representation system over the grid with classical RK4:
// along the basepoint row first, then along every column.  Aborts gracefully
// when the domain guard trips.
ReconstructedSurface integrate(const ReconstructionInput& input);

// Max |zeta(row-then-column) - zeta(column-then-row)| over two sweep orders;
// a numerical certificate for the mixed-partials identity.  Does not gate on
// harmonicity (it is the detector for non-integrable inputs).
double integrability_residual(const ReconstructionInput& input);

struct GaussOfImmersion {
    grid::Grid<ExtComplex> g;
    int margin = 2;
    std::size_t degenerate_nodes = 0;  // lambda below tolerance
};

// Recovers the Gauss map of a sampled immersion by finite differences: X_z in
// the frame, unit normal from the cross-product identities, then the Gauss
// map formula.
GaussOfImmersion gauss_of_immersion(const model::ModelParams& mp, const grid::CxGrid& zeta,
                                    const grid::RealGrid& x3);

}  // namespace cmcgk::weier
