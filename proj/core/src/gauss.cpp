#include "cmcgk/gauss.hpp"

#include <cmath>
#include <stdexcept>

namespace cmcgk::gauss {

ExtComplex projector_pi(const model::ModelParams& mp, const model::AmbientPoint& p,
                        const Vec3& z) {
    if (std::abs(z.norm() - 1.0) > 1e-10)
        throw std::invalid_argument("projector_pi: Z must be a unit vector");
    return gauss_from_normal(mp, p.zeta(), z);
}

ExtComplex gauss_from_normal(const model::ModelParams& mp, cx zeta, const Vec3& n) {
    const cx w{n.x, n.y};
    const cx cz = mp.c * zeta;
    return ext_div(w + cz * (1.0 + n.z), std::conj(cz) * w + (1.0 + n.z));
}

ExtComplex auxiliary_from_gauss(const model::ModelParams& mp, const ExtComplex& g, cx zeta) {
    const cx cz = mp.c * zeta;
    if (g.inf) return ext_div(cx{1.0, 0.0}, -std::conj(cz));
    return ext_div(g.v - cz, -std::conj(cz) * g.v + 1.0);
}

ExtComplex gauss_from_auxiliary(const model::ModelParams& mp, const ExtComplex& G, cx zeta) {
    const cx cz = mp.c * zeta;
    if (G.inf) return ext_div(cx{1.0, 0.0}, std::conj(cz));
    return ext_div(G.v + cz, std::conj(cz) * G.v + 1.0);
}

Vec3 normal_from_auxiliary(const ExtComplex& G) {
    if (G.inf) return {0.0, 0.0, -1.0};
    const double d = 1.0 + std::norm(G.v);
    return {2.0 * G.v.real() / d, 2.0 * G.v.imag() / d, (1.0 - std::norm(G.v)) / d};
}

model::LorentzVector lorentz_gauss(const model::ModelParams& mp, cx zeta, const Vec3& n) {
    if (!(mp.c > 0.0)) throw std::domain_error("lorentz_gauss: requires c > 0");
    const double nu = n.z;
    if (!(nu > 0.0)) throw std::domain_error("lorentz_gauss: angle function must be positive");
    const model::LorentzVector xs = model::hyperboloid_embed(mp, zeta);
    // dpi(N) has disk components (N1 + i N2)/Lambda.
    const cx horizontal = cx{n.x, n.y} / model::conformal_factor(mp, zeta);
    const model::LorentzVector ns = model::hyperboloid_pushforward(mp, zeta, horizontal);
    const double s = 2.0 * mp.c;
    return {(s * xs.p0 + ns.p0) / nu, (s * xs.p1 + ns.p1) / nu, (s * xs.p2 + ns.p2) / nu};
}

model::LorentzVector disk_to_hyperboloid(cx w) {
    const double d = 1.0 - std::norm(w);
    if (d <= 0.0) throw std::domain_error("disk_to_hyperboloid: |w| must be < 1");
    return {(1.0 + std::norm(w)) / d, 2.0 * w.real() / d, 2.0 * w.imag() / d};
}

Hemisphere classify(const ExtComplex& g, double band) {
    if (g.inf) return Hemisphere::south;
    const double a = std::abs(g.v);
    if (std::abs(a - 1.0) < band) return Hemisphere::equator;
    return a < 1.0 ? Hemisphere::north : Hemisphere::south;
}

}  // namespace cmcgk::gauss
