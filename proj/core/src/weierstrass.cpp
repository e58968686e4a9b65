#include "cmcgk/weierstrass.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cmcgk/gauss.hpp"
#include "cmcgk/runtime.hpp"

namespace cmcgk::weier {

RhsValue rhs(const model::ModelParams& mp, cx g, cx gz, cx gzb, cx zeta) {
    const double c = mp.c, tau = mp.tau;
    const double w = 1.0 - std::norm(g);
    if (!(w > 0.0)) throw std::domain_error("rhs: |g| must be < 1");
    const double phi = 1.0 - c * c * std::norm(zeta);
    if (!(phi > 0.0)) throw std::domain_error("rhs: zeta outside the base disk");
    const double w2 = w * w;
    const cx cz = c * zeta;
    const cx one_m = 1.0 - cz * std::conj(g);
    const cx gmc = g - cz;

    RhsValue r;
    r.zeta_z = 2.0 / cx(c, tau) * one_m * one_m * gz / w2;
    r.zeta_zb = -2.0 / cx(c, -tau) * gmc * gmc * std::conj(gz) / w2;
    const cx zbar_z = std::conj(r.zeta_zb);
    r.x3_z = 0.5 * eta_of(mp, g, gz, zeta) +
             0.5 * iu * tau * (zeta * zbar_z - std::conj(zeta) * r.zeta_z) / phi;
    (void)gzb;
    return r;
}

cx eta_of(const model::ModelParams& mp, cx g, cx gz, cx zeta) {
    const double c = mp.c, tau = mp.tau;
    const double w = 1.0 - std::norm(g);
    const double phi = 1.0 - c * c * std::norm(zeta);
    const cx num = (std::conj(g) - c * std::conj(zeta)) * (1.0 - c * zeta * std::conj(g));
    return -4.0 / cx(c, tau) * num * gz / (phi * w * w);
}

double lambda_of(const model::ModelParams& mp, cx g, cx zeta) {
    const double c = mp.c, tau = mp.tau;
    const cx a = 1.0 - c * std::conj(zeta) * g;
    const cx b = g - c * zeta;
    const double phi = 1.0 - c * c * std::norm(zeta);
    const double w = 1.0 - std::norm(g);
    const double s = std::norm(a) + std::norm(b);
    return 4.0 * s * s / ((c * c + tau * tau) * phi * phi * w * w * w * w);
}

namespace {

struct FieldSample {
    cx g{}, gz{}, gzb{};
};

// 4-point Lagrange interpolation of samples f(k), k in [0,n), at position x
// measured in node units.
template <typename Get>
cx lagrange4(Get&& f, int n, double x) {
    int w = static_cast<int>(std::floor(x)) - 1;
    w = std::clamp(w, 0, n - 4);
    const double t = x - w;
    const double l0 = -(t - 1.0) * (t - 2.0) * (t - 3.0) / 6.0;
    const double l1 = t * (t - 2.0) * (t - 3.0) / 2.0;
    const double l2 = -t * (t - 1.0) * (t - 3.0) / 2.0;
    const double l3 = t * (t - 1.0) * (t - 2.0) / 6.0;
    return l0 * f(w) + l1 * f(w + 1) + l2 * f(w + 2) + l3 * f(w + 3);
}

// Field access for the sweeps: analytic in exact mode, full-coverage stencil
// grids plus line interpolation in finite-difference mode.
class FieldAccess {
public:
    explicit FieldAccess(const harmonic::HarmonicMap& hm)
        : map_(hm.map()), shape_(hm.shape()) {
        if (!map_.exact()) fd_ = grid::wirtinger_extended(map_.values);
    }

    FieldSample at_node(int i, int j) const {
        if (map_.exact()) return at_point(shape_.node(i, j));
        return {map_.values.at(i, j), fd_.fz.at(i, j), fd_.fzb.at(i, j)};
    }

    FieldSample along_row(int j, double u) const {
        if (map_.exact()) return at_point({u, shape_.v0 + j * shape_.hv()});
        const double x = (u - shape_.u0) / shape_.hu();
        return {lagrange4([&](int k) { return map_.values.at(k, j); }, shape_.nu, x),
                lagrange4([&](int k) { return fd_.fz.at(k, j); }, shape_.nu, x),
                lagrange4([&](int k) { return fd_.fzb.at(k, j); }, shape_.nu, x)};
    }

    FieldSample along_col(int i, double v) const {
        if (map_.exact()) return at_point({shape_.u0 + i * shape_.hu(), v});
        const double x = (v - shape_.v0) / shape_.hv();
        return {lagrange4([&](int k) { return map_.values.at(i, k); }, shape_.nv, x),
                lagrange4([&](int k) { return fd_.fz.at(i, k); }, shape_.nv, x),
                lagrange4([&](int k) { return fd_.fzb.at(i, k); }, shape_.nv, x)};
    }

private:
    FieldSample at_point(cx z) const {
        const harmonic::JetSample js = (*map_.analytic)(z);
        return {js.g, js.gz, js.gzb};
    }

    const harmonic::ComplexGrid& map_;
    grid::GridShape shape_;
    grid::WirtingerPair fd_;
};

struct GuardAbort {
    int i, j;
    double margin;
    std::string reason;
};

struct State {
    cx zeta{};
    double x3 = 0.0;
};

struct Slope {
    cx dzeta{};
    double dx3 = 0.0;
};

State advance(const State& y, const Slope& k, double h) {
    return {y.zeta + h * k.dzeta, y.x3 + h * k.dx3};
}

// One classical RK4 step of size h; fields sampled through `field(t)`.
template <typename FieldAt>
State rk4_step(const model::ModelParams& mp, const State& y0, double t0, double h,
               FieldAt&& field, bool along_u, double substep_floor) {
    auto slope = [&](double t, const State& y) -> Slope {
        const double margin = 1.0 - mp.c * mp.c * std::norm(y.zeta);
        if (!(margin > substep_floor)) throw GuardAbort{-1, -1, margin, "domain guard"};
        const FieldSample fs = field(t);
        if (!(std::abs(fs.g) < 1.0)) throw GuardAbort{-1, -1, margin, "vertical point (|g| >= 1)"};
        const RhsValue r = rhs(mp, fs.g, fs.gz, fs.gzb, y.zeta);
        if (along_u) return {r.zeta_z + r.zeta_zb, 2.0 * r.x3_z.real()};
        return {iu * (r.zeta_z - r.zeta_zb), -2.0 * r.x3_z.imag()};
    };
    const Slope k1 = slope(t0, y0);
    const Slope k2 = slope(t0 + 0.5 * h, advance(y0, k1, 0.5 * h));
    const Slope k3 = slope(t0 + 0.5 * h, advance(y0, k2, 0.5 * h));
    const Slope k4 = slope(t0 + h, advance(y0, k3, h));
    return {y0.zeta + h / 6.0 * (k1.dzeta + 2.0 * k2.dzeta + 2.0 * k3.dzeta + k4.dzeta),
            y0.x3 + h / 6.0 * (k1.dx3 + 2.0 * k2.dx3 + 2.0 * k3.dx3 + k4.dx3)};
}

struct SweepResult {
    grid::CxGrid zeta;
    grid::RealGrid x3;
    std::vector<std::uint8_t> filled;
    RunStatus status = RunStatus::ok;
    int abort_i = -1, abort_j = -1;
    double abort_margin = 0.0;
    std::string abort_reason;
};

// Marches one grid line from index k0 outward in both directions, storing
// states; returns false on guard abort (recorded in `out`).
class Sweeper {
public:
    Sweeper(const ReconstructionInput& in, const FieldAccess& field, SweepResult& out)
        : in_(in), field_(field), out_(out),
          floor_(std::min(in.domain_guard * 1e-3, 1e-9)) {}

    bool store(int i, int j, const State& y) {
        const double margin = 1.0 - in_.params.c * in_.params.c * std::norm(y.zeta);
        if (!(margin >= in_.domain_guard) || !std::isfinite(margin) ||
            !std::isfinite(y.x3)) {
            abort(i, j, margin, "domain guard");
            return false;
        }
        out_.zeta.at(i, j) = y.zeta;
        out_.x3.at(i, j) = y.x3;
        out_.filled[out_.zeta.shape.index(i, j)] = 1;
        return true;
    }

    // direction +1/-1 from node k0 (exclusive) to the line end.
    bool march_row(int j, int i0, int dir, State y) {
        const grid::GridShape& s = out_.zeta.shape;
        const double h = dir * s.hu();
        for (int i = i0; dir > 0 ? i < s.nu - 1 : i > 0; i += dir) {
            const double u = s.u0 + i * s.hu();
            try {
                y = rk4_step(in_.params, y, u, h,
                             [&](double t) { return field_.along_row(j, t); }, true, floor_);
            } catch (const GuardAbort& ga) {
                abort(i + dir, j, ga.margin, ga.reason);
                return false;
            }
            if (!store(i + dir, j, y)) return false;
        }
        return true;
    }

    bool march_col(int i, int j0, int dir, State y) {
        const grid::GridShape& s = out_.zeta.shape;
        const double h = dir * s.hv();
        for (int j = j0; dir > 0 ? j < s.nv - 1 : j > 0; j += dir) {
            const double v = s.v0 + j * s.hv();
            try {
                y = rk4_step(in_.params, y, v, h,
                             [&](double t) { return field_.along_col(i, t); }, false, floor_);
            } catch (const GuardAbort& ga) {
                abort(i, j + dir, ga.margin, ga.reason);
                return false;
            }
            if (!store(i, j + dir, y)) return false;
        }
        return true;
    }

    void abort(int i, int j, double margin, const std::string& reason) {
        // keep the first offending node only
        if (out_.status == RunStatus::ok) {
            out_.status = RunStatus::domain_guard_abort;
            out_.abort_i = i;
            out_.abort_j = j;
            out_.abort_margin = margin;
            out_.abort_reason = reason;
        }
    }

private:
    const ReconstructionInput& in_;
    const FieldAccess& field_;
    SweepResult& out_;
    double floor_;
};

SweepResult sweep(const ReconstructionInput& in, const FieldAccess& field, bool row_first) {
    const grid::GridShape& s = in.g.shape();
    SweepResult out{grid::CxGrid(s), grid::RealGrid(s),
                    std::vector<std::uint8_t>(s.size(), 0)};
    Sweeper sw(in, field, out);

    const State y0{in.zeta0, in.x30};
    if (!sw.store(in.i0, in.j0, y0)) return out;

    if (row_first) {
        if (!sw.march_row(in.j0, in.i0, +1, y0)) return out;
        if (!sw.march_row(in.j0, in.i0, -1, y0)) return out;
        for (int i = 0; i < s.nu && out.status == RunStatus::ok; ++i) {
            const State start{out.zeta.at(i, in.j0), out.x3.at(i, in.j0)};
            if (!sw.march_col(i, in.j0, +1, start)) return out;
            if (!sw.march_col(i, in.j0, -1, start)) return out;
        }
    } else {
        if (!sw.march_col(in.i0, in.j0, +1, y0)) return out;
        if (!sw.march_col(in.i0, in.j0, -1, y0)) return out;
        for (int j = 0; j < s.nv && out.status == RunStatus::ok; ++j) {
            const State start{out.zeta.at(in.i0, j), out.x3.at(in.i0, j)};
            if (!sw.march_row(j, in.i0, +1, start)) return out;
            if (!sw.march_row(j, in.i0, -1, start)) return out;
        }
    }
    return out;
}

void validate(const ReconstructionInput& in) {
    if (!(in.params.c > 0.0))
        throw std::domain_error("integrate: requires c > 0 (kappa < 0)");
    const grid::GridShape& s = in.g.shape();
    if (in.i0 < 0 || in.i0 >= s.nu || in.j0 < 0 || in.j0 >= s.nv)
        throw std::invalid_argument("integrate: basepoint is not a grid node");
    if (!model::in_base_disk(in.params, in.zeta0))
        throw std::domain_error("integrate: zeta0 outside the base disk");
    if (in.enforce_harmonicity &&
        !(in.g.report().max_residual <= in.harmonic_max)) {
        std::ostringstream os;
        os << "integrate: input map is not harmonic (max residual "
           << in.g.report().max_residual << " > " << in.harmonic_max << ")";
        throw std::domain_error(os.str());
    }
}

}  // namespace

ReconstructedSurface integrate(const ReconstructionInput& in) {
    validate(in);
    const FieldAccess field(in.g);
    SweepResult sr = sweep(in, field, true);

    const grid::GridShape& s = in.g.shape();
    ReconstructedSurface out{in.params,           std::move(sr.zeta), std::move(sr.x3),
                             grid::CxGrid(s),     grid::RealGrid(s),  std::move(sr.filled),
                             sr.status,           sr.abort_i,         sr.abort_j,
                             sr.abort_reason,     1.0};

    const double c2 = in.params.c * in.params.c;
    for (int j = 0; j < s.nv; ++j)
        for (int i = 0; i < s.nu; ++i) {
            if (!out.filled[s.index(i, j)]) continue;
            const FieldSample fs = field.at_node(i, j);
            const cx zeta = out.zeta.at(i, j);
            out.eta.at(i, j) = eta_of(in.params, fs.g, fs.gz, zeta);
            out.lambda.at(i, j) = lambda_of(in.params, fs.g, zeta);
            out.min_domain_margin =
                std::min(out.min_domain_margin, 1.0 - c2 * std::norm(zeta));
        }
    return out;
}

double integrability_residual(const ReconstructionInput& in) {
    ReconstructionInput relaxed = in;
    relaxed.enforce_harmonicity = false;
    validate(relaxed);
    const FieldAccess field(relaxed.g);
    const SweepResult a = sweep(relaxed, field, true);
    const SweepResult b = sweep(relaxed, field, false);

    const grid::GridShape& s = relaxed.g.shape();
    double worst = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k)
        if (a.filled[k] && b.filled[k])
            worst = std::max(worst, std::abs(a.zeta.data[k] - b.zeta.data[k]));
    return worst;
}

GaussOfImmersion gauss_of_immersion(const model::ModelParams& mp, const grid::CxGrid& zeta,
                                    const grid::RealGrid& x3) {
    const grid::GridShape& s = zeta.shape;
    if (!(x3.shape == s)) throw std::invalid_argument("gauss_of_immersion: shape mismatch");
    const grid::WirtingerPair dz = grid::wirtinger(zeta);
    const grid::WirtingerPair dx = grid::wirtinger(grid::to_complex(x3));

    GaussOfImmersion out{grid::Grid<ExtComplex>(s), 2, 0};
    double lambda_max = 0.0;

    struct Frame {
        cx a1, a2, a3;
        double lambda;
    };
    grid::Grid<Frame> fr(s);

    for (int j = 2; j < s.nv - 2; ++j)
        for (int i = 2; i < s.nu - 2; ++i) {
            const cx z = zeta.at(i, j);
            const double lam = model::conformal_factor(mp, z);
            const cx zeta_z = dz.fz.at(i, j);
            const cx zetab_z = std::conj(dz.fzb.at(i, j));
            const cx x1_z = 0.5 * (zeta_z + zetab_z);
            const cx x2_z = -0.5 * iu * (zeta_z - zetab_z);
            Frame& f = fr.at(i, j);
            f.a1 = lam * x1_z;
            f.a2 = lam * x2_z;
            f.a3 = dx.fz.at(i, j) - mp.tau * lam * (z.real() * x2_z - z.imag() * x1_z);
            f.lambda = 2.0 * (std::norm(f.a1) + std::norm(f.a2) + std::norm(f.a3));
            lambda_max = std::max(lambda_max, f.lambda);
        }

    for (int j = 2; j < s.nv - 2; ++j)
        for (int i = 2; i < s.nu - 2; ++i) {
            const Frame& f = fr.at(i, j);
            if (!(f.lambda > 1e-12 * lambda_max)) {
                ++out.degenerate_nodes;
                continue;
            }
            const double n1 = 4.0 / f.lambda * std::imag(f.a2 * std::conj(f.a3));
            const double n2 = 4.0 / f.lambda * std::imag(f.a3 * std::conj(f.a1));
            const double n3 = 4.0 / f.lambda * std::imag(f.a1 * std::conj(f.a2));
            out.g.at(i, j) = gauss::gauss_from_normal(mp, zeta.at(i, j), {n1, n2, n3});
        }
    return out;
}

}  // namespace cmcgk::weier
