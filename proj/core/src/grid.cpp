#include "cmcgk/grid.hpp"

#include <stdexcept>

namespace cmcgk::grid {

GridShape GridShape::centered(cx center, double half_width, double half_height, int nu, int nv) {
    if (nu < 5 || nv < 5)
        throw std::invalid_argument("GridShape: need at least 5 nodes per direction");
    if (!(half_width > 0.0) || !(half_height > 0.0))
        throw std::invalid_argument("GridShape: domain half-sizes must be positive");
    return {center.real() - half_width, center.real() + half_width,
            center.imag() - half_height, center.imag() + half_height, nu, nv};
}

WirtingerPair wirtinger(const CxGrid& f) {
    const GridShape& s = f.shape;
    if (s.nu < 5 || s.nv < 5) throw std::invalid_argument("wirtinger: grid too small");
    WirtingerPair out{CxGrid(s), CxGrid(s), 2};
    const double du = 12.0 * s.hu();
    const double dv = 12.0 * s.hv();
    for (int j = 2; j < s.nv - 2; ++j) {
        for (int i = 2; i < s.nu - 2; ++i) {
            const cx fu = (-f.at(i + 2, j) + 8.0 * f.at(i + 1, j) - 8.0 * f.at(i - 1, j) +
                           f.at(i - 2, j)) / du;
            const cx fv = (-f.at(i, j + 2) + 8.0 * f.at(i, j + 1) - 8.0 * f.at(i, j - 1) +
                           f.at(i, j - 2)) / dv;
            out.fz.at(i, j) = 0.5 * (fu - iu * fv);
            out.fzb.at(i, j) = 0.5 * (fu + iu * fv);
        }
    }
    return out;
}

namespace {

// 4th-order first derivative along one index with one-sided ends.
template <typename Get>
cx d1_line(Get&& f, int k, int n, double h) {
    if (k >= 2 && k <= n - 3)
        return (-f(k + 2) + 8.0 * f(k + 1) - 8.0 * f(k - 1) + f(k - 2)) / (12.0 * h);
    if (k == 0)
        return (-25.0 * f(0) + 48.0 * f(1) - 36.0 * f(2) + 16.0 * f(3) - 3.0 * f(4)) /
               (12.0 * h);
    if (k == 1)
        return (-3.0 * f(0) - 10.0 * f(1) + 18.0 * f(2) - 6.0 * f(3) + f(4)) / (12.0 * h);
    if (k == n - 2)
        return (3.0 * f(n - 1) + 10.0 * f(n - 2) - 18.0 * f(n - 3) + 6.0 * f(n - 4) -
                f(n - 5)) / (12.0 * h);
    return (25.0 * f(n - 1) - 48.0 * f(n - 2) + 36.0 * f(n - 3) - 16.0 * f(n - 4) +
            3.0 * f(n - 5)) / (12.0 * h);
}

}  // namespace

WirtingerPair wirtinger_extended(const CxGrid& f) {
    const GridShape& s = f.shape;
    if (s.nu < 5 || s.nv < 5) throw std::invalid_argument("wirtinger_extended: grid too small");
    WirtingerPair out{CxGrid(s), CxGrid(s), 0};
    for (int j = 0; j < s.nv; ++j) {
        for (int i = 0; i < s.nu; ++i) {
            const cx fu = d1_line([&](int k) { return f.at(k, j); }, i, s.nu, s.hu());
            const cx fv = d1_line([&](int k) { return f.at(i, k); }, j, s.nv, s.hv());
            out.fz.at(i, j) = 0.5 * (fu - iu * fv);
            out.fzb.at(i, j) = 0.5 * (fu + iu * fv);
        }
    }
    return out;
}

CxGrid mixed_second(const CxGrid& f) {
    const GridShape& s = f.shape;
    if (s.nu < 3 || s.nv < 3) throw std::invalid_argument("mixed_second: grid too small");
    CxGrid out(s);
    const double hu2 = s.hu() * s.hu();
    const double hv2 = s.hv() * s.hv();
    for (int j = 1; j < s.nv - 1; ++j) {
        for (int i = 1; i < s.nu - 1; ++i) {
            const cx fuu = (f.at(i + 1, j) - 2.0 * f.at(i, j) + f.at(i - 1, j)) / hu2;
            const cx fvv = (f.at(i, j + 1) - 2.0 * f.at(i, j) + f.at(i, j - 1)) / hv2;
            out.at(i, j) = 0.25 * (fuu + fvv);
        }
    }
    return out;
}

CxGrid to_complex(const RealGrid& f) {
    CxGrid out(f.shape);
    for (std::size_t k = 0; k < f.data.size(); ++k) out.data[k] = f.data[k];
    return out;
}

}  // namespace cmcgk::grid
