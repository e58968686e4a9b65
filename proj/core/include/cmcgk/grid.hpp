#pragma once

#include <cstddef>
#include <vector>

#include "cmcgk/types.hpp"

namespace cmcgk::grid {

// Rectangle [u0,u1] x [v0,v1] in the conformal parameter z = u + iv, sampled
// at nu x nv nodes including the endpoints.  Storage is row-major over v:
// node (i,j) = (u_i, v_j) lives at index j*nu + i.
struct GridShape {
    double u0 = -1.0, u1 = 1.0, v0 = -1.0, v1 = 1.0;
    int nu = 0, nv = 0;

    double hu() const { return (u1 - u0) / (nu - 1); }
    double hv() const { return (v1 - v0) / (nv - 1); }
    cx node(int i, int j) const { return {u0 + i * hu(), v0 + j * hv()}; }
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(j) * nu + i;
    }
    std::size_t size() const { return static_cast<std::size_t>(nu) * nv; }
    bool operator==(const GridShape&) const = default;

    static GridShape centered(cx center, double half_width, double half_height, int nu, int nv);
};

template <typename T>
struct Grid {
    GridShape shape;
    std::vector<T> data;

    Grid() = default;
    explicit Grid(const GridShape& s, T fill = T{}) : shape(s), data(s.size(), fill) {}

    T& at(int i, int j) { return data[shape.index(i, j)]; }
    const T& at(int i, int j) const { return data[shape.index(i, j)]; }
};

using CxGrid = Grid<cx>;
using RealGrid = Grid<double>;

template <typename F>
CxGrid sample(const GridShape& s, F&& f) {
    CxGrid g(s);
    for (int j = 0; j < s.nv; ++j)
        for (int i = 0; i < s.nu; ++i) g.at(i, j) = f(s.node(i, j));
    return g;
}

// 4th-order central Wirtinger derivatives f_z = (f_u - i f_v)/2,
// f_zb = (f_u + i f_v)/2; valid on the margin-2 interior (exact on
// polynomials of degree <= 3 in u,v).
struct WirtingerPair {
    CxGrid fz, fzb;
    int margin = 2;
};
WirtingerPair wirtinger(const CxGrid& f);

// Full-coverage variant: central stencils in the interior, 4th-order
// one-sided stencils on the outer two rings (margin 0).  Used where the
// integration sweeps must reach the boundary nodes.
WirtingerPair wirtinger_extended(const CxGrid& f);

// f_{z zbar} = (f_uu + f_vv)/4 by 3-point second differences; margin 1.
CxGrid mixed_second(const CxGrid& f);

CxGrid to_complex(const RealGrid& f);

}  // namespace cmcgk::grid
