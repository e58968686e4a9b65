#pragma once

#include <cmath>
#include <complex>
#include <limits>

namespace cmcgk {

using cx = std::complex<double>;

inline constexpr cx iu{0.0, 1.0};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(dot(*this)); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

// X_z and friends: complex components in the frame (V1,V2,V3).
struct CxVec3 {
    cx x{}, y{}, z{};
};

// A point of the Riemann sphere: finite value or the point at infinity.
struct ExtComplex {
    cx v{};
    bool inf = false;

    ExtComplex() = default;
    ExtComplex(cx z) : v(z) {}
    ExtComplex(double re) : v(re) {}
    static ExtComplex infinity() { return {cx{}, true}; }

    double abs() const { return inf ? std::numeric_limits<double>::infinity() : std::abs(v); }

private:
    ExtComplex(cx z, bool i) : v(z), inf(i) {}
};

// Quotient of homogeneous coordinates [num : den].
inline ExtComplex ext_div(cx num, cx den) {
    const double dn = std::abs(den);
    if (dn == 0.0 || std::abs(num) > dn * 1e300) return ExtComplex::infinity();
    return ExtComplex(num / den);
}

inline ExtComplex ext_inv(const ExtComplex& w) {
    if (w.inf) return ExtComplex(cx{0.0, 0.0});
    return ext_div(cx{1.0, 0.0}, w.v);
}

// Chordal metric on the sphere; bounded by 2, insensitive to poles.
inline double chordal(const ExtComplex& a, const ExtComplex& b) {
    if (a.inf && b.inf) return 0.0;
    if (a.inf || b.inf) {
        const cx w = a.inf ? b.v : a.v;
        return 2.0 / std::sqrt(1.0 + std::norm(w));
    }
    return 2.0 * std::abs(a.v - b.v) /
           std::sqrt((1.0 + std::norm(a.v)) * (1.0 + std::norm(b.v)));
}

}  // namespace cmcgk
