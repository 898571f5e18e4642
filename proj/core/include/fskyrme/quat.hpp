/**
 * @file quat.hpp
 * @brief SU(2) as unit quaternions, su(2) as imaginary quaternions.
 *
 * Group elements q = w + xi + yj + zk with |q| = 1, algebra elements
 * with w = 0.  The bi-invariant inner product on su(2) is the Euclidean
 * dot on (x,y,z); the matrix trace form tr(xi*eta) of the 2x2 model
 * equals -2<xi,eta> under this identification (see trace_pair below).
 */

#ifndef FSKYRME_QUAT_HPP
#define FSKYRME_QUAT_HPP

#include "fskyrme/errors.hpp"

#include <cmath>

namespace fskyrme {

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3() = default;
    Vec3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {}

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator-() const { return {-x, -y, -z}; }
    Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }
    Vec3& operator-=(const Vec3& o) { x -= o.x; y -= o.y; z -= o.z; return *this; }
    Vec3& operator*=(double s) { x *= s; y *= s; z *= s; return *this; }

    double norm_sq() const { return x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }
};

inline Vec3 operator*(double s, const Vec3& v) { return v * s; }

inline double inner(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

/// Lie bracket [xi,eta] = xi*eta - eta*xi; equals 2(xi x eta) in Im H.
inline Vec3 bracket(const Vec3& a, const Vec3& b) { return 2.0 * cross(a, b); }

/// -2<xi,eta>: what tr(xi*eta) of the 2x2 matrix model evaluates to.
inline double trace_pair(const Vec3& a, const Vec3& b) { return -2.0 * inner(a, b); }

struct Quat {
    double w = 1.0, x = 0.0, y = 0.0, z = 0.0;

    Quat() = default;
    Quat(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}
    explicit Quat(const Vec3& v) : w(0.0), x(v.x), y(v.y), z(v.z) {}

    Quat operator+(const Quat& o) const { return {w + o.w, x + o.x, y + o.y, z + o.z}; }
    Quat operator-(const Quat& o) const { return {w - o.w, x - o.x, y - o.y, z - o.z}; }
    Quat operator-() const { return {-w, -x, -y, -z}; }
    Quat operator*(double s) const { return {w * s, x * s, y * s, z * s}; }
    Quat& operator+=(const Quat& o) { w += o.w; x += o.x; y += o.y; z += o.z; return *this; }
    Quat& operator-=(const Quat& o) { w -= o.w; x -= o.x; y -= o.y; z -= o.z; return *this; }
    Quat& operator*=(double s) { w *= s; x *= s; y *= s; z *= s; return *this; }

    double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    Quat conj() const { return {w, -x, -y, -z}; }
    Vec3 imag() const { return {x, y, z}; }

    Quat normalized() const {
        double s = 1.0 / norm();
        return {w * s, x * s, y * s, z * s};
    }
};

inline Quat operator*(double s, const Quat& q) { return q * s; }

/// Hamilton product.
inline Quat mul(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
            a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
            a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

inline Quat operator*(const Quat& a, const Quat& b) { return mul(a, b); }

inline double inner4(const Quat& a, const Quat& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// 2*Re(q): matrix trace of the 2x2 representation.
inline double trace(const Quat& q) { return 2.0 * q.w; }

/// Inverse of a unit quaternion.
inline Quat unit_inverse(const Quat& q) { return q.conj(); }

/// Ad(q) xi = q xi q^-1 for unit q; an isometry of Im H.
inline Vec3 ad_rotate(const Quat& q, const Vec3& xi) {
    return mul(mul(q, Quat(xi)), q.conj()).imag();
}

/// exp(xi) = cos|xi| + sin|xi| xi/|xi|.
inline Quat exp_su2(const Vec3& xi) {
    double t = xi.norm();
    double c = std::cos(t);
    // sin(t)/t, series for small t
    double s = (t < 1e-8) ? 1.0 - t * t / 6.0 : std::sin(t) / t;
    return {c, s * xi.x, s * xi.y, s * xi.z};
}

/// Principal log on SU(2) \ {-1}; inverse of exp_su2 for |xi| < pi.
inline Vec3 log_su2(const Quat& q) {
    double vn = q.imag().norm();
    if (vn < 1e-14 && q.w < 0.0)
        throw Error(Error::Kind::AntipodeSingular, "log_su2: argument at the antipode -1");
    double theta = std::atan2(vn, q.w);
    double s = (theta < 1e-8) ? 1.0 / q.norm() : theta / vn;
    return {s * q.x, s * q.y, s * q.z};
}

struct IsotropyParts {
    Vec3 par;  // component in h_phi = R*phi
    Vec3 perp; // component in the tangent plane h_phi^perp
};

/// Split xi = <xi,phi> phi + (xi - <xi,phi> phi) relative to a unit phi.
/// The perp part equals 1/2 phi [xi, phi]; the sum is exact by construction.
inline IsotropyParts proj_isotropy(const Vec3& xi, const Vec3& phi) {
    if (std::abs(phi.norm() - 1.0) > 1e-9)
        throw Error(Error::Kind::InvalidBasePoint, "proj_isotropy: base direction is not unit");
    Vec3 par = inner(xi, phi) * phi;
    return {par, xi - par};
}

/// Tangential part of v at unit direction p (projection off the p-axis).
inline Vec3 tangent_project(const Vec3& v, const Vec3& p) { return v - inner(v, p) * p; }

inline Quat tangent_project4(const Quat& v, const Quat& p) {
    double c = inner4(v, p);
    return {v.w - c * p.w, v.x - c * p.x, v.y - c * p.y, v.z - c * p.z};
}

} // namespace fskyrme

#endif
