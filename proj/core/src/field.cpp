#include "fskyrme/field.hpp"

#include <cmath>

namespace fskyrme {

FieldMap::FieldMap(const Grid3& g, Target t, const Quat& fill)
    : grid(g), target(t), values(std::size_t(g.sites()), fill) {}

double FieldMap::membership_error() const {
    double worst = 0.0;
    for (const auto& q : values) {
        double e = std::abs(q.norm() - 1.0);
        if (target == Target::SphereS2) e = std::max(e, std::abs(q.w));
        worst = std::max(worst, e);
    }
    return worst;
}

void FieldMap::assert_valid(double tol) const {
    if (membership_error() > tol)
        throw Error(Error::Kind::InvalidValue, "FieldMap: values leave the target manifold");
}

void FieldMap::renormalize() {
    if (target == Target::SphereS2) {
        for (auto& q : values) {
            q.w = 0.0;
            q = q.normalized();
        }
    } else {
        for (auto& q : values) q = q.normalized();
    }
}

FieldMap pointwise_product(const FieldMap& u, const FieldMap& v) {
    FieldMap out = u;
    for (std::size_t s = 0; s < out.values.size(); ++s)
        out.values[s] = mul(u.values[s], v.values[s]);
    return out;
}

FieldMap ad_conjugate(const Quat& g, const FieldMap& psi) {
    FieldMap out = psi;
    Quat gi = unit_inverse(g);
    for (auto& q : out.values) q = mul(mul(g, q), gi);
    return out;
}

FieldMap cyclic_shift(const FieldMap& psi, int axis, int cells) {
    const Grid3& g = psi.grid;
    FieldMap out = psi;
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        auto c = g.coords(s);
        c[axis] = ((c[axis] + cells) % g.n + g.n) % g.n;
        out.values[std::size_t(g.index(c[0], c[1], c[2]))] = psi.values[std::size_t(s)];
    }
    return out;
}

FieldMap axis_reflect(const FieldMap& psi, int axis) {
    const Grid3& g = psi.grid;
    FieldMap out = psi;
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        auto c = g.coords(s);
        c[axis] = g.n - 1 - c[axis];
        out.values[std::size_t(g.index(c[0], c[1], c[2]))] = psi.values[std::size_t(s)];
    }
    return out;
}

ProjectorField::ProjectorField(const FieldMap& phi_map) : grid_(phi_map.grid) {
    if (phi_map.target != Target::SphereS2)
        throw Error(Error::Kind::InvalidBasePoint,
                    "ProjectorField: reference map must be S^2-valued");
    phi_.resize(std::size_t(grid_.sites()));
    for (std::int64_t s = 0; s < grid_.sites(); ++s) {
        const Quat& q = phi_map.at(s);
        if (std::abs(q.norm() - 1.0) > 1e-9 || std::abs(q.w) > 1e-9)
            throw Error(Error::Kind::InvalidBasePoint,
                        "ProjectorField: reference values must be unit imaginary");
        phi_[std::size_t(s)] = q.imag();
    }
}

GForm ProjectorField::apply(const GForm& alpha) const {
    GForm out(alpha.grid(), alpha.degree());
    for (std::int64_t s = 0; s < grid_.sites(); ++s)
        for (int c = 0; c < alpha.ncomp(); ++c)
            out.at(c, s) = Quat(par(s, alpha.at(c, s).imag()));
    return out;
}

GForm ProjectorField::apply_perp(const GForm& alpha) const {
    GForm out(alpha.grid(), alpha.degree());
    for (std::int64_t s = 0; s < grid_.sites(); ++s)
        for (int c = 0; c < alpha.ncomp(); ++c)
            out.at(c, s) = Quat(perp(s, alpha.at(c, s).imag()));
    return out;
}

namespace {

// (dPhi)_a(xi) at site s: difference of the projector along axis a applied
// to the same xi; one-sided at the top face like d.
inline Vec3 dphi_apply(const ProjectorField& P, std::int64_t s, int axis, double inv_h,
                       const Vec3& xi) {
    const Grid3& g = P.grid();
    if (g.has_forward(s, axis)) {
        std::int64_t t = g.forward(s, axis);
        return (P.par(t, xi) - P.par(s, xi)) * inv_h;
    }
    std::int64_t t = g.backward(s, axis);
    return (P.par(s, xi) - P.par(t, xi)) * inv_h;
}

} // namespace

GForm ProjectorField::d_wedge(const GForm& alpha) const {
    const int k = alpha.degree();
    if (k >= 3) throw Error(Error::Kind::DegreeOverflow, "d_wedge: degree k+1 exceeds 3");
    const double inv_h = 1.0 / grid_.h();
    GForm out(grid_, k + 1);
    for (std::int64_t s = 0; s < grid_.sites(); ++s) {
        if (k == 0) {
            Vec3 xi = alpha.at(0, s).imag();
            for (int a = 0; a < 3; ++a) out.at(a, s) = Quat(dphi_apply(*this, s, a, inv_h, xi));
        } else if (k == 1) {
            for (int p = 0; p < 3; ++p) {
                int a = (p + 1) % 3, b = (p + 2) % 3;
                Vec3 v = dphi_apply(*this, s, a, inv_h, alpha.at(b, s).imag()) -
                         dphi_apply(*this, s, b, inv_h, alpha.at(a, s).imag());
                out.at(p, s) = Quat(v);
            }
        } else { // k == 2
            Vec3 acc;
            for (int p = 0; p < 3; ++p) acc += dphi_apply(*this, s, p, inv_h, alpha.at(p, s).imag());
            out.at(0, s) = Quat(acc);
        }
    }
    return out;
}

GForm ProjectorField::pullback() const {
    FieldMap phi = as_field_map();
    GForm out(grid_, 1);
    for (std::int64_t s = 0; s < grid_.sites(); ++s) {
        for (int a = 0; a < 3; ++a) {
            // omega_a = 1/2 phi * (tangential difference); imaginary exactly
            Quat w = mul(phi.at(s), phi.tangent_diff(s, a)) * 0.5;
            out.at(a, s) = Quat(w.imag());
        }
    }
    return out;
}

FieldMap ProjectorField::as_field_map() const {
    FieldMap out(grid_, Target::SphereS2, Quat(0.0, 1.0, 0.0, 0.0));
    for (std::int64_t s = 0; s < grid_.sites(); ++s) out.at(s) = Quat(phi_[std::size_t(s)]);
    return out;
}

} // namespace fskyrme
