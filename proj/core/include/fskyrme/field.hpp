/**
 * @file field.hpp
 * @brief Maps from the grid into SU(2) (unit quaternions) or S^2 (unit
 *        imaginary quaternions), and the isotropy projector field of an
 *        S^2 reference map.
 *
 * The lattice differential of a map is the tangent-projected forward
 * difference: projecting the raw difference onto the tangent space at the
 * site is the same thing as discarding the real residue of u^-1 du (or of
 * psi * dpsi), and it makes the pointwise algebraic identities between the
 * coisotropy, cross-product and symplectic forms hold to rounding rather
 * than to O(h).
 */

#ifndef FSKYRME_FIELD_HPP
#define FSKYRME_FIELD_HPP

#include "fskyrme/gform.hpp"
#include "fskyrme/grid.hpp"
#include "fskyrme/quat.hpp"

#include <string>
#include <vector>

namespace fskyrme {

enum class Target { GroupSU2, SphereS2 };

inline std::string to_string(Target t) { return t == Target::GroupSU2 ? "su2" : "s2"; }

struct FieldMap {
    Grid3 grid;
    Target target = Target::GroupSU2;
    std::vector<Quat> values;

    FieldMap() = default;
    FieldMap(const Grid3& g, Target t, const Quat& fill);

    Quat& at(std::int64_t s) { return values[std::size_t(s)]; }
    const Quat& at(std::int64_t s) const { return values[std::size_t(s)]; }

    /// Largest deviation from target membership (norm drift, and |w| for S^2).
    double membership_error() const;
    void assert_valid(double tol = 1e-9) const;

    /// Raw forward difference; zero across the outer face in FixedBoundary
    /// mode (the field continues as a constant).
    Quat fwd_diff(std::int64_t s, int axis) const {
        if (!grid.has_forward(s, axis)) return Quat(0.0, 0.0, 0.0, 0.0);
        return (values[std::size_t(grid.forward(s, axis))] - values[std::size_t(s)]) *
               (1.0 / grid.h());
    }

    /// Tangent-projected forward difference at the site.
    Quat tangent_diff(std::int64_t s, int axis) const {
        return tangent_project4(fwd_diff(s, axis), values[std::size_t(s)]);
    }

    /// Central difference, continuing the field as a constant past the
    /// outer faces in FixedBoundary mode.
    Quat central_diff(std::int64_t s, int axis) const {
        const Quat& fwd = grid.has_forward(s, axis) ? values[std::size_t(grid.forward(s, axis))]
                                                    : values[std::size_t(s)];
        bool has_back = grid.mode == BoundaryMode::Periodic || grid.coords(s)[axis] > 0;
        const Quat& bwd = has_back ? values[std::size_t(grid.backward(s, axis))]
                                   : values[std::size_t(s)];
        return (fwd - bwd) * (0.5 / grid.h());
    }

    Quat tangent_central_diff(std::int64_t s, int axis) const {
        return tangent_project4(central_diff(s, axis), values[std::size_t(s)]);
    }

    /// Divide every value by its norm (S^2 values stay imaginary).
    void renormalize();
};

/// Pointwise product map x -> u(x) v(x).
FieldMap pointwise_product(const FieldMap& u, const FieldMap& v);

/// Pointwise Ad(g): for S^2 maps this is the global rotation g psi g^-1.
FieldMap ad_conjugate(const Quat& g, const FieldMap& psi);

/// Cyclic shift by `cells` along `axis` (Periodic grids).
FieldMap cyclic_shift(const FieldMap& psi, int axis, int cells);

/// Mirror along one axis (orientation-reversing grid reflection).
FieldMap axis_reflect(const FieldMap& psi, int axis);

// Isotropy projector Phi = pr_{h_phi} of an S^2 reference map.
class ProjectorField {
public:
    ProjectorField() = default;
    explicit ProjectorField(const FieldMap& phi_map);

    const Grid3& grid() const { return grid_; }
    const Vec3& phi(std::int64_t s) const { return phi_[std::size_t(s)]; }

    Vec3 par(std::int64_t s, const Vec3& xi) const {
        const Vec3& p = phi_[std::size_t(s)];
        return inner(xi, p) * p;
    }
    Vec3 perp(std::int64_t s, const Vec3& xi) const { return xi - par(s, xi); }

    /// Componentwise parallel projection of a form.
    GForm apply(const GForm& alpha) const;
    /// Componentwise (I - Phi).
    GForm apply_perp(const GForm& alpha) const;

    /// dPhi wedge alpha, with dPhi the finite difference of the projector
    /// applied componentwise (degree of alpha can be 0, 1 or 2).
    GForm d_wedge(const GForm& alpha) const;

    /// Coisotropy pullback of the reference map itself (phi* omega_perp).
    GForm pullback() const;

    /// The reference map as a FieldMap (unit imaginary values).
    FieldMap as_field_map() const;

private:
    Grid3 grid_;
    std::vector<Vec3> phi_;
};

} // namespace fskyrme

#endif
