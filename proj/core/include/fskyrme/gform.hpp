/**
 * @file gform.hpp
 * @brief Quaternion-valued discrete k-forms on a Grid3.
 *
 * Component layout:
 *   k=0,3 : one component per site
 *   k=1   : three components, one per axis (dx^a)
 *   k=2   : three components indexed by the dual axis p, storing the
 *           coefficient on the (p+1, p+2) plane (cyclic mod 3)
 *
 * Lie-algebra-valued forms keep the real part w = 0; wedge products of
 * distinct forms may acquire real parts, which are stored and left to the
 * caller's contract (commutators are algebra-valued identically).
 *
 * d is the forward finite difference; in FixedBoundary mode the top face
 * uses the one-sided backward stencil.  All operations are collocated
 * (same-site products).
 */

#ifndef FSKYRME_GFORM_HPP
#define FSKYRME_GFORM_HPP

#include "fskyrme/grid.hpp"
#include "fskyrme/quat.hpp"

#include <vector>

namespace fskyrme {

class GForm {
public:
    GForm() = default;
    GForm(const Grid3& grid, int degree);

    int degree() const { return degree_; }
    const Grid3& grid() const { return grid_; }
    int ncomp() const { return degree_ == 0 || degree_ == 3 ? 1 : 3; }

    Quat& at(int comp, std::int64_t site) { return comps_[std::size_t(comp) * nsites_ + site]; }
    const Quat& at(int comp, std::int64_t site) const {
        return comps_[std::size_t(comp) * nsites_ + site];
    }

    GForm& operator+=(const GForm& o);
    GForm& operator-=(const GForm& o);
    GForm& operator*=(double s);

    bool all_finite() const;

    /// Largest |w| over all stored values; zero for algebra-valued forms.
    double max_real_part() const;

    /// Drop real parts in place (projection to Im H).
    void project_to_algebra();

private:
    int degree_ = 0;
    Grid3 grid_;
    std::size_t nsites_ = 0;
    std::vector<Quat> comps_;
};

GForm operator+(GForm a, const GForm& b);
GForm operator-(GForm a, const GForm& b);
GForm operator*(GForm a, double s);

/// Discrete exterior derivative (degree k -> k+1); k=3 signals DegreeOverflow.
GForm d(const GForm& alpha);

/// Collocated wedge product; k+l > 3 signals DegreeOverflow.
GForm wedge(const GForm& alpha, const GForm& beta);

/// Graded commutator [alpha, beta]; same degree bookkeeping as wedge.
GForm commutator(const GForm& alpha, const GForm& beta);

/// |alpha|^2(x) = sum over components of the full quaternion norm.
std::vector<double> norm_sq_pointwise(const GForm& alpha);

/// Riemann sum: sum_x f(x) h^3, with a fixed slab-ordered reduction.
double integrate(const std::vector<double>& f, const Grid3& grid);

/// sqrt(integrate(|alpha|^2)): the L2 size used by the residual suites.
double l2_norm(const GForm& alpha);

/// integrate(|alpha|): L1 size of a scalar density.
double l1_norm(const std::vector<double>& f, const Grid3& grid);

/// Pointwise sup over sites of sqrt(|alpha|^2(x)).
double sup_norm(const GForm& alpha);

} // namespace fskyrme

#endif
