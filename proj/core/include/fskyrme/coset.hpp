/**
 * @file coset.hpp
 * @brief Gauge calculus on coset bundles: coisotropy pullbacks, isotropy
 *        decomposition, the covariant combination D_phi, gauge actions and
 *        the curvature formula, plus the flat-potential identity residuals.
 *
 * Conventions: for SU(2)-valued u the pure-gauge potential is u^-1 du and
 * the coisotropy pullback is du u^-1; for S^2-valued psi the pullback is
 * 1/2 psi dpsi.  All differences are tangent-projected (equivalently, the
 * real residue of the quaternion product is discarded); the L2 size of the
 * discarded residue is reported where the spec of the operation asks for it.
 */

#ifndef FSKYRME_COSET_HPP
#define FSKYRME_COSET_HPP

#include "fskyrme/field.hpp"
#include "fskyrme/gform.hpp"

namespace fskyrme {

/// psi* omega_perp as a g-valued 1-form.
GForm pullback_coisotropy(const FieldMap& psi);

struct PureGaugePotential {
    GForm form;                 // u^-1 du, algebra-valued
    double real_residue_l2 = 0; // L2 norm of the discarded real residue (O(h) diagnostic)
};

PureGaugePotential pure_gauge_potential(const FieldMap& u);

struct IsotropySplit {
    GForm par;
    GForm perp;
};

/// a = a_par + a_perp relative to h_phi; the sum is exact by construction.
IsotropySplit isotropy_decompose(const GForm& a, const ProjectorField& proj);

/// D_phi a = phi* omega_perp + a_perp.
GForm d_phi(const GForm& a, const ProjectorField& proj);

/// a^w = Ad(w^-1) a + w^-1 dw (full gauge group of the trivial bundle).
GForm gauge_transform(const GForm& a, const FieldMap& w);

/// Gauge action of a stabilizer section on a coset-bundle potential:
///   b^w = Ad(w^-1) b + w^-1 dw - (Ad(w^-1) - I) phi* omega_perp.
/// Each w(x) must lie in the isotropy subgroup of phi(x) (NotInStabilizer).
GForm gauge_action_isotropic(const GForm& b, const FieldMap& w, const ProjectorField& proj);

struct CurvatureResult {
    GForm form;                    // F(b) projected to h_phi
    GForm raw;                     // the unprojected formula value
    double off_projection_l2 = 0;  // L2 norm of the part projected away
};

/// F(b) = db + b^b - [b, phi*omega] - (phi*omega ^ phi*omega)_par.
CurvatureResult curvature(const GForm& b, const ProjectorField& proj);

struct FlatPotentialResiduals {
    double curvature_identity = 0;       // F(a_par) vs dPhi^a_perp - Phi(a_perp^a_perp) - Phi(w^w)
    double dperp_identity = 0;           // da_perp vs its four-term expansion
    double wedge_derivative_identity = 0;// d(a_perp^a_perp) vs the symmetric-space form
    double offalgebra_wedge = 0;         // ||(I-Phi)(a_perp ^ a_perp)||, zero on S^2
};

/// L2 residuals of the flat-potential identities for a pure-gauge a.
FlatPotentialResiduals flat_curvature_identity(const GForm& a, const ProjectorField& proj);

/// Ad_*(w^-1) applied pointwise to every component of a form.
GForm ad_apply_inverse(const FieldMap& w, const GForm& alpha);

} // namespace fskyrme

#endif
