/**
 * @file energy.hpp
 * @brief Faddeev-Skyrme functionals for maps and potentials, the Lie-group
 *        Skyrme functional, the S^2 cross-product and symplectic variants,
 *        and the exact gradient of the discrete map energy.
 *
 * Coefficients are 1/2 on the quadratic and 1/4 on the quartic term; a
 * single skyrme_weight scalar multiplies the quartic term (default 1).
 */

#ifndef FSKYRME_ENERGY_HPP
#define FSKYRME_ENERGY_HPP

#include "fskyrme/coset.hpp"
#include "fskyrme/field.hpp"

#include <optional>
#include <vector>

namespace fskyrme {

struct EnergyReport {
    double dirichlet = 0;               // 1/2 integral |.|^2
    double skyrme = 0;                  // weight/4 integral |. ^ .|^2
    std::optional<double> yang_mills;   // 1/2 integral |F(a_par)|^2 when requested
    double total = 0;
    std::vector<double> density;        // pointwise e(psi); integrates to total
};

/// E(psi) = int 1/2 |psi*omega|^2 + w/4 |psi*omega ^ psi*omega|^2.
EnergyReport energy_map(const FieldMap& psi, double skyrme_weight = 1.0);

/// E_phi(a) = int 1/2 |D_phi a|^2 + w/4 |D_phi a ^ D_phi a|^2, optionally
/// augmented by the Yang-Mills term 1/2 |F(a_par)|^2.
EnergyReport energy_potential(const GForm& a, const ProjectorField& proj,
                              double skyrme_weight = 1.0, bool include_yang_mills = false);

/// int 1/2 |du|^2 + w/4 |u^-1 du ^ u^-1 du|^2; per-site equal to energy_map.
EnergyReport skyrme_group(const FieldMap& u, double skyrme_weight = 1.0);

/// Cross-product form: int 1/2 |dpsi|^2 + w/4 |dpsi x dpsi|^2.
EnergyReport faddeev_s2(const FieldMap& psi, double skyrme_weight = 1.0);

/// Symplectic variant: int 1/2 |dpsi|^2 + w/4 |psi*Omega|^2.
double faddeev_symplectic(const FieldMap& psi, double skyrme_weight = 1.0);

/// Exact partial derivatives of the discrete map energy with respect to each
/// site value, projected to the tangent space of the target at that site.
/// In FixedBoundary mode the gradient on clamped boundary sites is zero.
std::vector<Quat> gradient(const FieldMap& psi, double skyrme_weight = 1.0);

/// Pointwise-normalized retraction psi -> normalize(psi + step).
FieldMap retract(const FieldMap& psi, const std::vector<Quat>& step);

struct AdmissibilityNorms {
    double aperp_l2 = 0;       // ||a_perp||_L2
    double aperp_wedge_l2 = 0; // ||a_perp ^ a_perp||_L2
    double apar_l2 = 0;        // ||a_par||_L2
    double dapar_l2 = 0;       // ||d a_par||_L2  (W^{1,2} part)
};

/// Finite-energy / admissibility diagnostics of a potential.
AdmissibilityNorms admissibility_norms(const GForm& a, const ProjectorField& proj);

} // namespace fskyrme

#endif
