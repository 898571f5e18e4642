/**
 * @file topology.hpp
 * @brief Topological invariants: degree of SU(2) maps via the normalized
 *        Cartan 3-form, 2-cycle flux integers of S^2 maps, and the Hopf /
 *        Chern-Simons secondary invariant (Poisson-gauge and lift routes).
 *
 * The normalization constants are calibrated once against the degree-1
 * hedgehog and its Hopf projection and then frozen (see constants below).
 */

#ifndef FSKYRME_TOPOLOGY_HPP
#define FSKYRME_TOPOLOGY_HPP

#include "fskyrme/coset.hpp"
#include "fskyrme/field.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace fskyrme {

// Frozen calibration constants.  The magnitude 1/(24 pi^2) is the standard
// normalization of the Cartan 3-form for SU(2) in the quaternion trace
// convention tr(q) = 2 Re(q); the signs make the k=1 hedgehog (profile
// pi -> 0 outward) and its Hopf projection evaluate to +1 on this grid
// orientation.
inline constexpr double kCartanNormalization = 1.0 / (24.0 * M_PI * M_PI);
inline constexpr double kHopfNormalization = 1.0 / (16.0 * M_PI * M_PI);

/// Degree of an SU(2)-valued map: integral of c_G tr(a^a^a), a = u^-1 du.
double degree_su2(const FieldMap& u);

/// |deg(u v) - deg(u) - deg(v)|.
double additivity_check(const FieldMap& u, const FieldMap& v);

/// Fluxes of psi* (area form)/4pi through the three coordinate 2-torus
/// families, averaged over parallel slices.  Zero by construction in
/// FixedBoundary mode.
std::array<double, 3> primary_fluxes(const FieldMap& psi);

/// Per-slice flux values for one family (slices orthogonal to `axis`).
std::vector<double> primary_flux_slices(const FieldMap& psi, int axis);

/// Hopf number by the Poisson-gauge route: solve dA = psi*Omega spectrally
/// in Coulomb gauge and integrate A ^ F.  Requires all primary fluxes
/// below 0.1 in magnitude (NonzeroPrimaryFlux otherwise).
double hopf_invariant(const FieldMap& psi);

/// Explicit lift u with Ad(u) i = psi; defined away from the antipode -i
/// (AntipodeHit names the first offending site).
FieldMap lift_through_hopf(const FieldMap& psi);

struct CsDecomposition {
    double total = 0;                  // integral of c_G times the four-term sum
    std::array<double, 4> terms{};     // the four integrals, with binomial factors
    std::array<double, 4> term_l1{};   // L1 norms of the four densities
};

/// tr(a^a^a) expanded into the par/perp binomial terms relative to phi.
CsDecomposition secondary_cs_decomposed(const GForm& a, const ProjectorField& proj);

enum class HopfMethod { PoissonGauge, LiftCS };

inline std::string to_string(HopfMethod m) {
    return m == HopfMethod::PoissonGauge ? "poisson_gauge" : "lift_cs";
}

struct InvariantReport {
    std::optional<double> degree;      // SU(2) targets
    int degree_rounded = 0;
    std::array<double, 3> fluxes{};    // S^2 targets on periodic grids
    std::array<int, 3> fluxes_rounded{};
    std::optional<double> hopf;        // S^2 targets with vanishing fluxes
    int hopf_rounded = 0;
    HopfMethod method = HopfMethod::PoissonGauge;
    double drift = 0;                  // max |raw - rounded|
    bool trusted = false;              // drift < 0.5
};

/// Compute every invariant that applies to the map's target.
InvariantReport invariant_report(const FieldMap& f, HopfMethod method = HopfMethod::PoissonGauge);

struct SectorLabel {
    std::array<int, 3> fluxes{};
    std::optional<int> secondary;     // present only when all fluxes vanish
};

SectorLabel sector_label(const InvariantReport& rep);

} // namespace fskyrme

#endif
