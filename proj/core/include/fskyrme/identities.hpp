/**
 * @file identities.hpp
 * @brief The gauge-calculus verification suites: pointwise algebraic
 *        identities checked at fixed tolerance, and mixed (d-and-wedge)
 *        identities checked as refinement-convergence between two grids.
 *
 * Shared by the `identities` / `convergence` CLI subcommands and the
 * acceptance tests.
 */

#ifndef FSKYRME_IDENTITIES_HPP
#define FSKYRME_IDENTITIES_HPP

#include "fskyrme/coset.hpp"
#include "fskyrme/energy.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace fskyrme {

struct CheckRow {
    std::string name;
    double residual = 0;   // max over sampled fields
    double tolerance = 0;
    bool pass = false;
};

struct OrderRow {
    std::string name;
    double coarse = 0;     // residual at n
    double fine = 0;       // residual at 2n
    double ratio = 0;      // coarse / fine
    double order = 0;      // log2(ratio)
    bool pass = false;     // ratio >= 1.8, or both residuals at rounding level
};

/// Pointwise algebraic identities on `nfields` random smooth fields at size n;
/// every row carries a 1e-12 tolerance.
std::vector<CheckRow> algebraic_identity_suite(int n, int nfields, std::uint64_t seed);

/// Mixed identities on analytic test fields at sizes n and 2n.
std::vector<OrderRow> convergence_identity_suite(int n);

/// Random smooth algebra-valued k-form (band-limited, seeded).
GForm random_smooth_form(const Grid3& grid, int degree, std::uint64_t seed);

/// Deterministic analytic fields used by the convergence rows.
FieldMap analytic_su2_field(const Grid3& grid);
FieldMap analytic_s2_reference(const Grid3& grid);
std::vector<double> analytic_stabilizer_angle(const Grid3& grid);

bool all_pass(const std::vector<CheckRow>& rows);
bool all_pass(const std::vector<OrderRow>& rows);

} // namespace fskyrme

#endif
