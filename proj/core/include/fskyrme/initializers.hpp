/**
 * @file initializers.hpp
 * @brief Initial-condition generators: hedgehog ansatz, its Hopf projection,
 *        torus wraps, band-limited random fields and constants.
 */

#ifndef FSKYRME_INITIALIZERS_HPP
#define FSKYRME_INITIALIZERS_HPP

#include "fskyrme/field.hpp"

#include <cstdint>

namespace fskyrme {

/// Constant map: identity for SU(2), the base point i for S^2.
FieldMap constant_field(const Grid3& grid, Target target);

/// Hedgehog u = cos f(r) + sin f(r) x_hat . (i,j,k) centered in the box,
/// with linear profile f(r) = k pi max(0, 1 - r/R), R half the box.
FieldMap hedgehog(const Grid3& grid, int profile_scale);

/// psi = Ad(u) i for the k-hedgehog u; carries Hopf number k.
FieldMap hopf_projection(const Grid3& grid, int profile_scale);

/// Degree-w wrap of the (axis_a, axis_b) coordinate 2-torus, constant along
/// the remaining axis: a planar hedgehog profile around the cell center.
FieldMap torus_wrap(const Grid3& grid, int axis_a, int axis_b, int winding);

/// Band-limited random field retracted to the target; correlation_length
/// sets the highest mode, the seed fixes everything else.
FieldMap random_smooth(const Grid3& grid, Target target, std::uint64_t seed,
                       double correlation_length);

} // namespace fskyrme

#endif
