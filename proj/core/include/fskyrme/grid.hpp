/**
 * @file grid.hpp
 * @brief Periodic (or boundary-clamped) N^3 grid standing in for a closed
 *        3-manifold.
 *
 * Sites are indexed x1-fastest, x3-slowest.  Periodic mode is the 3-torus;
 * FixedBoundary clamps the outermost shell of sites to a constant, which
 * emulates one-point compactification for fields constant at infinity.
 */

#ifndef FSKYRME_GRID_HPP
#define FSKYRME_GRID_HPP

#include "fskyrme/errors.hpp"

#include <array>
#include <cstdint>
#include <string>

namespace fskyrme {

enum class BoundaryMode { Periodic, FixedBoundary };

inline std::string to_string(BoundaryMode m) {
    return m == BoundaryMode::Periodic ? "periodic" : "fixed";
}

struct Grid3 {
    int n = 0;                 // sites per axis, >= 4
    double box_length = 1.0;   // physical edge length L
    BoundaryMode mode = BoundaryMode::Periodic;

    Grid3() = default;
    Grid3(int n_, double box_length_, BoundaryMode mode_)
        : n(n_), box_length(box_length_), mode(mode_) {
        if (n < 4) throw Error(Error::Kind::InvalidValue, "Grid3: n must be >= 4");
        if (!(box_length > 0.0)) throw Error(Error::Kind::InvalidValue, "Grid3: box_length must be > 0");
    }

    double h() const { return box_length / n; }
    std::int64_t sites() const { return std::int64_t(n) * n * n; }

    std::int64_t index(int i, int j, int k) const {
        return (std::int64_t(k) * n + j) * n + i;
    }

    std::array<int, 3> coords(std::int64_t s) const {
        int i = int(s % n);
        int j = int((s / n) % n);
        int k = int(s / (std::int64_t(n) * n));
        return {i, j, k};
    }

    /// Neighbor one step along axis (0,1,2); wraps in Periodic mode.
    /// In FixedBoundary mode callers must handle the top face themselves
    /// (has_forward tells whether the step stays on the grid).
    std::int64_t forward(std::int64_t s, int axis) const {
        auto c = coords(s);
        c[axis] = (c[axis] + 1 == n) ? 0 : c[axis] + 1;
        return index(c[0], c[1], c[2]);
    }

    std::int64_t backward(std::int64_t s, int axis) const {
        auto c = coords(s);
        c[axis] = (c[axis] == 0) ? n - 1 : c[axis] - 1;
        return index(c[0], c[1], c[2]);
    }

    bool has_forward(std::int64_t s, int axis) const {
        return mode == BoundaryMode::Periodic || coords(s)[axis] + 1 < n;
    }

    bool is_boundary(std::int64_t s) const {
        if (mode == BoundaryMode::Periodic) return false;
        auto c = coords(s);
        return c[0] == 0 || c[0] == n - 1 || c[1] == 0 || c[1] == n - 1 || c[2] == 0 ||
               c[2] == n - 1;
    }

    /// Physical coordinate of a site along one axis.
    double coord(int i) const { return h() * i; }

    bool same_layout(const Grid3& o) const {
        return n == o.n && box_length == o.box_length && mode == o.mode;
    }
};

} // namespace fskyrme

#endif
