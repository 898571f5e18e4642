#include "fskyrme/initializers.hpp"

#include "fskyrme/rng.hpp"

#include <cmath>

namespace fskyrme {

FieldMap constant_field(const Grid3& grid, Target target) {
    Quat v = target == Target::GroupSU2 ? Quat(1.0, 0.0, 0.0, 0.0) : Quat(0.0, 1.0, 0.0, 0.0);
    return FieldMap(grid, target, v);
}

FieldMap hedgehog(const Grid3& grid, int profile_scale) {
    if (profile_scale == 0)
        throw Error(Error::Kind::InvalidValue, "hedgehog: profile_scale must be nonzero");
    FieldMap u(grid, Target::GroupSU2, Quat());
    const double h = grid.h();
    const double c = 0.5 * (grid.n - 1) * h; // box center
    const double R = c;                      // reaches the nearest face
    for (std::int64_t s = 0; s < grid.sites(); ++s) {
        auto ix = grid.coords(s);
        Vec3 x{ix[0] * h - c, ix[1] * h - c, ix[2] * h - c};
        double r = x.norm();
        double f = profile_scale * M_PI * std::max(0.0, 1.0 - r / R);
        Vec3 dir = r > 1e-14 ? x * (1.0 / r) : Vec3{0.0, 0.0, 1.0};
        double sf = std::sin(f);
        u.at(s) = Quat(std::cos(f), sf * dir.x, sf * dir.y, sf * dir.z);
    }
    u.renormalize();
    return u;
}

FieldMap hopf_projection(const Grid3& grid, int profile_scale) {
    FieldMap u = hedgehog(grid, profile_scale);
    FieldMap psi(grid, Target::SphereS2, Quat(0.0, 1.0, 0.0, 0.0));
    const Quat iq(0.0, 1.0, 0.0, 0.0);
    for (std::int64_t s = 0; s < grid.sites(); ++s)
        psi.at(s) = mul(mul(u.at(s), iq), u.at(s).conj());
    psi.renormalize();
    return psi;
}

FieldMap torus_wrap(const Grid3& grid, int axis_a, int axis_b, int winding) {
    if (axis_a == axis_b || axis_a < 0 || axis_a > 2 || axis_b < 0 || axis_b > 2)
        throw Error(Error::Kind::InvalidValue, "torus_wrap: need two distinct axes in 0..2");
    if (winding == 0) throw Error(Error::Kind::InvalidValue, "torus_wrap: winding must be nonzero");
    FieldMap psi(grid, Target::SphereS2, Quat(0.0, 0.0, 0.0, 1.0));
    const double h = grid.h();
    const double c = 0.5 * (grid.n - 1) * h;
    const double R = c;
    for (std::int64_t s = 0; s < grid.sites(); ++s) {
        auto ix = grid.coords(s);
        double xa = ix[axis_a] * h - c;
        double xb = ix[axis_b] * h - c;
        double r = std::hypot(xa, xb);
        double f = M_PI * std::max(0.0, 1.0 - r / R); // pi at center, 0 at the cell edge
        double phase = -winding * std::atan2(xb, xa);
        double sf = std::sin(f);
        // planar hedgehog: (sin f cos, sin f sin, cos f) in the (i,j,k) frame
        psi.at(s) = Quat(0.0, sf * std::cos(phase), sf * std::sin(phase), std::cos(f));
    }
    psi.renormalize();
    return psi;
}

FieldMap random_smooth(const Grid3& grid, Target target, std::uint64_t seed,
                       double correlation_length) {
    if (!(correlation_length > 0.0))
        throw Error(Error::Kind::InvalidValue, "random_smooth: correlation length must be > 0");
    int kmax = int(std::lround(grid.box_length / correlation_length));
    kmax = std::max(1, std::min(kmax, 3));

    Rng rng(seed);
    const int nmodes = 6;
    struct Mode {
        Vec3 k;
        double phase;
        double amp[4];
    };
    std::vector<Mode> modes(nmodes);
    for (auto& m : modes) {
        // nonzero integer wave vector with |k_i| <= kmax
        do {
            m.k = Vec3(double(int(rng.below(2 * kmax + 1)) - kmax),
                       double(int(rng.below(2 * kmax + 1)) - kmax),
                       double(int(rng.below(2 * kmax + 1)) - kmax));
        } while (m.k.norm_sq() == 0.0);
        m.phase = rng.uniform(0.0, 2.0 * M_PI);
        for (int c = 0; c < 4; ++c) m.amp[c] = rng.uniform(-1.0, 1.0);
    }

    FieldMap base = constant_field(grid, target);
    FieldMap out = base;
    const double h = grid.h();
    const double two_pi_over_l = 2.0 * M_PI / grid.box_length;
    const double amp = 0.45 / nmodes;
    for (std::int64_t s = 0; s < grid.sites(); ++s) {
        auto ix = grid.coords(s);
        Quat v = base.at(s);
        for (const auto& m : modes) {
            double arg = two_pi_over_l * (m.k.x * ix[0] * h + m.k.y * ix[1] * h +
                                          m.k.z * ix[2] * h) + m.phase;
            double w = amp * std::cos(arg);
            v += Quat(m.amp[0] * w, m.amp[1] * w, m.amp[2] * w, m.amp[3] * w);
        }
        out.at(s) = v;
    }
    out.renormalize();
    if (grid.mode == BoundaryMode::FixedBoundary) {
        for (std::int64_t s = 0; s < grid.sites(); ++s)
            if (grid.is_boundary(s)) out.at(s) = base.at(s);
    }
    return out;
}

} // namespace fskyrme
