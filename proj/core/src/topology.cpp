#include "fskyrme/topology.hpp"

#include <cmath>
#include <complex>

namespace fskyrme {

namespace {

// Trace density of a triple wedge of 1-forms: 2 Re((alpha ^ (beta ^ gamma))_123).
std::vector<double> trace_triple_wedge(const GForm& alpha, const GForm& beta,
                                       const GForm& gamma) {
    GForm t = wedge(alpha, wedge(beta, gamma));
    const std::int64_t ns = t.grid().sites();
    std::vector<double> out(static_cast<std::size_t>(ns));
    for (std::int64_t s = 0; s < ns; ++s) out[std::size_t(s)] = trace(t.at(0, s));
    return out;
}

} // namespace

double degree_su2(const FieldMap& u) {
    if (u.target != Target::GroupSU2)
        throw Error(Error::Kind::InvalidValue, "degree_su2: map must be SU(2)-valued");
    GForm a = pure_gauge_potential(u).form;
    auto dens = trace_triple_wedge(a, a, a);
    return kCartanNormalization * integrate(dens, u.grid);
}

double additivity_check(const FieldMap& u, const FieldMap& v) {
    return std::abs(degree_su2(pointwise_product(u, v)) - degree_su2(u) - degree_su2(v));
}

namespace {

// (psi* Omega)_p = <psi, T_{p+1} x T_{p+2}> with tangential differences.
std::vector<double> area_pullback_component(const FieldMap& psi, int p, bool central) {
    const Grid3& g = psi.grid;
    std::vector<double> out(static_cast<std::size_t>(g.sites()));
    int a = (p + 1) % 3, b = (p + 2) % 3;
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        Vec3 ta = (central ? psi.tangent_central_diff(s, a) : psi.tangent_diff(s, a)).imag();
        Vec3 tb = (central ? psi.tangent_central_diff(s, b) : psi.tangent_diff(s, b)).imag();
        out[std::size_t(s)] = inner(psi.at(s).imag(), cross(ta, tb));
    }
    return out;
}

} // namespace

std::vector<double> primary_flux_slices(const FieldMap& psi, int axis) {
    const Grid3& g = psi.grid;
    auto F = area_pullback_component(psi, axis, false);
    const double h2 = g.h() * g.h();
    std::vector<double> fluxes(std::size_t(g.n), 0.0);
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        int slice = g.coords(s)[axis];
        fluxes[std::size_t(slice)] += F[std::size_t(s)];
    }
    for (auto& f : fluxes) f *= h2 / (4.0 * M_PI);
    return fluxes;
}

std::array<double, 3> primary_fluxes(const FieldMap& psi) {
    if (psi.target != Target::SphereS2)
        throw Error(Error::Kind::InvalidValue, "primary_fluxes: map must be S^2-valued");
    if (psi.grid.mode == BoundaryMode::FixedBoundary) return {0.0, 0.0, 0.0};
    std::array<double, 3> out{};
    for (int p = 0; p < 3; ++p) {
        auto slices = primary_flux_slices(psi, p);
        double acc = 0.0;
        for (double v : slices) acc += v;
        out[std::size_t(p)] = acc / double(psi.grid.n);
    }
    return out;
}

namespace {

using cd = std::complex<double>;

// In-place separable 3D DFT (sign = -1 forward, +1 inverse, inverse also
// divides by n^3).  Naive O(n^4) line transforms; deterministic.
void dft3(std::vector<cd>& data, const Grid3& g, int sign) {
    const int n = g.n;
    std::vector<cd> twiddle(std::size_t(n) * n);
    for (int k = 0; k < n; ++k)
        for (int t = 0; t < n; ++t)
            twiddle[std::size_t(k) * n + t] =
                std::polar(1.0, sign * 2.0 * M_PI * double((std::int64_t(k) * t) % n) / n);

    std::vector<cd> line(static_cast<std::size_t>(n));
    std::vector<cd> lineT(static_cast<std::size_t>(n));
    std::int64_t stride[3] = {1, n, std::int64_t(n) * n};
    for (int axis = 0; axis < 3; ++axis) {
        int u = (axis + 1) % 3, v = (axis + 2) % 3;
        for (int iu = 0; iu < n; ++iu)
            for (int iv = 0; iv < n; ++iv) {
                std::int64_t base = iu * stride[u] + iv * stride[v];
                for (int t = 0; t < n; ++t) line[std::size_t(t)] = data[std::size_t(base + t * stride[axis])];
                for (int k = 0; k < n; ++k) {
                    cd acc(0.0, 0.0);
                    const cd* tw = &twiddle[std::size_t(k) * n];
                    for (int t = 0; t < n; ++t) acc += tw[t] * line[std::size_t(t)];
                    lineT[std::size_t(k)] = acc;
                }
                for (int k = 0; k < n; ++k) data[std::size_t(base + k * stride[axis])] = lineT[std::size_t(k)];
            }
    }
    if (sign > 0) {
        double scale = 1.0 / double(g.sites());
        for (auto& z : data) z *= scale;
    }
}

} // namespace

double hopf_invariant(const FieldMap& psi) {
    if (psi.target != Target::SphereS2)
        throw Error(Error::Kind::InvalidValue, "hopf_invariant: map must be S^2-valued");
    const Grid3& g = psi.grid;

    auto fluxes = primary_fluxes(psi);
    for (double f : fluxes)
        if (std::abs(f) >= 0.1)
            throw Error(Error::Kind::NonzeroPrimaryFlux,
                        "hopf_invariant: primary flux is not numerically zero");

    // F components (vector-field picture B_p = F_{(p+1)(p+2)}); central
    // differences keep the Whitehead integral second-order accurate.
    std::array<std::vector<double>, 3> B;
    for (int p = 0; p < 3; ++p) B[std::size_t(p)] = area_pullback_component(psi, p, true);

    // consistency of the zero mode: means must match the (vanishing) fluxes
    for (int p = 0; p < 3; ++p) {
        double mean = integrate(B[std::size_t(p)], g) / (4.0 * M_PI * g.box_length);
        if (std::abs(mean) > 0.5)
            throw Error(Error::Kind::SpectralSolveFailure,
                        "hopf_invariant: area pullback has a nonzero mean");
    }

    const std::int64_t ns = g.sites();
    std::array<std::vector<cd>, 3> Bk;
    for (int p = 0; p < 3; ++p) {
        Bk[std::size_t(p)].assign(std::size_t(ns), cd(0.0, 0.0));
        for (std::int64_t s = 0; s < ns; ++s)
            Bk[std::size_t(p)][std::size_t(s)] = cd(B[std::size_t(p)][std::size_t(s)], 0.0);
        dft3(Bk[std::size_t(p)], g, -1);
    }

    // Coulomb-gauge vector potential: A_hat = -(conj(lambda) x B_hat)/|lambda|^2,
    // with lambda_a(k) = i sin(2 pi k_a / n)/h the central-difference symbol.
    // The k = 0 mode (and the measure-zero Nyquist kernel of the symbol) is
    // dropped.
    std::array<std::vector<cd>, 3> Ak;
    for (int p = 0; p < 3; ++p) Ak[std::size_t(p)].assign(std::size_t(ns), cd(0.0, 0.0));
    const int n = g.n;
    const double h = g.h();
    std::vector<cd> sym(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        sym[std::size_t(k)] = cd(0.0, std::sin(2.0 * M_PI * k / n) / h);

    for (std::int64_t s = 0; s < ns; ++s) {
        auto c = g.coords(s);
        cd lam[3] = {sym[std::size_t(c[0])], sym[std::size_t(c[1])], sym[std::size_t(c[2])]};
        double den = std::norm(lam[0]) + std::norm(lam[1]) + std::norm(lam[2]);
        if (den < 1e-12) continue;
        cd lc[3] = {std::conj(lam[0]), std::conj(lam[1]), std::conj(lam[2])};
        for (int p = 0; p < 3; ++p) {
            int a = (p + 1) % 3, b = (p + 2) % 3;
            cd crossp = lc[a] * Bk[std::size_t(b)][std::size_t(s)] -
                        lc[b] * Bk[std::size_t(a)][std::size_t(s)];
            Ak[std::size_t(p)][std::size_t(s)] = -crossp / den;
        }
    }

    std::vector<double> helicity(std::size_t(ns), 0.0);
    for (int p = 0; p < 3; ++p) {
        dft3(Ak[std::size_t(p)], g, +1);
        for (std::int64_t s = 0; s < ns; ++s)
            helicity[std::size_t(s)] +=
                Ak[std::size_t(p)][std::size_t(s)].real() * B[std::size_t(p)][std::size_t(s)];
    }
    return kHopfNormalization * integrate(helicity, g);
}

FieldMap lift_through_hopf(const FieldMap& psi) {
    if (psi.target != Target::SphereS2)
        throw Error(Error::Kind::InvalidValue, "lift_through_hopf: map must be S^2-valued");
    const Quat iq(0.0, 1.0, 0.0, 0.0);
    FieldMap u(psi.grid, Target::GroupSU2, Quat());
    const double cap = std::cos(1e-3);
    for (std::int64_t s = 0; s < psi.grid.sites(); ++s) {
        const Quat& p = psi.at(s);
        if (-p.x > cap) {
            auto c = psi.grid.coords(s);
            throw Error(Error::Kind::AntipodeHit,
                        "lift_through_hopf: field within the antipode cap at site (" +
                            std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
                            std::to_string(c[2]) + ")");
        }
        Quat q = Quat(1.0, 0.0, 0.0, 0.0) - mul(p, iq);
        u.at(s) = q.normalized();
        Quat check = mul(mul(u.at(s), iq), u.at(s).conj()) - p;
        if (check.norm() > 1e-12)
            throw Error(Error::Kind::InvalidValue, "lift_through_hopf: lift verification failed");
    }
    return u;
}

CsDecomposition secondary_cs_decomposed(const GForm& a, const ProjectorField& proj) {
    auto split = isotropy_decompose(a, proj);
    const GForm& ap = split.par;
    const GForm& aq = split.perp;
    const Grid3& g = a.grid();

    std::array<std::vector<double>, 4> dens = {
        trace_triple_wedge(ap, ap, ap), trace_triple_wedge(ap, ap, aq),
        trace_triple_wedge(ap, aq, aq), trace_triple_wedge(aq, aq, aq)};
    const double binom[4] = {1.0, 3.0, 3.0, 1.0};

    CsDecomposition out;
    for (int t = 0; t < 4; ++t) {
        for (auto& v : dens[std::size_t(t)]) v *= kCartanNormalization * binom[t];
        out.terms[std::size_t(t)] = integrate(dens[std::size_t(t)], g);
        out.term_l1[std::size_t(t)] = l1_norm(dens[std::size_t(t)], g);
        out.total += out.terms[std::size_t(t)];
    }
    return out;
}

namespace {

int round_with_drift(double raw, double& drift) {
    double r = std::round(raw);
    drift = std::max(drift, std::abs(raw - r));
    return int(r);
}

} // namespace

InvariantReport invariant_report(const FieldMap& f, HopfMethod method) {
    InvariantReport rep;
    rep.method = method;
    double drift = 0.0;
    if (f.target == Target::GroupSU2) {
        rep.degree = degree_su2(f);
        rep.degree_rounded = round_with_drift(*rep.degree, drift);
    } else {
        rep.fluxes = primary_fluxes(f);
        for (int p = 0; p < 3; ++p)
            rep.fluxes_rounded[std::size_t(p)] = round_with_drift(rep.fluxes[std::size_t(p)], drift);
        bool trivial_sector = true;
        for (double v : rep.fluxes)
            if (std::abs(v) >= 0.1) trivial_sector = false;
        if (trivial_sector) {
            if (method == HopfMethod::PoissonGauge) {
                rep.hopf = hopf_invariant(f);
            } else {
                FieldMap u = lift_through_hopf(f);
                rep.hopf = degree_su2(u);
            }
            rep.hopf_rounded = round_with_drift(*rep.hopf, drift);
        }
    }
    rep.drift = drift;
    rep.trusted = drift < 0.5;
    return rep;
}

SectorLabel sector_label(const InvariantReport& rep) {
    SectorLabel out;
    out.fluxes = rep.fluxes_rounded;
    bool zero = out.fluxes[0] == 0 && out.fluxes[1] == 0 && out.fluxes[2] == 0;
    if (zero && rep.hopf) out.secondary = rep.hopf_rounded;
    if (rep.degree) out.secondary = rep.degree_rounded;
    return out;
}

} // namespace fskyrme
