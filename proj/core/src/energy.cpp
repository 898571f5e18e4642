#include "fskyrme/energy.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fskyrme {

namespace {

// Assemble a report from the quadratic form omega (already a g-valued
// 1-form): 1/2 |omega|^2 + w/4 |omega ^ omega|^2.
EnergyReport report_from_pullback(const GForm& omega, double weight) {
    const Grid3& g = omega.grid();
    EnergyReport rep;
    auto q2 = norm_sq_pointwise(omega);
    auto w2 = norm_sq_pointwise(wedge(omega, omega));
    rep.density.resize(q2.size());
    std::vector<double> dir(q2.size()), sky(q2.size());
    for (std::size_t i = 0; i < q2.size(); ++i) {
        dir[i] = 0.5 * q2[i];
        sky[i] = 0.25 * weight * w2[i];
        rep.density[i] = dir[i] + sky[i];
    }
    rep.dirichlet = integrate(dir, g);
    rep.skyrme = integrate(sky, g);
    rep.total = rep.dirichlet + rep.skyrme;
    return rep;
}

} // namespace

EnergyReport energy_map(const FieldMap& psi, double skyrme_weight) {
    return report_from_pullback(pullback_coisotropy(psi), skyrme_weight);
}

EnergyReport energy_potential(const GForm& a, const ProjectorField& proj, double skyrme_weight,
                              bool include_yang_mills) {
    EnergyReport rep = report_from_pullback(d_phi(a, proj), skyrme_weight);
    if (include_yang_mills) {
        auto split = isotropy_decompose(a, proj);
        auto F = curvature(split.par, proj);
        auto f2 = norm_sq_pointwise(F.form);
        std::vector<double> ym(f2.size());
        for (std::size_t i = 0; i < f2.size(); ++i) {
            ym[i] = 0.5 * f2[i];
            rep.density[i] += ym[i];
        }
        rep.yang_mills = integrate(ym, a.grid());
        rep.total += *rep.yang_mills;
    }
    return rep;
}

EnergyReport skyrme_group(const FieldMap& u, double skyrme_weight) {
    const Grid3& g = u.grid;
    GForm a = pure_gauge_potential(u).form;
    auto w2 = norm_sq_pointwise(wedge(a, a));
    EnergyReport rep;
    rep.density.resize(std::size_t(g.sites()));
    std::vector<double> dir(rep.density.size()), sky(rep.density.size());
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        double du2 = 0.0;
        for (int ax = 0; ax < 3; ++ax) du2 += u.tangent_diff(s, ax).norm_sq();
        dir[std::size_t(s)] = 0.5 * du2;
        sky[std::size_t(s)] = 0.25 * skyrme_weight * w2[std::size_t(s)];
        rep.density[std::size_t(s)] = dir[std::size_t(s)] + sky[std::size_t(s)];
    }
    rep.dirichlet = integrate(dir, g);
    rep.skyrme = integrate(sky, g);
    rep.total = rep.dirichlet + rep.skyrme;
    return rep;
}

EnergyReport faddeev_s2(const FieldMap& psi, double skyrme_weight) {
    const Grid3& g = psi.grid;
    EnergyReport rep;
    rep.density.resize(std::size_t(g.sites()));
    std::vector<double> dir(rep.density.size()), sky(rep.density.size());
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        Vec3 t[3];
        for (int ax = 0; ax < 3; ++ax) t[ax] = psi.tangent_diff(s, ax).imag();
        double du2 = t[0].norm_sq() + t[1].norm_sq() + t[2].norm_sq();
        double cr2 = 0.0;
        for (int p = 0; p < 3; ++p) {
            Vec3 c = cross(t[(p + 1) % 3], t[(p + 2) % 3]) * 2.0; // (dpsi x dpsi)_p
            cr2 += c.norm_sq();
        }
        dir[std::size_t(s)] = 0.5 * du2;
        sky[std::size_t(s)] = 0.25 * skyrme_weight * cr2;
        rep.density[std::size_t(s)] = dir[std::size_t(s)] + sky[std::size_t(s)];
    }
    rep.dirichlet = integrate(dir, g);
    rep.skyrme = integrate(sky, g);
    rep.total = rep.dirichlet + rep.skyrme;
    return rep;
}

double faddeev_symplectic(const FieldMap& psi, double skyrme_weight) {
    const Grid3& g = psi.grid;
    std::vector<double> dens(std::size_t(g.sites()));
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        Vec3 p0 = psi.at(s).imag();
        Vec3 t[3];
        for (int ax = 0; ax < 3; ++ax) t[ax] = psi.tangent_diff(s, ax).imag();
        double du2 = t[0].norm_sq() + t[1].norm_sq() + t[2].norm_sq();
        double om2 = 0.0;
        for (int p = 0; p < 3; ++p) {
            double c = inner(p0, cross(t[(p + 1) % 3], t[(p + 2) % 3])); // (psi*Omega)_p
            om2 += c * c;
        }
        dens[std::size_t(s)] = 0.5 * du2 + 0.25 * skyrme_weight * om2;
    }
    return integrate(dens, g);
}

namespace {

// Gradient of the S^2 map energy.  Per site, with T_a the tangential
// difference and C_p = T_{p+1} x T_{p+2}, the density is
//   e = 1/8 sum |T_a|^2 + w/16 sum |C_p|^2,
// and S_a = de/dT_a feeds the chain rule through T_a = P_psi(D_a).
void gradient_s2(const FieldMap& psi, double lam, std::vector<Quat>& grad) {
    const Grid3& g = psi.grid;
    const double h = g.h();
    const double h3 = h * h * h;

    for (std::int64_t s = 0; s < g.sites(); ++s) {
        Vec3 p = psi.at(s).imag();
        Vec3 D[3], T[3], C[3], S[3];
        bool live[3];
        for (int a = 0; a < 3; ++a) {
            live[a] = g.has_forward(s, a);
            D[a] = psi.fwd_diff(s, a).imag();
            T[a] = D[a] - inner(D[a], p) * p;
        }
        for (int pp = 0; pp < 3; ++pp) C[pp] = cross(T[(pp + 1) % 3], T[(pp + 2) % 3]);
        for (int a = 0; a < 3; ++a)
            S[a] = 0.25 * T[a] +
                   (lam / 8.0) * (cross(T[(a + 1) % 3], C[(a + 2) % 3]) +
                                  cross(C[(a + 1) % 3], T[(a + 2) % 3]));
        for (int a = 0; a < 3; ++a) {
            if (!live[a]) continue;
            Vec3 PS = S[a] - inner(S[a], p) * p;
            Vec3 to_nbr = (h3 / h) * PS;
            Vec3 to_self = (-h3 / h) * PS - (h3 * inner(S[a], p)) * D[a] -
                           (h3 * inner(D[a], p)) * S[a];
            std::int64_t t = g.forward(s, a);
            Quat& gn = grad[std::size_t(t)];
            gn.x += to_nbr.x; gn.y += to_nbr.y; gn.z += to_nbr.z;
            Quat& gs = grad[std::size_t(s)];
            gs.x += to_self.x; gs.y += to_self.y; gs.z += to_self.z;
        }
    }

    // tangent projection and boundary clamp
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        if (g.is_boundary(s)) {
            grad[std::size_t(s)] = Quat(0.0, 0.0, 0.0, 0.0);
            continue;
        }
        Vec3 p = psi.at(s).imag();
        Vec3 v = grad[std::size_t(s)].imag();
        grad[std::size_t(s)] = Quat(v - inner(v, p) * p);
    }
}

// Gradient of the SU(2) map energy.  With rho_a the tangential difference
// in R^4, omega_a = Im(rho_a u^-1) and K_p = [omega_{p+1}, omega_{p+2}]:
//   e = 1/2 sum |rho_a|^2 + w/4 sum |K_p|^2.
void gradient_su2(const FieldMap& u, double lam, std::vector<Quat>& grad) {
    const Grid3& g = u.grid;
    const double h = g.h();
    const double h3 = h * h * h;

    for (std::int64_t s = 0; s < g.sites(); ++s) {
        Quat q = u.at(s);
        Quat D[3], rho[3];
        Vec3 om[3], K[3], M[3];
        bool live[3];
        for (int a = 0; a < 3; ++a) {
            live[a] = g.has_forward(s, a);
            D[a] = u.fwd_diff(s, a);
            rho[a] = tangent_project4(D[a], q);
            om[a] = mul(rho[a], q.conj()).imag();
        }
        for (int p = 0; p < 3; ++p) K[p] = bracket(om[(p + 1) % 3], om[(p + 2) % 3]);
        for (int a = 0; a < 3; ++a)
            M[a] = (lam / 2.0) * (bracket(om[(a + 1) % 3], K[(a + 2) % 3]) +
                                  bracket(K[(a + 1) % 3], om[(a + 2) % 3]));
        for (int a = 0; a < 3; ++a) {
            if (!live[a]) continue;
            Quat Y = rho[a] + mul(Quat(M[a]), q);
            Quat PY = tangent_project4(Y, q);
            Quat to_nbr = PY * (h3 / h);
            Quat to_self = PY * (-h3 / h) + D[a] * (-h3 * inner4(Y, q)) +
                           Y * (-h3 * inner4(D[a], q)) + mul(Quat(M[a]), rho[a]) * (-h3);
            grad[std::size_t(g.forward(s, a))] += to_nbr;
            grad[std::size_t(s)] += to_self;
        }
    }

    for (std::int64_t s = 0; s < g.sites(); ++s) {
        if (g.is_boundary(s)) {
            grad[std::size_t(s)] = Quat(0.0, 0.0, 0.0, 0.0);
            continue;
        }
        grad[std::size_t(s)] = tangent_project4(grad[std::size_t(s)], u.at(s));
    }
}

} // namespace

std::vector<Quat> gradient(const FieldMap& psi, double skyrme_weight) {
    std::vector<Quat> grad(psi.values.size(), Quat(0.0, 0.0, 0.0, 0.0));
    if (psi.target == Target::SphereS2)
        gradient_s2(psi, skyrme_weight, grad);
    else
        gradient_su2(psi, skyrme_weight, grad);
    return grad;
}

FieldMap retract(const FieldMap& psi, const std::vector<Quat>& step) {
    FieldMap out = psi;
    for (std::size_t s = 0; s < out.values.size(); ++s) out.values[s] += step[s];
    out.renormalize();
    return out;
}

AdmissibilityNorms admissibility_norms(const GForm& a, const ProjectorField& proj) {
    auto split = isotropy_decompose(a, proj);
    AdmissibilityNorms out;
    out.aperp_l2 = l2_norm(split.perp);
    out.aperp_wedge_l2 = l2_norm(wedge(split.perp, split.perp));
    out.apar_l2 = l2_norm(split.par);
    out.dapar_l2 = l2_norm(d(split.par));
    return out;
}

} // namespace fskyrme
