#include "fskyrme/coset.hpp"

#include <cmath>

namespace fskyrme {

GForm pullback_coisotropy(const FieldMap& psi) {
    const Grid3& g = psi.grid;
    GForm out(g, 1);
    if (psi.target == Target::SphereS2) {
        for (std::int64_t s = 0; s < g.sites(); ++s)
            for (int a = 0; a < 3; ++a)
                out.at(a, s) = Quat(mul(psi.at(s), psi.tangent_diff(s, a)).imag() * 0.5);
    } else {
        // omega_perp reduces to dg g^-1 for trivial H
        for (std::int64_t s = 0; s < g.sites(); ++s)
            for (int a = 0; a < 3; ++a)
                out.at(a, s) =
                    Quat(mul(psi.tangent_diff(s, a), unit_inverse(psi.at(s))).imag());
    }
    return out;
}

PureGaugePotential pure_gauge_potential(const FieldMap& u) {
    const Grid3& g = u.grid;
    PureGaugePotential out{GForm(g, 1), 0.0};
    std::vector<double> residue(std::size_t(g.sites()), 0.0);
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        double r2 = 0.0;
        for (int a = 0; a < 3; ++a) {
            Quat raw = mul(unit_inverse(u.at(s)), u.fwd_diff(s, a));
            out.form.at(a, s) = Quat(raw.imag());
            r2 += raw.w * raw.w;
        }
        residue[std::size_t(s)] = r2;
    }
    out.real_residue_l2 = std::sqrt(integrate(residue, g));
    return out;
}

IsotropySplit isotropy_decompose(const GForm& a, const ProjectorField& proj) {
    IsotropySplit out{proj.apply(a), GForm(a.grid(), a.degree())};
    out.perp = a - out.par; // exact pointwise sum
    return out;
}

GForm d_phi(const GForm& a, const ProjectorField& proj) {
    return proj.pullback() + proj.apply_perp(a);
}

GForm ad_apply_inverse(const FieldMap& w, const GForm& alpha) {
    GForm out(alpha.grid(), alpha.degree());
    for (std::int64_t s = 0; s < alpha.grid().sites(); ++s) {
        Quat wi = unit_inverse(w.at(s));
        for (int c = 0; c < alpha.ncomp(); ++c)
            out.at(c, s) = mul(mul(wi, alpha.at(c, s)), w.at(s));
    }
    return out;
}

GForm gauge_transform(const GForm& a, const FieldMap& w) {
    return ad_apply_inverse(w, a) + pure_gauge_potential(w).form;
}

GForm gauge_action_isotropic(const GForm& b, const FieldMap& w, const ProjectorField& proj) {
    const Grid3& g = b.grid();
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        // membership in H_phi(x): the imaginary part must be along phi(x)
        Vec3 im = w.at(s).imag();
        Vec3 off = im - inner(im, proj.phi(s)) * proj.phi(s);
        if (std::abs(w.at(s).norm() - 1.0) > 1e-9 || off.norm() > 1e-9)
            throw Error(Error::Kind::NotInStabilizer,
                        "gauge_action_isotropic: section leaves the stabilizer of phi");
    }
    GForm omega = proj.pullback();
    GForm out = ad_apply_inverse(w, b) + pure_gauge_potential(w).form;
    out += ad_apply_inverse(w, omega) * (-1.0);
    out += omega;
    return out;
}

CurvatureResult curvature(const GForm& b, const ProjectorField& proj) {
    GForm omega = proj.pullback();
    GForm f = d(b) + wedge(b, b) - commutator(b, omega) - proj.apply(wedge(omega, omega));
    CurvatureResult out{proj.apply(f), f, 0.0};
    out.off_projection_l2 = l2_norm(proj.apply_perp(f));
    return out;
}

FlatPotentialResiduals flat_curvature_identity(const GForm& a, const ProjectorField& proj) {
    auto split = isotropy_decompose(a, proj);
    const GForm& apar = split.par;
    const GForm& aperp = split.perp;
    GForm omega = proj.pullback();
    GForm ww = wedge(omega, omega);
    GForm perp_wedge = wedge(aperp, aperp);

    FlatPotentialResiduals res;

    // F(a_par) = dPhi ^ a_perp - Phi(a_perp ^ a_perp) - Phi(omega ^ omega)
    GForm lhs = d(apar) + wedge(apar, apar) - commutator(apar, omega) - proj.apply(ww);
    GForm rhs = proj.d_wedge(aperp) - proj.apply(perp_wedge) - proj.apply(ww);
    res.curvature_identity = l2_norm(lhs - rhs);

    // da_perp = -dPhi^a_par - dPhi^a_perp - [a_par, a_perp] - (I-Phi)(a_perp^a_perp)
    GForm lhs2 = d(aperp);
    GForm rhs2 = (proj.d_wedge(apar) + proj.d_wedge(aperp) + commutator(apar, aperp) +
                  proj.apply_perp(perp_wedge)) *
                 (-1.0);
    res.dperp_identity = l2_norm(lhs2 - rhs2);

    // d(a_perp^a_perp) = -[dPhi^a_par, a_perp] + dPhi^(a_perp^a_perp)
    GForm lhs3 = d(perp_wedge);
    GForm rhs3 = commutator(proj.d_wedge(apar), aperp) * (-1.0) + proj.d_wedge(perp_wedge);
    res.wedge_derivative_identity = l2_norm(lhs3 - rhs3);

    res.offalgebra_wedge = l2_norm(proj.apply_perp(perp_wedge));
    return res;
}

} // namespace fskyrme
