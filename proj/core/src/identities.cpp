#include "fskyrme/identities.hpp"

#include "fskyrme/initializers.hpp"
#include "fskyrme/rng.hpp"

#include <cmath>

namespace fskyrme {

namespace {

constexpr double kAlgTol = 1e-12;

double sup_diff(const GForm& a, const GForm& b) { return sup_norm(a - b); }

void update(std::vector<CheckRow>& rows, std::size_t idx, double residual) {
    rows[idx].residual = std::max(rows[idx].residual, residual);
}

} // namespace

GForm random_smooth_form(const Grid3& grid, int degree, std::uint64_t seed) {
    Rng rng(seed);
    const int nmodes = 4, kmax = 2;
    GForm out(grid, degree);
    const double two_pi_over_l = 2.0 * M_PI / grid.box_length;
    const double h = grid.h();
    for (int c = 0; c < out.ncomp(); ++c) {
        struct Mode { double kx, ky, kz, phase, ax, ay, az; };
        std::vector<Mode> modes(nmodes);
        for (auto& m : modes) {
            m.kx = double(int(rng.below(2 * kmax + 1)) - kmax);
            m.ky = double(int(rng.below(2 * kmax + 1)) - kmax);
            m.kz = double(int(rng.below(2 * kmax + 1)) - kmax);
            m.phase = rng.uniform(0.0, 2.0 * M_PI);
            m.ax = rng.uniform(-1.0, 1.0);
            m.ay = rng.uniform(-1.0, 1.0);
            m.az = rng.uniform(-1.0, 1.0);
        }
        for (std::int64_t s = 0; s < grid.sites(); ++s) {
            auto ix = grid.coords(s);
            Vec3 v;
            for (const auto& m : modes) {
                double arg = two_pi_over_l * h * (m.kx * ix[0] + m.ky * ix[1] + m.kz * ix[2]) +
                             m.phase;
                double w = 0.5 * std::cos(arg) / nmodes;
                v += Vec3(m.ax, m.ay, m.az) * w;
            }
            out.at(c, s) = Quat(v);
        }
    }
    return out;
}

std::vector<CheckRow> algebraic_identity_suite(int n, int nfields, std::uint64_t seed) {
    Grid3 g(n, 1.0, BoundaryMode::Periodic);
    std::vector<CheckRow> rows = {
        {"e0.37(ii) [a,b] = a^b - (-1)^kl b^a (1,1)", 0, kAlgTol, false},
        {"e0.37(ii) [a,b] = a^b - (-1)^kl b^a (1,2)", 0, kAlgTol, false},
        {"e0.37(iii) graded antisymmetry", 0, kAlgTol, false},
        {"e0.37(iv) a^a = 1/2 [a,a]", 0, kAlgTol, false},
        {"e0.37(v) [a^a, a] = 0", 0, kAlgTol, false},
        {"e0.37(vi) [[a,b],b] = [a, b^b]", 0, kAlgTol, false},
        {"e0.53 split: perp = 1/2 phi [xi, phi]", 0, kAlgTol, false},
        {"e0.53 split: par + perp exact, orthogonal", 0, kAlgTol, false},
        {"[h_perp, h_perp] in h", 0, kAlgTol, false},
        {"(I - Phi)(a_perp ^ a_perp) = 0", 0, kAlgTol, false},
        {"|w ^ w| = 1/4 |dpsi x dpsi|", 0, kAlgTol, false},
        {"|dpsi x dpsi| = 2 |psi*Omega|", 0, kAlgTol, false},
    };

    for (int f = 0; f < nfields; ++f) {
        std::uint64_t s0 = seed + std::uint64_t(f) * 1000003u;
        GForm a1 = random_smooth_form(g, 1, s0 + 1);
        GForm b1 = random_smooth_form(g, 1, s0 + 2);
        GForm b2 = random_smooth_form(g, 2, s0 + 3);
        FieldMap phi_map = random_smooth(g, Target::SphereS2, s0 + 4, 0.5);
        ProjectorField proj(phi_map);
        FieldMap psi = random_smooth(g, Target::SphereS2, s0 + 5, 0.5);

        // (ii) for (k,l) = (1,1) and (1,2)
        update(rows, 0, sup_diff(commutator(a1, b1), wedge(a1, b1) + wedge(b1, a1)));
        update(rows, 1, sup_diff(commutator(a1, b2), wedge(a1, b2) - wedge(b2, a1)));
        // (iii): [b,a] = -(-1)^{kl} [a,b]
        update(rows, 2, sup_diff(commutator(b1, a1), commutator(a1, b1)));
        update(rows, 2, sup_diff(commutator(b2, a1), commutator(a1, b2) * (-1.0)));
        // (iv)
        update(rows, 3, sup_diff(wedge(a1, a1), commutator(a1, a1) * 0.5));
        // (v)
        update(rows, 4, sup_norm(commutator(wedge(a1, a1), a1)));
        // (vi)
        update(rows, 5, sup_diff(commutator(commutator(a1, b1), b1), commutator(a1, wedge(b1, b1))));

        // e0.53 and the symmetric-space relations, pointwise over sites
        double r_formula = 0, r_split = 0, r_snh = 0;
        for (std::int64_t s = 0; s < g.sites(); ++s) {
            Vec3 xi = a1.at(0, s).imag();
            Vec3 eta = b1.at(0, s).imag();
            Vec3 ph = proj.phi(s);
            auto parts = proj_isotropy(xi, ph);
            Vec3 perp_formula = mul(Quat(ph), Quat(bracket(xi, ph))).imag() * 0.5;
            r_formula = std::max(r_formula, (parts.perp - perp_formula).norm());
            r_split = std::max(r_split, (parts.par + parts.perp - xi).norm());
            r_split = std::max(r_split, std::abs(inner(parts.par, parts.perp)));
            Vec3 t1 = proj.perp(s, xi), t2 = proj.perp(s, eta);
            r_snh = std::max(r_snh, proj.perp(s, bracket(t1, t2)).norm());
        }
        update(rows, 6, r_formula);
        update(rows, 7, r_split);
        update(rows, 8, r_snh);

        // e0.109 on the perp part of a random potential
        GForm aperp = proj.apply_perp(a1);
        update(rows, 9, sup_norm(proj.apply_perp(wedge(aperp, aperp))));

        // S^2 norm identities, pointwise
        GForm omega = pullback_coisotropy(psi);
        GForm ww = wedge(omega, omega);
        double r_quarter = 0, r_sympl = 0;
        for (std::int64_t s = 0; s < g.sites(); ++s) {
            Vec3 t[3];
            for (int ax = 0; ax < 3; ++ax) t[ax] = psi.tangent_diff(s, ax).imag();
            double ww2 = 0, cr2 = 0, om2 = 0;
            for (int p = 0; p < 3; ++p) {
                ww2 += ww.at(p, s).norm_sq();
                Vec3 c = cross(t[(p + 1) % 3], t[(p + 2) % 3]) * 2.0;
                cr2 += c.norm_sq();
                double o = inner(psi.at(s).imag(), cross(t[(p + 1) % 3], t[(p + 2) % 3]));
                om2 += o * o;
            }
            r_quarter = std::max(r_quarter, std::abs(std::sqrt(ww2) - 0.25 * std::sqrt(cr2)));
            r_sympl = std::max(r_sympl, std::abs(std::sqrt(cr2) - 2.0 * std::sqrt(om2)));
        }
        update(rows, 10, r_quarter);
        update(rows, 11, r_sympl);
    }

    for (auto& r : rows) r.pass = r.residual <= r.tolerance;
    return rows;
}

FieldMap analytic_su2_field(const Grid3& grid) {
    FieldMap u(grid, Target::GroupSU2, Quat());
    const double tp = 2.0 * M_PI / grid.box_length;
    const double h = grid.h();
    for (std::int64_t s = 0; s < grid.sites(); ++s) {
        auto ix = grid.coords(s);
        double x = ix[0] * h, y = ix[1] * h, z = ix[2] * h;
        Vec3 xi{0.50 * std::sin(tp * x + 0.30) + 0.20 * std::cos(tp * (y + z)),
                0.40 * std::sin(tp * y + 1.20) + 0.15 * std::cos(tp * (z + x) + 0.7),
                0.30 * std::sin(tp * z + 2.10) + 0.25 * std::cos(tp * (x + y) + 1.4)};
        u.at(s) = exp_su2(xi);
    }
    return u;
}

FieldMap analytic_s2_reference(const Grid3& grid) {
    FieldMap phi(grid, Target::SphereS2, Quat(0.0, 1.0, 0.0, 0.0));
    const double tp = 2.0 * M_PI / grid.box_length;
    const double h = grid.h();
    for (std::int64_t s = 0; s < grid.sites(); ++s) {
        auto ix = grid.coords(s);
        double x = ix[0] * h, y = ix[1] * h, z = ix[2] * h;
        Vec3 v{1.0 + 0.30 * std::sin(tp * x),
               0.45 * std::sin(tp * y + 0.40) + 0.20 * std::cos(tp * z),
               0.45 * std::cos(tp * z + 0.90) + 0.20 * std::sin(tp * (x + y))};
        phi.at(s) = Quat(v * (1.0 / v.norm()));
    }
    return phi;
}

std::vector<double> analytic_stabilizer_angle(const Grid3& grid) {
    std::vector<double> theta(static_cast<std::size_t>(grid.sites()));
    const double tp = 2.0 * M_PI / grid.box_length;
    const double h = grid.h();
    for (std::int64_t s = 0; s < grid.sites(); ++s) {
        auto ix = grid.coords(s);
        theta[std::size_t(s)] = 0.70 * std::sin(tp * ix[0] * h + 0.20) +
                                0.50 * std::cos(tp * ix[1] * h) +
                                0.30 * std::sin(tp * ix[2] * h + 1.00);
    }
    return theta;
}

namespace {

FieldMap stabilizer_section(const ProjectorField& proj, const std::vector<double>& theta) {
    FieldMap w(proj.grid(), Target::GroupSU2, Quat());
    for (std::int64_t s = 0; s < proj.grid().sites(); ++s) {
        double t = theta[std::size_t(s)];
        Vec3 v = proj.phi(s) * std::sin(t);
        w.at(s) = Quat(std::cos(t), v.x, v.y, v.z);
    }
    return w;
}

// Analytic h_phi-valued 1-form.
GForm analytic_parallel_form(const ProjectorField& proj) {
    const Grid3& g = proj.grid();
    GForm b(g, 1);
    const double tp = 2.0 * M_PI / g.box_length;
    const double h = g.h();
    for (std::int64_t s = 0; s < g.sites(); ++s) {
        auto ix = g.coords(s);
        double x = ix[0] * h, y = ix[1] * h, z = ix[2] * h;
        double c[3] = {0.6 * std::sin(tp * y + 0.5), 0.5 * std::cos(tp * z + 1.1),
                       0.4 * std::sin(tp * x + 2.2)};
        for (int a = 0; a < 3; ++a) b.at(a, s) = Quat(proj.phi(s) * c[a]);
    }
    return b;
}

// The raw (unprojected) curvature formula of Thm 2.1(iii).
GForm curvature_raw(const GForm& b, const ProjectorField& proj) {
    GForm omega = proj.pullback();
    return d(b) + wedge(b, b) - commutator(b, omega) - proj.apply(wedge(omega, omega));
}

struct ResidualSet {
    double thm21_covariance = 0;
    double dphi_covariance = 0;
    double dcurv_i = 0, dcurv_ii = 0, sdcurv_iii = 0;
    double e067 = 0;
    double map_potential_energy = 0;
    double gauge_invariance = 0;
    double flatness = 0;
    double product_ix = 0, product_x = 0, product_xi = 0;
};

ResidualSet residuals_at(int n) {
    Grid3 g(n, 1.0, BoundaryMode::Periodic);
    ResidualSet r;

    FieldMap u = analytic_su2_field(g);
    FieldMap phi_map = analytic_s2_reference(g);
    ProjectorField proj(phi_map);
    FieldMap w = stabilizer_section(proj, analytic_stabilizer_angle(g));
    GForm a = pure_gauge_potential(u).form;
    GForm b = analytic_parallel_form(proj);

    // Thm 2.1(ii): F(b^w) = Ad(w^-1) F(b)
    GForm bw = gauge_action_isotropic(b, w, proj);
    r.thm21_covariance = l2_norm(curvature_raw(bw, proj) - ad_apply_inverse(w, curvature_raw(b, proj)));

    // Cor Dafi: D_phi(a^w) = Ad(w^-1) D_phi(a)
    GForm aw = gauge_transform(a, w);
    r.dphi_covariance = l2_norm(d_phi(aw, proj) - ad_apply_inverse(w, d_phi(a, proj)));

    auto flat = flat_curvature_identity(a, proj);
    r.dcurv_i = flat.curvature_identity;
    r.dcurv_ii = flat.dperp_identity;
    r.sdcurv_iii = flat.wedge_derivative_identity;

    // e0.67: (db)^perp = [phi*omega, b]
    GForm omega = proj.pullback();
    r.e067 = l2_norm(proj.apply_perp(d(b)) - commutator(omega, b));

    // E(u phi) = E_phi(u^-1 du)
    FieldMap upsi(g, Target::SphereS2, Quat(0.0, 1.0, 0.0, 0.0));
    for (std::int64_t s = 0; s < g.sites(); ++s)
        upsi.at(s) = mul(mul(u.at(s), phi_map.at(s)), u.at(s).conj());
    upsi.renormalize();
    double e_map = energy_map(upsi).total;
    double e_pot = energy_potential(a, proj).total;
    r.map_potential_energy = std::abs(e_map - e_pot) / std::max(1.0, e_map);

    r.gauge_invariance = std::abs(energy_potential(aw, proj).total - e_pot) / std::max(1.0, e_pot);

    r.flatness = l2_norm(d(a) + wedge(a, a));

    // product rules on analytic forms
    Grid3 gp = g;
    GForm p1 = random_smooth_form(gp, 1, 97);
    GForm q1 = random_smooth_form(gp, 1, 211);
    r.product_ix = l2_norm(d(wedge(p1, q1)) - wedge(d(p1), q1) + wedge(p1, d(q1)));
    r.product_x = l2_norm(d(commutator(p1, q1)) - commutator(d(p1), q1) + commutator(p1, d(q1)));
    r.product_xi = l2_norm(d(wedge(p1, p1)) - commutator(d(p1), p1));
    return r;
}

OrderRow make_row(const std::string& name, double coarse, double fine) {
    OrderRow row{name, coarse, fine, 0, 0, false};
    if (fine < 1e-13) {
        row.ratio = coarse > 0 ? coarse / std::max(fine, 1e-300) : 1.0;
        row.order = 3.0;
        row.pass = true;
        return row;
    }
    row.ratio = coarse / fine;
    row.order = std::log2(row.ratio);
    row.pass = row.ratio >= 1.8;
    return row;
}

} // namespace

std::vector<OrderRow> convergence_identity_suite(int n) {
    ResidualSet c = residuals_at(n);
    ResidualSet f = residuals_at(2 * n);
    std::vector<OrderRow> rows;
    rows.push_back(make_row("Thm 2.1(ii) curvature covariance", c.thm21_covariance, f.thm21_covariance));
    rows.push_back(make_row("Cor Dafi D_phi covariance", c.dphi_covariance, f.dphi_covariance));
    rows.push_back(make_row("Lemma dcurv(i)", c.dcurv_i, f.dcurv_i));
    rows.push_back(make_row("Lemma dcurv(ii)", c.dcurv_ii, f.dcurv_ii));
    rows.push_back(make_row("Lemma sdcurv(iii)", c.sdcurv_iii, f.sdcurv_iii));
    rows.push_back(make_row("e0.67 projected relation", c.e067, f.e067));
    rows.push_back(make_row("E(u phi) = E_phi(u^-1 du)", c.map_potential_energy, f.map_potential_energy));
    rows.push_back(make_row("E_phi(a^w) = E_phi(a)", c.gauge_invariance, f.gauge_invariance));
    rows.push_back(make_row("flatness da + a^a", c.flatness, f.flatness));
    rows.push_back(make_row("product rule e0.37(ix)", c.product_ix, f.product_ix));
    rows.push_back(make_row("product rule e0.37(x)", c.product_x, f.product_x));
    rows.push_back(make_row("product rule e0.37(xi)", c.product_xi, f.product_xi));
    return rows;
}

bool all_pass(const std::vector<CheckRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

bool all_pass(const std::vector<OrderRow>& rows) {
    for (const auto& r : rows)
        if (!r.pass) return false;
    return true;
}

} // namespace fskyrme
