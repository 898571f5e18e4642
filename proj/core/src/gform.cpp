#include "fskyrme/gform.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fskyrme {

GForm::GForm(const Grid3& grid, int degree) : degree_(degree), grid_(grid) {
    if (degree < 0 || degree > 3)
        throw Error(Error::Kind::DegreeOverflow, "GForm: degree must be in 0..3");
    nsites_ = std::size_t(grid.sites());
    comps_.assign(std::size_t(ncomp()) * nsites_, Quat(0.0, 0.0, 0.0, 0.0));
}

GForm& GForm::operator+=(const GForm& o) {
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] += o.comps_[i];
    return *this;
}

GForm& GForm::operator-=(const GForm& o) {
    for (std::size_t i = 0; i < comps_.size(); ++i) comps_[i] -= o.comps_[i];
    return *this;
}

GForm& GForm::operator*=(double s) {
    for (auto& q : comps_) q *= s;
    return *this;
}

GForm operator+(GForm a, const GForm& b) { return a += b; }
GForm operator-(GForm a, const GForm& b) { return a -= b; }
GForm operator*(GForm a, double s) { return a *= s; }

bool GForm::all_finite() const {
    for (const auto& q : comps_)
        if (!std::isfinite(q.w) || !std::isfinite(q.x) || !std::isfinite(q.y) ||
            !std::isfinite(q.z))
            return false;
    return true;
}

double GForm::max_real_part() const {
    double m = 0.0;
    for (const auto& q : comps_) m = std::max(m, std::abs(q.w));
    return m;
}

void GForm::project_to_algebra() {
    for (auto& q : comps_) q.w = 0.0;
}

namespace {

// Forward difference of one component of a form, one-sided at the top
// face in FixedBoundary mode.
inline Quat diff(const GForm& f, int comp, std::int64_t s, int axis, double inv_h) {
    const Grid3& g = f.grid();
    if (g.has_forward(s, axis)) return (f.at(comp, g.forward(s, axis)) - f.at(comp, s)) * inv_h;
    return (f.at(comp, s) - f.at(comp, g.backward(s, axis))) * inv_h;
}

inline Quat qbracket(const Quat& a, const Quat& b) { return mul(a, b) - mul(b, a); }

} // namespace

GForm d(const GForm& alpha) {
    const int k = alpha.degree();
    if (k >= 3) throw Error(Error::Kind::DegreeOverflow, "d: cannot raise degree past 3");
    const Grid3& g = alpha.grid();
    const double inv_h = 1.0 / g.h();
    GForm out(g, k + 1);
    const std::int64_t ns = g.sites();

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t s = 0; s < ns; ++s) {
        if (k == 0) {
            for (int a = 0; a < 3; ++a) out.at(a, s) = diff(alpha, 0, s, a, inv_h);
        } else if (k == 1) {
            for (int p = 0; p < 3; ++p) {
                int a = (p + 1) % 3, b = (p + 2) % 3;
                out.at(p, s) = diff(alpha, b, s, a, inv_h) - diff(alpha, a, s, b, inv_h);
            }
        } else { // k == 2
            Quat acc(0.0, 0.0, 0.0, 0.0);
            for (int p = 0; p < 3; ++p) acc += diff(alpha, p, s, p, inv_h);
            out.at(0, s) = acc;
        }
    }
    return out;
}

namespace {

// Shared skeleton for wedge and commutator: only the pointwise binary op
// differs (quaternion product vs bracket).
template <typename Op>
GForm graded_product(const GForm& alpha, const GForm& beta, Op op) {
    const int k = alpha.degree(), l = beta.degree();
    if (k + l > 3)
        throw Error(Error::Kind::DegreeOverflow, "wedge/commutator: degree k+l exceeds 3");
    const Grid3& g = alpha.grid();
    GForm out(g, k + l);
    const std::int64_t ns = g.sites();

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t s = 0; s < ns; ++s) {
        if (k == 0 || l == 0) {
            // scalar-degree factor multiplies every component in order
            for (int c = 0; c < out.ncomp(); ++c)
                out.at(c, s) = (k == 0) ? op(alpha.at(0, s), beta.at(c, s))
                                        : op(alpha.at(c, s), beta.at(0, s));
        } else if (k == 1 && l == 1) {
            for (int p = 0; p < 3; ++p) {
                int a = (p + 1) % 3, b = (p + 2) % 3;
                out.at(p, s) = op(alpha.at(a, s), beta.at(b, s)) - op(alpha.at(b, s), beta.at(a, s));
            }
        } else if (k == 1 && l == 2) {
            Quat acc(0.0, 0.0, 0.0, 0.0);
            for (int p = 0; p < 3; ++p) acc += op(alpha.at(p, s), beta.at(p, s));
            out.at(0, s) = acc;
        } else { // k == 2 && l == 1
            Quat acc(0.0, 0.0, 0.0, 0.0);
            for (int p = 0; p < 3; ++p) acc += op(alpha.at(p, s), beta.at(p, s));
            out.at(0, s) = acc;
        }
    }
    return out;
}

} // namespace

GForm wedge(const GForm& alpha, const GForm& beta) {
    return graded_product(alpha, beta, [](const Quat& a, const Quat& b) { return mul(a, b); });
}

GForm commutator(const GForm& alpha, const GForm& beta) {
    return graded_product(alpha, beta, [](const Quat& a, const Quat& b) { return qbracket(a, b); });
}

std::vector<double> norm_sq_pointwise(const GForm& alpha) {
    const std::int64_t ns = alpha.grid().sites();
    std::vector<double> out(std::size_t(ns), 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t s = 0; s < ns; ++s) {
        double acc = 0.0;
        for (int c = 0; c < alpha.ncomp(); ++c) acc += alpha.at(c, s).norm_sq();
        out[std::size_t(s)] = acc;
    }
    return out;
}

double integrate(const std::vector<double>& f, const Grid3& grid) {
    const int n = grid.n;
    const std::int64_t slab = std::int64_t(n) * n;
    std::vector<double> partial(std::size_t(n), 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int k = 0; k < n; ++k) {
        double acc = 0.0;
        const std::int64_t base = std::int64_t(k) * slab;
        for (std::int64_t s = 0; s < slab; ++s) acc += f[std::size_t(base + s)];
        partial[std::size_t(k)] = acc;
    }
    double total = 0.0;
    for (int k = 0; k < n; ++k) total += partial[std::size_t(k)];
    const double h = grid.h();
    return total * h * h * h;
}

double l2_norm(const GForm& alpha) {
    return std::sqrt(integrate(norm_sq_pointwise(alpha), alpha.grid()));
}

double l1_norm(const std::vector<double>& f, const Grid3& grid) {
    std::vector<double> a(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) a[i] = std::abs(f[i]);
    return integrate(a, grid);
}

double sup_norm(const GForm& alpha) {
    auto nsq = norm_sq_pointwise(alpha);
    double m = 0.0;
    for (double v : nsq) m = std::max(m, v);
    return std::sqrt(m);
}

} // namespace fskyrme
