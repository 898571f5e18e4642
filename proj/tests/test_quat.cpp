#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fskyrme/quat.hpp"
#include "fskyrme/rng.hpp"

using namespace fskyrme;

namespace {

Quat random_unit(Rng& rng) {
    Quat q(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
           rng.uniform(-1.0, 1.0));
    while (q.norm() < 0.1) q = Quat(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0),
                                    rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0));
    return q.normalized();
}

Vec3 random_vec(Rng& rng) {
    return {rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
}

const Vec3 I{1, 0, 0}, J{0, 1, 0}, K{0, 0, 1};

} // namespace

TEST_CASE("hamilton product relations") {
    Quat qi(0, 1, 0, 0), qj(0, 0, 1, 0), qk(0, 0, 0, 1);
    Quat ij = mul(qi, qj);
    CHECK(ij.w == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(ij.z == doctest::Approx(1.0).epsilon(1e-15));

    Rng rng(7);
    for (int t = 0; t < 50; ++t) {
        Quat q = random_unit(rng);
        Quat e = mul(q, unit_inverse(q));
        CHECK((e - Quat(1, 0, 0, 0)).norm() < 1e-14);
    }

    // u i u^-1 = j for u = (1+k)/sqrt(2)
    Quat u = Quat(1, 0, 0, 1).normalized();
    Vec3 r = ad_rotate(u, I);
    CHECK((r - J).norm() < 1e-15);
}

TEST_CASE("norm is multiplicative") {
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        Quat a(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
        Quat b(rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2));
        CHECK(mul(a, b).norm() == doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
    }
}

TEST_CASE("bracket matches quaternion commutator and 2(cross)") {
    CHECK((bracket(I, J) - 2.0 * K).norm() < 1e-15);
    Rng rng(3);
    for (int t = 0; t < 100; ++t) {
        Vec3 a = random_vec(rng), b = random_vec(rng);
        Quat comm = mul(Quat(a), Quat(b)) - mul(Quat(b), Quat(a));
        CHECK(std::abs(comm.w) < 1e-13);
        CHECK((comm.imag() - bracket(a, b)).norm() < 1e-13);
        CHECK(bracket(a, a).norm() == 0.0);
    }
    // [j,k] = 2i lies in h = iR: symmetric-space relation [h_perp, h_perp] in h
    Vec3 jk = bracket(J, K);
    CHECK((jk - 2.0 * I).norm() < 1e-15);
}

TEST_CASE("bi-invariance of the inner product") {
    Rng rng(5);
    for (int t = 0; t < 200; ++t) {
        Quat q = random_unit(rng);
        Vec3 a = random_vec(rng), b = random_vec(rng);
        CHECK(inner(ad_rotate(q, a), ad_rotate(q, b)) == doctest::Approx(inner(a, b)).epsilon(1e-12));
    }
}

TEST_CASE("jacobi identity on 1000 random triples") {
    Rng rng(17);
    for (int t = 0; t < 1000; ++t) {
        Vec3 a = random_vec(rng), b = random_vec(rng), c = random_vec(rng);
        Vec3 j = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) + bracket(c, bracket(a, b));
        CHECK(j.norm() < 1e-11);
    }
}

TEST_CASE("exponential and logarithm") {
    CHECK((exp_su2(Vec3{0, 0, 0}) - Quat(1, 0, 0, 0)).norm() == 0.0);
    Quat e = exp_su2(I * (M_PI / 2));
    CHECK((e - Quat(0, 1, 0, 0)).norm() < 1e-15);

    Vec3 x = log_su2(exp_su2(J * 0.3));
    CHECK((x - J * 0.3).norm() < 1e-12);

    Rng rng(23);
    for (int t = 0; t < 100; ++t) {
        Vec3 v = random_vec(rng) * 0.4;
        CHECK((log_su2(exp_su2(v)) - v).norm() < 1e-12);
    }

    CHECK_THROWS_AS(log_su2(Quat(-1, 0, 0, 0)), Error);
    try {
        log_su2(Quat(-1, 0, 0, 0));
    } catch (const Error& err) {
        CHECK(err.kind() == Error::Kind::AntipodeSingular);
    }
}

TEST_CASE("isotropy projection") {
    // proj(2i + 3j, phi = i) = (2i, 3j)
    auto p = proj_isotropy(Vec3{2, 3, 0}, I);
    CHECK((p.par - 2.0 * I).norm() < 1e-15);
    CHECK((p.perp - 3.0 * J).norm() < 1e-15);

    // parallel input
    auto q = proj_isotropy(I * 1.7, I);
    CHECK((q.par - I * 1.7).norm() < 1e-15);
    CHECK(q.perp.norm() < 1e-15);

    // proj(k, phi = j): perp = 1/2 j [k, j] = k
    auto r = proj_isotropy(K, J);
    CHECK(r.par.norm() < 1e-15);
    CHECK((r.perp - K).norm() < 1e-15);
    Vec3 formula = mul(Quat(J), Quat(bracket(K, J))).imag() * 0.5;
    CHECK((formula - K).norm() < 1e-15);

    Rng rng(29);
    for (int t = 0; t < 200; ++t) {
        Vec3 xi = random_vec(rng);
        Vec3 phi = random_vec(rng);
        while (phi.norm() < 0.1) phi = random_vec(rng);
        phi *= 1.0 / phi.norm();
        auto parts = proj_isotropy(xi, phi);
        CHECK((parts.par + parts.perp - xi).norm() < 1e-14); // exact up to one rounding
        CHECK(std::abs(inner(parts.par, parts.perp)) < 1e-12);
        // perp equals the paper formula 1/2 phi [xi, phi]
        Vec3 f = mul(Quat(phi), Quat(bracket(xi, phi))).imag() * 0.5;
        CHECK((parts.perp - f).norm() < 1e-12);
        // idempotence
        auto pp = proj_isotropy(parts.par, phi);
        CHECK(pp.perp.norm() < 1e-12);
        auto qq = proj_isotropy(parts.perp, phi);
        CHECK(qq.par.norm() < 1e-12);
    }

    CHECK_THROWS_AS(proj_isotropy(I, Vec3{0.5, 0, 0}), Error);
}

TEST_CASE("symmetric-space cancellation for tangent vectors") {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
        Vec3 phi = random_vec(rng);
        while (phi.norm() < 0.1) phi = random_vec(rng);
        phi *= 1.0 / phi.norm();
        Vec3 xi = proj_isotropy(random_vec(rng), phi).perp;
        Vec3 eta = proj_isotropy(random_vec(rng), phi).perp;
        // [h_perp, h_perp] lands in h: perp part of the bracket vanishes
        CHECK(proj_isotropy(bracket(xi, eta), phi).perp.norm() < 1e-12);
    }
}
