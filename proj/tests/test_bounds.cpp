#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "hs/bounds.hpp"
#include "hs/boundary.hpp"
#include "hs/harmonic.hpp"
#include "hs/random_maps.hpp"
#include "oracles.hpp"

using namespace hs;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("strip map round trips") {
    Rng rng(101);
    for (int i = 0; i < 1000; ++i) {
        DiskPoint z(rng.in_disk(0.99));
        DiskPoint back = strip_map_inverse(strip_map(z));
        CHECK(std::abs(back.value() - z.value()) <= 1e-12);
    }
    for (int i = 0; i < 1000; ++i) {
        cd w(rng.uniform(-0.999, 0.999), rng.uniform(-3.0, 3.0));
        CHECK(std::abs(strip_map(strip_map_inverse(w)) - w) <= 1e-11);
    }
    CHECK_THROWS_AS(strip_map_inverse(cd(1.0, 0.0)), std::domain_error);
}

TEST_CASE("strip map on the imaginary axis") {
    for (double y : {0.1, 0.5, 0.9}) {
        cd g = strip_map(DiskPoint(0.0, y));
        CHECK(g.real() == doctest::Approx(-(4.0 / kPi) * std::atan(y)).epsilon(1e-14));
        CHECK(std::abs(g.imag()) <= 1e-14);
        // the extremal is Re(-g)
        CHECK(extremal_real(DiskPoint(0.0, y)) == doctest::Approx(-g.real()).epsilon(1e-14));
    }
}

TEST_CASE("extremal closed-form values") {
    CHECK(extremal_real(DiskPoint(0.0, 0.5)) ==
          doctest::Approx((2.0 / kPi) * std::atan2(1.0, 0.75)).epsilon(1e-15));
    CHECK(extremal_real(DiskPoint(0.0, 0.5)) == doctest::Approx(0.590334470601733).epsilon(1e-14));
    for (double x : {-0.7, 0.0, 0.3, 0.9}) CHECK(extremal_real(DiskPoint(x, 0.0)) == 0.0);
    CHECK(extremal_real_grad_norm(DiskPoint()) == doctest::Approx(4.0 / kPi).epsilon(1e-15));
    // gradient norm agrees with finite differences of the closed form
    double h = 1e-6;
    DiskPoint z(0.3, 0.4);
    double gx = (extremal_real(DiskPoint(z.re() + h, z.im())) -
                 extremal_real(DiskPoint(z.re() - h, z.im()))) / (2 * h);
    double gy = (extremal_real(DiskPoint(z.re(), z.im() + h)) -
                 extremal_real(DiskPoint(z.re(), z.im() - h))) / (2 * h);
    CHECK(extremal_real_grad_norm(z) == doctest::Approx(std::hypot(gx, gy)).epsilon(1e-8));
}

TEST_CASE("extremal series attains the gradient bound at its center") {
    for (cd z0v : {cd(0.0, 0.0), cd(0.5, 0.0), cd(-0.2, 0.6), cd(0.3, -0.4)}) {
        DiskPoint z0(z0v);
        HarmonicMap f = extremal_at(z0);
        BoundReport rep = check_gradient_bound(f, z0);
        CHECK(rep.ratio >= 1.0 - 1e-6);
        CHECK(rep.pass);
        // series values match the closed form away from the boundary
        MobiusAutomorphism m(z0, 0.0);
        Rng rng(7);
        for (int i = 0; i < 50; ++i) {
            DiskPoint z(rng.in_disk(0.8));
            CHECK(std::abs(f.value_scalar(z) - extremal_real(m(z))) <= 1e-9);
        }
    }
}

TEST_CASE("extremal series never exceeds the bound on the grid") {
    RatioField field = gradient_ratio_field(extremal_at(DiskPoint(0.3, -0.4)), GridSpec{});
    CHECK(field.max_ratio <= 1.0 + 1e-6);
    CHECK(field.max_ratio >= 0.99);
}

TEST_CASE("classical Schwarz: equality for the identity") {
    AnalyticPoly id{{cd(0.0), cd(1.0)}};
    auto reps = check_classical_schwarz(id, DiskPoint(0.3, 0.2), DiskPoint(-0.1, 0.5));
    for (const auto& r : reps) {
        CHECK(r.pass);
        CHECK(r.ratio == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("classical Schwarz: strict for z^2 and random polynomials") {
    AnalyticPoly sq{{cd(0.0), cd(0.0), cd(0.9)}};
    auto reps = check_classical_schwarz(sq, DiskPoint(0.4, 0.1), DiskPoint(0.2, -0.3));
    for (const auto& r : reps) {
        CHECK(r.pass);
        CHECK(r.ratio < 1.0);
    }

    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::AnalyticPoly;
    spec.degree = 8;
    spec.zero_at_origin = true;
    Rng rng(201);
    for (int trial = 0; trial < 50; ++trial) {
        auto polys = gen_random_analytic(spec, 300 + static_cast<std::uint64_t>(trial));
        DiskPoint z(rng.in_disk(0.9)), w(rng.in_disk(0.9));
        for (const auto& r : check_classical_schwarz(polys[0], z, w)) CHECK(r.pass);
    }

    AnalyticPoly shifted{{cd(0.5), cd(0.1)}};
    CHECK_THROWS_AS(check_classical_schwarz(shifted, DiskPoint(), DiskPoint(0.1, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("Heinz bound formula and equality scale") {
    TrigSeries s(1);
    s.at(1) = cd(1.0, 0.0);  // f(z) = z
    HarmonicMap f = HarmonicMap::planar(s);
    BoundReport rep = check_heinz(f, DiskPoint(0.5, 0.0));
    CHECK(rep.rhs == doctest::Approx((4.0 / kPi) * std::atan(0.5)).epsilon(1e-15));
    CHECK(rep.rhs == doctest::Approx(0.590334470601733).epsilon(1e-14));
    CHECK(rep.lhs == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(rep.pass);

    TrigSeries bad(1);
    bad.at(0) = cd(0.3, 0.0);
    CHECK_THROWS_AS(check_heinz(HarmonicMap::planar(bad), DiskPoint(0.1, 0.0)),
                    std::invalid_argument);
}

TEST_CASE("gradient bound lhs equals the analytic completion derivative") {
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::RealScalar;
    spec.degree = 16;
    Rng rng(211);
    for (int trial = 0; trial < 20; ++trial) {
        HarmonicMap f = gen_random_harmonic(spec, 400 + static_cast<std::uint64_t>(trial));
        AnalyticPoly a = analytic_completion(f);
        DiskPoint z(rng.in_disk(0.95));
        BoundReport rep = check_gradient_bound(f, z);
        CHECK(rep.pass);
        CHECK(rep.lhs == doctest::Approx(std::abs(a.deriv(z.value()))).epsilon(1e-12));
    }
}

TEST_CASE("modulus gradient bound") {
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::VectorN;
    spec.n = 3;
    spec.degree = 12;
    Rng rng(221);
    int checked = 0;
    for (int trial = 0; trial < 20; ++trial) {
        HarmonicMap f = gen_random_harmonic(spec, 500 + static_cast<std::uint64_t>(trial));
        DiskPoint z(rng.in_disk(0.9));
        auto rep = check_modulus_gradient_bound(f, z);
        if (!rep) continue;
        CHECK(rep->pass);
        ++checked;
    }
    CHECK(checked >= 15);
}

TEST_CASE("hyperbolic contraction and density-scale invariance") {
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::RealScalar;
    spec.degree = 16;
    Rng rng(231);
    for (int trial = 0; trial < 20; ++trial) {
        HarmonicMap f = gen_random_harmonic(spec, 600 + static_cast<std::uint64_t>(trial));
        DiskPoint z(rng.in_disk(0.95)), w(rng.in_disk(0.95));
        BoundReport a = check_hyperbolic_contraction(f, z, w);
        BoundReport b = check_hyperbolic_contraction(f, z, w, 1e-8, 3.7);
        CHECK(a.pass);
        CHECK(b.pass == a.pass);
        CHECK(std::abs(a.ratio - b.ratio) <= 1e-12);
    }
    // the extremal satisfies the contraction too
    HarmonicMap ex = extremal_at(DiskPoint());
    CHECK(check_hyperbolic_contraction(ex, DiskPoint(0.0, 0.3), DiskPoint(0.0, 0.7)).pass);
}

TEST_CASE("contraction is infinitesimally compatible with the gradient bound") {
    HarmonicMap ex = extremal_at(DiskPoint());
    DiskPoint z(0.0, 0.4);
    DiskPoint w(1e-6, 0.4 + 1e-6);
    BoundReport c = check_hyperbolic_contraction(ex, z, w, 1e-8);
    // lhs/rhs of the two-point bound approaches the pointwise ratio along
    // the direction of steepest growth; here it just stays below it
    BoundReport g = check_gradient_bound(ex, z);
    CHECK(c.ratio <= g.ratio + 1e-4);
}

TEST_CASE("qc bound") {
    // f(z) = z + 0.25 conj(z), K = 5/3
    TrigSeries s(1);
    s.at(1) = cd(0.8, 0.0);
    s.at(-1) = cd(0.2, 0.0);
    HarmonicMap f = HarmonicMap::planar(s);
    double K = (0.8 + 0.2) / (0.8 - 0.2);
    BoundReport rep = check_qc_bound(f, K, DiskPoint(0.3, 0.3));
    CHECK(rep.pass);

    TrigSeries anti(1);
    anti.at(-1) = cd(1.0, 0.0);
    CHECK_THROWS_AS(check_qc_bound(HarmonicMap::planar(anti), 2.0, DiskPoint(0.1, 0.0)),
                    std::domain_error);
}

TEST_CASE("analytic modulus bound (constant one, not 4/pi)") {
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::AnalyticVector;
    spec.n = 2;
    spec.degree = 8;
    Rng rng(241);
    for (int trial = 0; trial < 20; ++trial) {
        auto polys = gen_random_analytic(spec, 700 + static_cast<std::uint64_t>(trial));
        DiskPoint z(rng.in_disk(0.9));
        auto rep = check_analytic_modulus_bound(polys, z);
        if (rep) CHECK(rep->pass);
    }
    // a Mobius self-map attains the constant-one bound
    // f(z) = (z - a)/(1 - a z) has |f'|(1-|z|^2) = 1-|f|^2
    // represented here via its Taylor polynomial of high degree
    double a = 0.3;
    AnalyticPoly m;
    m.a.resize(64);
    // (z - a)/(1 - a z) = -a + (1 - a^2) sum_{k>=1} a^{k-1} z^k
    m.a[0] = cd(-a, 0.0);
    double pw = 1.0;
    for (int k = 1; k < 64; ++k) {
        m.a[static_cast<std::size_t>(k)] = cd((1.0 - a * a) * pw, 0.0);
        pw *= a;
    }
    auto rep = check_analytic_modulus_bound({m}, DiskPoint(0.5, 0.0));
    REQUIRE(rep.has_value());
    CHECK(rep->ratio == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("strip inequality identities") {
    auto reps = verify_strip_inequality(1.0, kPi / 4.0);
    CHECK(reps[0].pass);
    CHECK(reps[1].pass);
    CHECK(reps[2].pass);
    // t = 0 gives equality in the cosine inequality
    auto eq = verify_strip_inequality(0.7, 0.0);
    CHECK(eq[2].lhs == doctest::Approx(eq[2].rhs).epsilon(1e-15));
    // sweep
    for (double r : {0.01, 0.5, 1.0, 2.0, 50.0})
        for (double t = -1.5; t <= 1.5; t += 0.125)
            for (const auto& rep : verify_strip_inequality(r, t)) CHECK(rep.pass);
    CHECK_THROWS_AS(verify_strip_inequality(0.0, 0.1), std::invalid_argument);
    CHECK_THROWS_AS(verify_strip_inequality(1.0, kPi / 2.0), std::invalid_argument);
}

TEST_CASE("counterexample boundary function") {
    double a = counterexample_a();
    CHECK(a == doctest::Approx(1.0 / (2.0 - std::log(kPi))).epsilon(1e-15));
    CHECK(counterexample_psi(kPi) == doctest::Approx(kPi).epsilon(1e-13));
    CHECK(counterexample_psi(-kPi) == doctest::Approx(-kPi).epsilon(1e-13));
    CHECK(counterexample_psi(0.0) == 0.0);
    // quadrature oracle: integral of psi' recovers psi
    double lo = 1e-4;
    double integral = oracle::adaptive_simpson(
        [](double t) { return counterexample_psi_prime(t); }, lo, kPi, 1e-14);
    CHECK(integral == doctest::Approx(counterexample_psi(kPi) - counterexample_psi(lo))
                          .epsilon(1e-10));
    // derivative blows up logarithmically toward 0
    CHECK(counterexample_psi_prime(1e-2) < counterexample_psi_prime(1e-4));
    CHECK(counterexample_psi_prime(1e-4) < counterexample_psi_prime(1e-8));
    // increasing where psi' > 0, i.e. |theta| < e
    double prev = counterexample_psi(-2.7);
    for (double t = -2.7 + 0.05; t < 2.7; t += 0.05) {
        double cur = counterexample_psi(t);
        CHECK(cur > prev);
        prev = cur;
    }
    // but decreasing past |theta| = e (psi' changes sign there)
    CHECK(counterexample_psi_prime(3.0) < 0.0);
    CHECK(counterexample_psi_prime(std::exp(1.0)) == doctest::Approx(0.0).epsilon(1e-12));
    // unimodular boundary values
    auto b = counterexample_boundary();
    for (double t = -3.0; t <= 3.0; t += 0.37)
        CHECK(std::abs(b.value_complex(t)) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("counterexample radial scan grows past 4/pi with bounded witness") {
    auto rows = counterexample_radial_scan(counterexample_default_radii());
    REQUIRE(rows.size() == 10);
    for (std::size_t i = 1; i < rows.size(); ++i)
        CHECK(rows[i].bound_ratio > rows[i - 1].bound_ratio);
    CHECK(rows.back().bound_ratio > 4.0 / kPi);
    // the M-ratio witness levels off (within a factor 3 over the outer radii)
    // while the bound ratio keeps growing
    double m_lo = 1e300, m_hi = 0.0;
    for (const auto& row : rows) {
        CHECK(row.m_ratio > 0.0);
        CHECK(row.abs_f < 1.0);
        CHECK(row.truncation_ok);
        if (row.r >= 0.87) {
            m_lo = std::min(m_lo, row.m_ratio);
            m_hi = std::max(m_hi, row.m_ratio);
        }
    }
    CHECK(m_hi <= 3.0 * m_lo);
    CHECK_THROWS_AS(counterexample_radial_scan({0.9, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(counterexample_radial_scan({}), std::invalid_argument);
}

TEST_CASE("sharpness search over the three families") {
    SharpnessResult rot = sharpness_search(SharpnessFamily::ExtremalRotations, DiskPoint(), 64);
    CHECK(rot.best_ratio == doctest::Approx(1.0).epsilon(1e-12));

    DiskPoint z0(0.3, -0.2);
    SharpnessResult mob = sharpness_search(SharpnessFamily::ExtremalMobius, z0, 1000);
    CHECK(mob.best_ratio >= 1.0 - 1e-6);
    CHECK(mob.best_ratio <= 1.0 + 1e-12);

    SharpnessResult rnd = sharpness_search(SharpnessFamily::RandomRealMaps, z0, 200, 42);
    CHECK(rnd.best_ratio > 0.0);
    CHECK(rnd.best_ratio <= 1.0 + 1e-8);
    CHECK_FALSE(rnd.field.values.empty());

    CHECK_THROWS_AS(sharpness_search(SharpnessFamily::ExtremalMobius, z0, 0),
                    std::invalid_argument);
}
