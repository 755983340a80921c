#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hs/disk.hpp"
#include "hs/random_maps.hpp"
#include "oracles.hpp"

using namespace hs;

TEST_CASE("DiskPoint rejects the boundary and beyond") {
    CHECK_NOTHROW(DiskPoint(0.99, 0.0));
    CHECK_THROWS_AS(DiskPoint(1.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(DiskPoint(0.8, 0.8), std::invalid_argument);
    CHECK_THROWS_AS(DiskPoint(std::nan(""), 0.0), std::invalid_argument);
}

TEST_CASE("pseudo-hyperbolic distance basics") {
    CHECK(pseudo_hyperbolic(DiskPoint(), DiskPoint(0.0, 0.5)) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pseudo_hyperbolic(DiskPoint(0.5, 0.0), DiskPoint(0.5, 0.0)) == 0.0);
    // reduces to |w| from the origin
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        DiskPoint w(rng.in_disk(0.99));
        CHECK(pseudo_hyperbolic(DiskPoint(), w) == doctest::Approx(w.abs()).epsilon(1e-14));
    }
}

TEST_CASE("hyperbolic distance closed form vs line-integral oracle") {
    CHECK(hyperbolic_distance(DiskPoint(), DiskPoint()) == 0.0);
    double expected = 2.0 * artanh(0.5);
    CHECK(hyperbolic_distance(DiskPoint(), DiskPoint(0.5, 0.0)) ==
          doctest::Approx(expected).epsilon(1e-12));
    CHECK(expected == doctest::Approx(1.0986122886681098).epsilon(1e-12));
    // density 2/(1-t^2) along the radius
    double integral = oracle::adaptive_simpson(
        [](double t) { return 2.0 / (1.0 - t * t); }, 0.0, 0.5);
    CHECK(hyperbolic_distance(DiskPoint(), DiskPoint(0.5, 0.0)) ==
          doctest::Approx(integral).epsilon(1e-9));
}

TEST_CASE("interval hyperbolic distance") {
    CHECK(interval_hyperbolic_distance(0.0, 0.0) == 0.0);
    CHECK(interval_hyperbolic_distance(0.0, 0.5) ==
          doctest::Approx(2.0 * artanh(0.5)).epsilon(1e-14));
    CHECK(interval_hyperbolic_distance(-0.3, 0.3) ==
          doctest::Approx(4.0 * artanh(0.3)).epsilon(1e-14));
    double integral = oracle::adaptive_simpson(
        [](double t) { return 2.0 / (1.0 - t * t); }, -0.3, 0.3);
    CHECK(interval_hyperbolic_distance(-0.3, 0.3) == doctest::Approx(integral).epsilon(1e-9));
    CHECK_THROWS_AS(interval_hyperbolic_distance(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("Mobius automorphism basics") {
    MobiusAutomorphism id;
    CHECK(id(DiskPoint(0.3, 0.2)).value() == cd(0.3, 0.2));
    MobiusAutomorphism m(DiskPoint(0.5, 0.0), 0.0);
    CHECK(std::abs(m(DiskPoint(0.5, 0.0)).value()) == 0.0);
}

TEST_CASE("Mobius maps are pseudo-hyperbolic isometries") {
    Rng rng(11);
    for (int i = 0; i < 500; ++i) {
        MobiusAutomorphism m(DiskPoint(rng.in_disk(0.9)), rng.uniform(0.0, 6.28));
        DiskPoint z(rng.in_disk(0.95)), w(rng.in_disk(0.95));
        CHECK(std::abs(pseudo_hyperbolic(m(z), m(w)) - pseudo_hyperbolic(z, w)) <= 1e-12);
        CHECK(std::abs(hyperbolic_distance(m(z), m(w)) - hyperbolic_distance(z, w)) <= 1e-11);
    }
}

TEST_CASE("composition and inverse stay in the group") {
    Rng rng(13);
    for (int i = 0; i < 200; ++i) {
        MobiusAutomorphism m1(DiskPoint(rng.in_disk(0.8)), rng.uniform(0.0, 6.28));
        MobiusAutomorphism m2(DiskPoint(rng.in_disk(0.8)), rng.uniform(0.0, 6.28));
        MobiusAutomorphism c = m1.compose(m2);
        DiskPoint z(rng.in_disk(0.9));
        CHECK(std::abs(c(z).value() - m1(m2(z)).value()) <= 1e-12);
        MobiusAutomorphism inv = m1.inverse();
        CHECK(std::abs(inv(m1(z)).value() - z.value()) <= 1e-12);
    }
}

TEST_CASE("mobius_from_points postconditions on random pairs") {
    auto [m0, r0] = mobius_from_points(DiskPoint(), DiskPoint(0.5, 0.0));
    CHECK(r0 == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(std::abs(m0(DiskPoint()).value()) <= 1e-14);

    DiskPoint p(0.3, -0.2);
    auto [ms, rs] = mobius_from_points(p, p);
    CHECK(rs == 0.0);
    CHECK(std::abs(ms(DiskPoint()).value() - p.value()) <= 1e-12);

    Rng rng(17);
    for (int i = 0; i < 10000; ++i) {
        DiskPoint z(rng.in_disk(0.95)), w(rng.in_disk(0.95));
        auto [m, r] = mobius_from_points(z, w);
        CHECK(r == doctest::Approx(pseudo_hyperbolic(z, w)).epsilon(1e-12));
        CHECK(std::abs(m(DiskPoint()).value() - z.value()) <= 1e-12);
        CHECK(std::abs(m(DiskPoint(r, 0.0)).value() - w.value()) <= 1e-12);
    }
}

TEST_CASE("artanh is accurate near one") {
    // artanh(1 - 1e-12) from the high-precision identity 0.5 log((1+x)/(1-x))
    double x = 1.0 - 1e-12;
    double expected = 0.5 * (std::log1p(x) - std::log1p(-x));
    CHECK(artanh(x) == expected);
    CHECK(artanh(0.0) == 0.0);
    CHECK(artanh(-0.5) == -artanh(0.5));
}
