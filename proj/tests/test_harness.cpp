#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "hs/random_maps.hpp"
#include "hs/report.hpp"
#include "hs/suites.hpp"

using namespace hs;

TEST_CASE("generator is deterministic in (spec, seed)") {
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::VectorN;
    spec.n = 3;
    spec.degree = 16;
    HarmonicMap a = gen_random_harmonic(spec, 12345);
    HarmonicMap b = gen_random_harmonic(spec, 12345);
    REQUIRE(a.coord_count() == b.coord_count());
    for (std::size_t i = 0; i < a.coord_count(); ++i)
        CHECK(a.coord(i).c == b.coord(i).c);

    HarmonicMap c = gen_random_harmonic(spec, 12346);
    CHECK(a.coord(0).c != c.coord(0).c);
}

TEST_CASE("generated maps honor the codomain margin") {
    for (auto kind : {RandomFamilySpec::Kind::RealScalar, RandomFamilySpec::Kind::VectorN,
                      RandomFamilySpec::Kind::PlanarComplex}) {
        RandomFamilySpec spec;
        spec.kind = kind;
        spec.n = (kind == RandomFamilySpec::Kind::VectorN) ? 3 : 1;
        spec.degree = 12;
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            HarmonicMap f = gen_random_harmonic(spec, seed);
            CHECK(boundary_sup(f) <= spec.margin + 1e-12);
            CHECK(boundary_sup(f) >= spec.margin - 1e-12);
        }
    }
    // degree-0 scalars are constants strictly inside (-margin, margin)
    RandomFamilySpec flat;
    flat.kind = RandomFamilySpec::Kind::RealScalar;
    flat.degree = 0;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        HarmonicMap f = gen_random_harmonic(flat, seed);
        double v = f.value_scalar(DiskPoint());
        CHECK(std::abs(v) < flat.margin);
    }
    // zero_at_origin pins the mean
    RandomFamilySpec z0;
    z0.kind = RandomFamilySpec::Kind::PlanarComplex;
    z0.degree = 8;
    z0.zero_at_origin = true;
    HarmonicMap f = gen_random_harmonic(z0, 7);
    CHECK(std::abs(f.value_complex(DiskPoint())) == 0.0);
}

TEST_CASE("derive_seed separates streams and indices") {
    CHECK(derive_seed(42, 1, 0) != derive_seed(42, 1, 1));
    CHECK(derive_seed(42, 1, 0) != derive_seed(42, 2, 0));
    CHECK(derive_seed(42, 1, 5) == derive_seed(42, 1, 5));
}

TEST_CASE("gradient suite runs clean") {
    RunConfig cfg;
    cfg.suite = Suite::Gradient;
    cfg.trials = 10;
    cfg.grid.radial = 16;
    cfg.grid.angular = 32;
    SuiteSummary s = run_suite(cfg);
    CHECK(s.total_failures == 0);
    CHECK(s.total_checks > 0);
    CHECK(s.failures.empty());
    REQUIRE(s.stats.count("gradient_bound") == 1);
    CHECK(s.stats.at("gradient_bound").worst_ratio <= 1.0 + 1e-8);
    CHECK(s.stats.at("gradient_bound").worst_ratio > 0.0);
}

TEST_CASE("strip suite runs clean") {
    RunConfig cfg;
    cfg.suite = Suite::Strip;
    SuiteSummary s = run_suite(cfg);
    CHECK(s.total_failures == 0);
    CHECK(s.total_checks >= 3 * 100 * 100);
}

TEST_CASE("counterexample suite passes its own assertions") {
    RunConfig cfg;
    cfg.suite = Suite::Counterexample;
    SuiteSummary s = run_suite(cfg);
    CHECK(s.total_failures == 0);
    CHECK(s.stats.count("counterexample_exceeds_4_over_pi") == 1);
    CHECK(s.stats.count("counterexample_bounded_witness") == 1);
}

TEST_CASE("suite results are reproducible across runs") {
    RunConfig cfg;
    cfg.suite = Suite::Heinz;
    cfg.trials = 5;
    cfg.grid.radial = 8;
    cfg.grid.angular = 16;
    SuiteSummary a = run_suite(cfg);
    SuiteSummary b = run_suite(cfg);
    std::ostringstream ja, jb;
    write_summary_json(ja, cfg, a);
    write_summary_json(jb, cfg, b);
    CHECK(ja.str() == jb.str());
    cfg.seed = 43;
    SuiteSummary c = run_suite(cfg);
    std::ostringstream jc;
    write_summary_json(jc, cfg, c);
    CHECK(ja.str() != jc.str());
}

TEST_CASE("ratio field emission") {
    GridSpec grid;
    grid.radial = 16;
    grid.angular = 32;

    RatioField ex = emit_ratio_field("gradient", extremal_at(DiskPoint()), grid, "");
    CHECK(ex.max_ratio >= 0.99);
    CHECK(ex.max_ratio <= 1.0 + 1e-6);

    TrigSeries c(0);
    c.at(0) = cd(0.5, 0.0);
    RatioField flat = emit_ratio_field("gradient", HarmonicMap::real_scalar(c), grid, "");
    CHECK(flat.max_ratio == 0.0);

    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::RealScalar;
    spec.degree = 8;
    RatioField rnd = emit_ratio_field("gradient", gen_random_harmonic(spec, 9), grid, "");
    CHECK(rnd.max_ratio > 0.0);
    CHECK(rnd.max_ratio < 1.0);

    CHECK_THROWS(emit_ratio_field("nope", extremal_at(DiskPoint()), grid, ""));
}

TEST_CASE("ratio field CSV layout") {
    GridSpec grid;
    grid.radial = 2;
    grid.angular = 4;
    RatioField f = emit_ratio_field("gradient", extremal_at(DiskPoint()), grid, "");
    std::ostringstream out;
    write_ratio_field_csv(out, f);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "r,theta,ratio");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 8);
}

TEST_CASE("format_double is round-trip exact") {
    for (double x : {0.1, 1.0 / 3.0, 4.0 / 3.14159265358979323846, 1e-300, -2.5}) {
        CHECK(std::stod(format_double(x)) == x);
    }
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.0) == "0");
}

TEST_CASE("report serialization") {
    BoundReport rep = make_report("demo", cd(0.25, -0.5), cd(0.125, 0.75), 1.0, 2.0, 1e-9);
    CHECK(rep.pass);
    CHECK(rep.ratio == doctest::Approx(0.5));

    std::ostringstream csv;
    write_reports_csv(csv, {rep});
    std::istringstream in(csv.str());
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    CHECK(header == "check,re_z,im_z,re_w,im_w,lhs,rhs,ratio,pass");
    CHECK(row.find("demo,0.25,-0.5,0.125,0.75,1,2,0.5,") == 0);

    std::ostringstream json;
    write_reports_json(json, {rep});
    CHECK(json.str().find("\"check\":\"demo\"") != std::string::npos);
    CHECK(json.str().find("\"pass\":true") != std::string::npos);

    BoundReport fail = make_report("demo", cd(0.0), std::nullopt, 2.0, 1.0, 0.0);
    CHECK_FALSE(fail.pass);
    BoundReport degenerate = make_report("demo", cd(0.0), std::nullopt, 0.0, 0.0, 0.0);
    CHECK(degenerate.pass);
    CHECK(degenerate.ratio == 0.0);
}

TEST_CASE("tolerance overrides reach the checkers") {
    RunConfig cfg;
    cfg.suite = Suite::Gradient;
    cfg.trials = 2;
    cfg.grid.radial = 4;
    cfg.grid.angular = 8;
    CHECK(cfg.tol("inequality", 1e-8) == 1e-8);
    cfg.tolerances["inequality"] = 1e-3;
    CHECK(cfg.tol("inequality", 1e-8) == 1e-3);
    SuiteSummary s = run_suite(cfg);
    CHECK(s.total_failures == 0);
}

TEST_CASE("suite names round trip") {
    for (Suite s : {Suite::All, Suite::Classical, Suite::Heinz, Suite::Gradient,
                    Suite::Modulus, Suite::Contraction, Suite::Qc, Suite::AnalyticBall,
                    Suite::Strip, Suite::Counterexample, Suite::Sharpness}) {
        CHECK(suite_from_name(suite_name(s)) == s);
    }
    CHECK_THROWS(suite_from_name("bogus"));
}
