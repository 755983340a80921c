#include "hs/suites.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <stdexcept>

#include "hs/util.hpp"

namespace hs {

namespace {

constexpr double kPi = std::numbers::pi;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// What one trial contributes, merged in trial order.
struct TrialResult {
    std::vector<BoundReport> worst;     // worst-ratio report per check
    std::vector<BoundReport> failures;  // all failing reports
    std::map<std::string, CheckStat> stats;
};

void note(TrialResult& t, const BoundReport& r) {
    auto& s = t.stats[r.check];
    s.executed += 1;
    if (!r.pass) {
        s.failures += 1;
        t.failures.push_back(r);
    }
    if (r.ratio >= s.worst_ratio) s.worst_ratio = r.ratio;
}

void note_skip(TrialResult& t, const std::string& check) { t.stats[check].skipped += 1; }

void keep_worst(TrialResult& t) {
    std::map<std::string, BoundReport> best;
    for (const auto& r : t.worst) {
        auto it = best.find(r.check);
        if (it == best.end() || r.ratio > it->second.ratio) best[r.check] = r;
    }
    t.worst.clear();
    for (auto& [name, rep] : best) t.worst.push_back(rep);
}

void merge(SuiteSummary& summary, std::vector<TrialResult>& trials) {
    for (auto& t : trials) {
        for (auto& [name, st] : t.stats) {
            auto& dst = summary.stats[name];
            dst.executed += st.executed;
            dst.failures += st.failures;
            dst.skipped += st.skipped;
            if (st.worst_ratio > dst.worst_ratio) dst.worst_ratio = st.worst_ratio;
            summary.total_checks += st.executed;
            summary.total_failures += st.failures;
        }
        for (auto& r : t.worst) summary.records.push_back(std::move(r));
        for (auto& r : t.failures) summary.failures.push_back(std::move(r));
    }
}

template <typename Fn>
void run_trials(SuiteSummary& summary, int trials, Fn&& trial_fn) {
    std::vector<TrialResult> results(static_cast<std::size_t>(trials));
    parallel_for(static_cast<std::size_t>(trials), [&](std::size_t i) {
        TrialResult t;
        trial_fn(i, t);
        keep_worst(t);
        results[i] = std::move(t);
    });
    merge(summary, results);
}

/// Track the worst report of each check within a trial.
struct WorstTracker {
    std::map<std::string, BoundReport> worst;
    void add(TrialResult& t, const BoundReport& r) {
        note(t, r);
        auto it = worst.find(r.check);
        if (it == worst.end() || r.ratio > it->second.ratio) worst[r.check] = r;
    }
    void flush(TrialResult& t) {
        for (auto& [name, rep] : worst) t.worst.push_back(rep);
    }
};

void suite_classical(const RunConfig& cfg, SuiteSummary& summary) {
    const double tol = cfg.tol("classical", 1e-9);
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::AnalyticPoly;
    spec.degree = 8;
    spec.zero_at_origin = true;
    run_trials(summary, cfg.trials, [&](std::size_t i, TrialResult& t) {
        std::uint64_t s = derive_seed(cfg.seed, 1, i);
        auto f = gen_random_analytic(spec, s);
        Rng rng(splitmix64(s));
        WorstTracker w;
        for (int k = 0; k < 8; ++k) {
            DiskPoint z(rng.in_disk(0.9));
            DiskPoint wpt(rng.in_disk(0.9));
            for (const auto& rep : check_classical_schwarz(f[0], z, wpt, tol)) w.add(t, rep);
        }
        w.flush(t);
    });
}

void suite_heinz(const RunConfig& cfg, SuiteSummary& summary) {
    const double tol = cfg.tol("heinz", 1e-9);
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::PlanarComplex;
    spec.degree = 16;
    spec.zero_at_origin = true;
    run_trials(summary, cfg.trials, [&](std::size_t i, TrialResult& t) {
        HarmonicMap f = gen_random_harmonic(spec, derive_seed(cfg.seed, 2, i));
        WorstTracker w;
        for (int gi = 0; gi < cfg.grid.radial; ++gi)
            for (int gj = 0; gj < cfg.grid.angular; ++gj) {
                DiskPoint z(std::polar(cfg.grid.radius_at(gi), cfg.grid.angle_at(gj)));
                w.add(t, check_heinz(f, z, tol));
            }
        w.flush(t);
    });
}

void suite_gradient(const RunConfig& cfg, SuiteSummary& summary) {
    const double tol = cfg.tol("inequality", 1e-8);
    run_trials(summary, cfg.trials, [&](std::size_t i, TrialResult& t) {
        std::uint64_t s = derive_seed(cfg.seed, 3, i);
        RandomFamilySpec spec;
        spec.kind = RandomFamilySpec::Kind::RealScalar;
        spec.degree = 1 + static_cast<int>(splitmix64(s) % 32);  // degrees 1..32
        HarmonicMap f = gen_random_harmonic(spec, s);
        WorstTracker w;
        for (int gi = 0; gi < cfg.grid.radial; ++gi)
            for (int gj = 0; gj < cfg.grid.angular; ++gj) {
                DiskPoint z(std::polar(cfg.grid.radius_at(gi), cfg.grid.angle_at(gj)));
                w.add(t, check_gradient_bound(f, z, tol));
            }
        w.flush(t);
    });
}

void suite_modulus(const RunConfig& cfg, SuiteSummary& summary) {
    const double tol = cfg.tol("inequality", 1e-8);
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::VectorN;
    spec.n = 3;
    spec.degree = 16;
    run_trials(summary, cfg.trials, [&](std::size_t i, TrialResult& t) {
        HarmonicMap f = gen_random_harmonic(spec, derive_seed(cfg.seed, 4, i));
        WorstTracker w;
        for (int gi = 0; gi < cfg.grid.radial; ++gi)
            for (int gj = 0; gj < cfg.grid.angular; ++gj) {
                DiskPoint z(std::polar(cfg.grid.radius_at(gi), cfg.grid.angle_at(gj)));
                if (auto rep = check_modulus_gradient_bound(f, z, tol))
                    w.add(t, *rep);
                else
                    note_skip(t, "modulus_gradient_bound");
            }
        w.flush(t);
    });
}

void suite_contraction(const RunConfig& cfg, SuiteSummary& summary) {
    const double tol = cfg.tol("inequality", 1e-8);
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::RealScalar;
    spec.degree = 16;
    run_trials(summary, cfg.trials, [&](std::size_t i, TrialResult& t) {
        std::uint64_t s = derive_seed(cfg.seed, 5, i);
        HarmonicMap f = gen_random_harmonic(spec, s);
        Rng rng(splitmix64(s));
        WorstTracker w;
        for (int k = 0; k < 10; ++k) {
            DiskPoint z(rng.in_disk(0.95));
            DiskPoint wpt(rng.in_disk(0.95));
            w.add(t, check_hyperbolic_contraction(f, z, wpt, tol));
        }
        w.flush(t);
    });
}

void suite_qc(const RunConfig& cfg, SuiteSummary& summary) {
    const double tol = cfg.tol("inequality", 1e-8);
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::PlanarComplex;
    spec.degree = 12;
    spec.margin = 0.9;
    spec.anti_scale = 0.25;
    run_trials(summary, cfg.trials, [&](std::size_t i, TrialResult& t) {
        HarmonicMap f = gen_random_harmonic(spec, derive_seed(cfg.seed, 6, i));
        // measured K: sup of the pointwise dilatation on a dense polar grid,
        // times a 1.05 safety factor (grid sup may under-estimate the true sup)
        double K = 1.0;
        bool degenerate = false;
        for (int gi = 0; gi < 256 && !degenerate; ++gi)
            for (int gj = 0; gj < 512; ++gj) {
                DiskPoint z(std::polar(0.99 * (gi + 1) / 256.0, 2.0 * kPi * gj / 512.0));
                Dilatation d = dilatation(f, z);
                if (!d.orientation_ok) {
                    degenerate = true;
                    break;
                }
                K = std::max(K, d.K);
            }
        if (degenerate) {
            note_skip(t, "qc_bound");
            return;
        }
        K *= 1.05;
        WorstTracker w;
        double rmax = std::min(cfg.grid.max_radius, 0.9);
        for (int gi = 0; gi < cfg.grid.radial; ++gi)
            for (int gj = 0; gj < cfg.grid.angular; ++gj) {
                double r = rmax * (gi + 1) / static_cast<double>(cfg.grid.radial);
                DiskPoint z(std::polar(r, cfg.grid.angle_at(gj)));
                w.add(t, check_qc_bound(f, K, z, tol));
            }
        w.flush(t);
    });
}

void suite_analytic_ball(const RunConfig& cfg, SuiteSummary& summary) {
    const double tol = cfg.tol("inequality", 1e-8);
    RandomFamilySpec spec;
    spec.kind = RandomFamilySpec::Kind::AnalyticVector;
    spec.n = 2;
    spec.degree = 8;
    run_trials(summary, cfg.trials, [&](std::size_t i, TrialResult& t) {
        auto f = gen_random_analytic(spec, derive_seed(cfg.seed, 7, i));
        WorstTracker w;
        for (int gi = 0; gi < cfg.grid.radial; ++gi)
            for (int gj = 0; gj < cfg.grid.angular; ++gj) {
                DiskPoint z(std::polar(cfg.grid.radius_at(gi), cfg.grid.angle_at(gj)));
                if (auto rep = check_analytic_modulus_bound(f, z, tol))
                    w.add(t, *rep);
                else
                    note_skip(t, "analytic_modulus_bound");
            }
        w.flush(t);
    });
}

void suite_strip(const RunConfig& cfg, SuiteSummary& summary) {
    const double tol_id = cfg.tol("identity", 1e-12);
    constexpr int kSide = 100;
    run_trials(summary, kSide, [&](std::size_t i, TrialResult& t) {
        // r log-spaced over [1e-2, 1e2], t interior to (-pi/2, pi/2)
        double r = std::pow(10.0, -2.0 + 4.0 * static_cast<double>(i) / (kSide - 1));
        WorstTracker w;
        for (int j = 0; j < kSide; ++j) {
            double tt = (-1.0 + 2.0 * (j + 0.5) / kSide) * (kPi / 2.0 - 1e-9);
            for (const auto& rep : verify_strip_inequality(r, tt, tol_id)) w.add(t, rep);
        }
        w.flush(t);
    });
}

void suite_counterexample(const RunConfig& cfg, SuiteSummary& summary) {
    (void)cfg;
    TrialResult t;
    auto rows = counterexample_radial_scan(counterexample_default_radii());
    // normalization constant against its closed-form integral
    double integral = 2.0 * kPi * (1.0 - std::log(kPi));
    double defect = std::abs(counterexample_a() * (2.0 * kPi + integral) - 2.0 * kPi);
    BoundReport norm_rep = make_report("counterexample_normalization", cd(0.0),
                                       std::nullopt, defect, 1e-12, 0.0);
    t.worst.push_back(norm_rep);
    note(t, norm_rep);
    // eventual growth: later radius beats earlier radius (k = 4..10)
    for (std::size_t k = 3; k + 1 < rows.size(); ++k) {
        BoundReport r = make_report("counterexample_growth", cd(rows[k].r, 0.0),
                                    cd(rows[k + 1].r, 0.0), rows[k].bound_ratio,
                                    rows[k + 1].bound_ratio, -1e-12);
        t.worst.push_back(r);
        note(t, r);
    }
    // the gradient side passes 4/pi before r = 0.999 ...
    double best = 0.0;
    for (const auto& row : rows)
        if (row.r <= 0.999) best = std::max(best, row.bound_ratio);
    BoundReport exceeds = make_report("counterexample_exceeds_4_over_pi", cd(0.0),
                                      std::nullopt, kFourOverPi, best, 0.0);
    t.worst.push_back(exceeds);
    note(t, exceeds);
    // ... while the difference-quotient witness stays within a factor 3
    double lo = 1e300, hi = 0.0;
    for (const auto& row : rows)
        if (row.r >= 0.87) {
            lo = std::min(lo, row.m_ratio);
            hi = std::max(hi, row.m_ratio);
        }
    BoundReport bounded = make_report("counterexample_bounded_witness", cd(0.0),
                                      std::nullopt, hi, 3.0 * lo, 0.0);
    t.worst.push_back(bounded);
    note(t, bounded);
    std::vector<TrialResult> one;
    one.push_back(std::move(t));
    merge(summary, one);
}

void suite_sharpness(const RunConfig& cfg, SuiteSummary& summary) {
    constexpr int kPoints = 3;
    run_trials(summary, kPoints, [&](std::size_t i, TrialResult& t) {
        Rng rng(derive_seed(cfg.seed, 9, i));
        DiskPoint z0(rng.in_disk(0.85));
        auto result = sharpness_search(SharpnessFamily::ExtremalMobius, z0,
                                       std::max(1000, cfg.trials), cfg.seed);
        BoundReport attained = make_report("sharpness_attained", z0.value(), std::nullopt,
                                           1.0 - 1e-4, result.best_ratio, 0.0);
        BoundReport sound = make_report("sharpness_sound", z0.value(), std::nullopt,
                                        result.best_ratio, 1.0, 1e-8);
        t.worst.push_back(attained);
        t.worst.push_back(sound);
        note(t, attained);
        note(t, sound);
    });
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t index) {
    return splitmix64(base ^ splitmix64(stream * 0x100000001b3ULL + index));
}

const char* suite_name(Suite s) {
    switch (s) {
        case Suite::All: return "all";
        case Suite::Classical: return "classical";
        case Suite::Heinz: return "heinz";
        case Suite::Gradient: return "gradient";
        case Suite::Modulus: return "modulus";
        case Suite::Contraction: return "contraction";
        case Suite::Qc: return "qc";
        case Suite::AnalyticBall: return "analytic_ball";
        case Suite::Strip: return "strip";
        case Suite::Counterexample: return "counterexample";
        case Suite::Sharpness: return "sharpness";
    }
    return "?";
}

Suite suite_from_name(const std::string& name) {
    for (Suite s : {Suite::All, Suite::Classical, Suite::Heinz, Suite::Gradient,
                    Suite::Modulus, Suite::Contraction, Suite::Qc, Suite::AnalyticBall,
                    Suite::Strip, Suite::Counterexample, Suite::Sharpness})
        if (name == suite_name(s)) return s;
    throw std::invalid_argument("unknown suite: " + name);
}

double RunConfig::tol(const std::string& name, double fallback) const {
    auto it = tolerances.find(name);
    return it == tolerances.end() ? fallback : it->second;
}

SuiteSummary run_suite(const RunConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("run_suite: trials must be >= 1");
    if (!(config.grid.max_radius < 1.0) || config.grid.radial < 1 || config.grid.angular < 1)
        throw std::invalid_argument("run_suite: bad grid");
    SuiteSummary summary;
    auto run_one = [&](Suite s) {
        summary.suites_run.push_back(suite_name(s));
        switch (s) {
            case Suite::Classical: suite_classical(config, summary); break;
            case Suite::Heinz: suite_heinz(config, summary); break;
            case Suite::Gradient: suite_gradient(config, summary); break;
            case Suite::Modulus: suite_modulus(config, summary); break;
            case Suite::Contraction: suite_contraction(config, summary); break;
            case Suite::Qc: suite_qc(config, summary); break;
            case Suite::AnalyticBall: suite_analytic_ball(config, summary); break;
            case Suite::Strip: suite_strip(config, summary); break;
            case Suite::Counterexample: suite_counterexample(config, summary); break;
            case Suite::Sharpness: suite_sharpness(config, summary); break;
            case Suite::All: break;
        }
    };
    if (config.suite == Suite::All) {
        for (Suite s : {Suite::Classical, Suite::Heinz, Suite::Gradient, Suite::Modulus,
                        Suite::Contraction, Suite::Qc, Suite::AnalyticBall, Suite::Strip,
                        Suite::Counterexample, Suite::Sharpness})
            run_one(s);
    } else {
        run_one(config.suite);
    }
    return summary;
}

void write_summary_json(std::ostream& out, const RunConfig& config,
                        const SuiteSummary& summary) {
    out << "{\n  \"config\": {\"suite\":\"" << suite_name(config.suite)
        << "\",\"seed\":" << config.seed << ",\"trials\":" << config.trials
        << ",\"grid\":[" << config.grid.radial << "," << config.grid.angular << ","
        << format_double(config.grid.max_radius) << "]},\n";
    out << "  \"summary\": {\"total_checks\":" << summary.total_checks
        << ",\"total_failures\":" << summary.total_failures << ",\"suites\":[";
    for (std::size_t i = 0; i < summary.suites_run.size(); ++i)
        out << (i ? "," : "") << "\"" << summary.suites_run[i] << "\"";
    out << "],\"checks\":[";
    bool first = true;
    for (const auto& [name, st] : summary.stats) {
        out << (first ? "" : ",") << "\n    {\"check\":\"" << name
            << "\",\"executed\":" << st.executed << ",\"failures\":" << st.failures
            << ",\"skipped\":" << st.skipped << ",\"worst_ratio\":"
            << format_double(st.worst_ratio) << "}";
        first = false;
    }
    if (!summary.stats.empty()) out << "\n  ";
    out << "]},\n  \"records\": ";
    write_reports_json(out, summary.records, 2);
    out << ",\n  \"failures\": ";
    write_reports_json(out, summary.failures, 2);
    out << "\n}\n";
}

void write_summary_csv(std::ostream& out, const SuiteSummary& summary) {
    std::vector<BoundReport> all = summary.records;
    all.insert(all.end(), summary.failures.begin(), summary.failures.end());
    write_reports_csv(out, all);
}

RatioField emit_ratio_field(const std::string& check, const HarmonicMap& map,
                            const GridSpec& grid, const std::string& out_path) {
    RatioField field;
    field.grid = grid;
    field.values.assign(
        static_cast<std::size_t>(grid.radial) * static_cast<std::size_t>(grid.angular), 0.0);
    parallel_for(static_cast<std::size_t>(grid.radial), [&](std::size_t gi) {
        for (int gj = 0; gj < grid.angular; ++gj) {
            DiskPoint z(std::polar(grid.radius_at(static_cast<int>(gi)), grid.angle_at(gj)));
            double ratio = 0.0;
            if (check == "gradient") {
                ratio = check_gradient_bound(map, z).ratio;
            } else if (check == "modulus") {
                auto rep = check_modulus_gradient_bound(map, z);
                ratio = rep ? rep->ratio : 0.0;
            } else if (check == "heinz") {
                ratio = check_heinz(map, z).ratio;
            } else {
                throw std::invalid_argument("emit_ratio_field: unknown check " + check);
            }
            field.values[gi * static_cast<std::size_t>(grid.angular) +
                         static_cast<std::size_t>(gj)] = ratio;
        }
    });
    for (int i = 0; i < grid.radial; ++i)
        for (int j = 0; j < grid.angular; ++j)
            if (field.at(i, j) >= field.max_ratio) {
                field.max_ratio = field.at(i, j);
                field.argmax = std::polar(grid.radius_at(i), grid.angle_at(j));
            }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw std::runtime_error("cannot open output file: " + out_path);
        write_ratio_field_csv(out, field);
    }
    return field;
}

}  // namespace hs
