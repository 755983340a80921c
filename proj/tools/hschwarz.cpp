// Command-line front end: inequality suites, disk distances, Poisson
// extension, the unbounded-gradient radial scan, and ratio-field export.
// Exit codes: 0 all checks passed, 1 at least one inequality failed,
// 2 configuration or I/O error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hs/boundary.hpp"
#include "hs/bounds.hpp"
#include "hs/harmonic.hpp"
#include "hs/report.hpp"
#include "hs/suites.hpp"

namespace {

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

int run_verify(const std::string& suite, std::uint64_t seed, int trials,
               const std::string& grid_arg, const std::vector<std::string>& tols,
               const std::string& out_path, const std::string& format) {
    hs::RunConfig cfg;
    cfg.suite = hs::suite_from_name(suite);
    cfg.seed = seed;
    cfg.trials = trials;
    if (!grid_arg.empty()) {
        auto v = parse_doubles(grid_arg);
        if (v.size() != 3) throw std::invalid_argument("--grid expects R,A,rmax");
        cfg.grid.radial = static_cast<int>(v[0]);
        cfg.grid.angular = static_cast<int>(v[1]);
        cfg.grid.max_radius = v[2];
    }
    for (const auto& t : tols) {
        auto eq = t.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("--tol expects NAME=VAL");
        cfg.tolerances[t.substr(0, eq)] = std::stod(t.substr(eq + 1));
    }
    cfg.out_path = out_path;
    cfg.format = (format == "csv") ? hs::OutputFormat::Csv : hs::OutputFormat::Json;

    hs::SuiteSummary summary = hs::run_suite(cfg);

    std::ostream* out = &std::cout;
    std::ofstream file;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path, std::ios::binary);
        if (!file) {
            std::cerr << "error: cannot open " << cfg.out_path << "\n";
            return 2;
        }
        out = &file;
    }
    if (cfg.format == hs::OutputFormat::Json)
        hs::write_summary_json(*out, cfg, summary);
    else
        hs::write_summary_csv(*out, summary);

    std::cerr << "suite " << suite << ": " << summary.total_checks << " checks, "
              << summary.total_failures << " failures\n";
    return summary.total_failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Harmonic Schwarz-lemma verification toolkit"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run inequality suites");
    std::string suite = "all", grid_arg, out_path, format = "json";
    std::uint64_t seed = 42;
    int trials = 50;
    std::vector<std::string> tols;
    verify->add_option("--suite", suite, "suite name (all, classical, heinz, gradient, "
                       "modulus, contraction, qc, analytic_ball, strip, counterexample, "
                       "sharpness)");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "trials per suite");
    verify->add_option("--grid", grid_arg, "polar grid R,A,rmax");
    verify->add_option("--tol", tols, "tolerance override NAME=VAL");
    verify->add_option("--out", out_path, "report output path (default stdout)");
    verify->add_option("--format", format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));

    // distance
    auto* distance = app.add_subcommand("distance", "print hyperbolic distances");
    std::string disk_arg, interval_arg;
    distance->add_option("--disk", disk_arg, "zRe,zIm,wRe,wIm");
    distance->add_option("--interval", interval_arg, "x,y in (-1,1)");

    // extend
    auto* extend = app.add_subcommand("extend", "evaluate the Poisson extension");
    std::string boundary_path, at_arg, backend = "series";
    int degree = 256, nodes = 4096;
    extend->add_option("--boundary", boundary_path, "boundary-data JSON file")->required();
    extend->add_option("--at", at_arg, "evaluation point re,im")->required();
    extend->add_option("--backend", backend, "series|quadrature")
        ->check(CLI::IsMember({"series", "quadrature"}));
    extend->add_option("--degree", degree, "series truncation degree");
    extend->add_option("--nodes", nodes, "quadrature node count");

    // counterexample
    auto* counter = app.add_subcommand("counterexample", "radial scan of the "
                                       "unbounded-gradient example");
    std::string radii_arg = "auto";
    counter->add_option("--radii", radii_arg, "comma list of radii, or 'auto'");

    // field
    auto* field_cmd = app.add_subcommand("field", "export a ratio-field CSV");
    std::string check_name = "gradient", map_name = "extremal", field_out;
    std::uint64_t field_seed = 42;
    field_cmd->add_option("--check", check_name, "gradient|modulus|heinz");
    field_cmd->add_option("--map", map_name, "extremal|random|constant:VAL");
    field_cmd->add_option("--seed", field_seed, "seed for the random map");
    field_cmd->add_option("--out", field_out, "output CSV path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // fold CLI11's parse-error codes into the documented config-error code
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify)
            return run_verify(suite, seed, trials, grid_arg, tols, out_path, format);

        if (*distance) {
            if (!disk_arg.empty()) {
                auto v = parse_doubles(disk_arg);
                if (v.size() != 4) throw std::invalid_argument("--disk expects zRe,zIm,wRe,wIm");
                hs::DiskPoint z(v[0], v[1]), w(v[2], v[3]);
                std::cout << "pseudo_hyperbolic " << hs::format_double(hs::pseudo_hyperbolic(z, w))
                          << "\nhyperbolic_distance "
                          << hs::format_double(hs::hyperbolic_distance(z, w)) << "\n";
            } else if (!interval_arg.empty()) {
                auto v = parse_doubles(interval_arg);
                if (v.size() != 2) throw std::invalid_argument("--interval expects x,y");
                std::cout << "interval_hyperbolic_distance "
                          << hs::format_double(hs::interval_hyperbolic_distance(v[0], v[1]))
                          << "\n";
            } else {
                throw std::invalid_argument("distance: pass --disk or --interval");
            }
            return 0;
        }

        if (*extend) {
            auto v = parse_doubles(at_arg);
            if (v.size() != 2) throw std::invalid_argument("--at expects re,im");
            hs::DiskPoint z(v[0], v[1]);
            auto b = hs::BoundaryFunction::from_json_file(boundary_path);
            std::vector<double> value;
            if (backend == "series") {
                value = hs::HarmonicMap::from_boundary(b, degree).value(z);
            } else {
                value = hs::poisson_extend_quadrature(b, z, nodes);
                if (!hs::quadrature_nodes_sufficient(z.abs(), nodes))
                    std::cerr << "warning: " << nodes << " nodes may be insufficient at r="
                              << z.abs() << " (recommend "
                              << hs::recommended_quadrature_nodes(z.abs()) << ")\n";
            }
            for (std::size_t i = 0; i < value.size(); ++i)
                std::cout << (i ? " " : "") << hs::format_double(value[i]);
            std::cout << "\n";
            return 0;
        }

        if (*counter) {
            std::vector<double> radii = (radii_arg == "auto")
                                            ? hs::counterexample_default_radii()
                                            : parse_doubles(radii_arg);
            auto rows = hs::counterexample_radial_scan(radii);
            std::cout << "r,abs_f,grad_norm,bound_ratio\n";
            for (const auto& row : rows) {
                std::cout << hs::format_double(row.r) << ',' << hs::format_double(row.abs_f)
                          << ',' << hs::format_double(row.grad_norm) << ','
                          << hs::format_double(row.bound_ratio) << '\n';
                if (!row.truncation_ok)
                    std::cerr << "warning: truncation tail above 1e-4 of the gradient at r="
                              << row.r << "\n";
            }
            return 0;
        }

        if (*field_cmd) {
            hs::GridSpec grid;
            hs::RatioField field;
            if (map_name == "extremal") {
                field = hs::emit_ratio_field(check_name, hs::extremal_at(hs::DiskPoint()),
                                             grid, field_out);
            } else if (map_name.rfind("constant:", 0) == 0) {
                double c = std::stod(map_name.substr(9));
                hs::TrigSeries s(0);
                s.at(0) = hs::cd(c, 0.0);
                field = hs::emit_ratio_field(check_name, hs::HarmonicMap::real_scalar(s),
                                             grid, field_out);
            } else if (map_name == "random") {
                hs::RandomFamilySpec spec;
                if (check_name == "heinz") {
                    spec.kind = hs::RandomFamilySpec::Kind::PlanarComplex;
                    spec.zero_at_origin = true;
                } else if (check_name == "modulus") {
                    spec.kind = hs::RandomFamilySpec::Kind::VectorN;
                    spec.n = 3;
                }
                field = hs::emit_ratio_field(check_name,
                                             hs::gen_random_harmonic(spec, field_seed), grid,
                                             field_out);
            } else {
                throw std::invalid_argument("--map expects extremal|random|constant:VAL");
            }
            std::cerr << "max_ratio " << hs::format_double(field.max_ratio) << " at ("
                      << hs::format_double(field.argmax.real()) << ","
                      << hs::format_double(field.argmax.imag()) << ")\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
