#include "hs/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "hs/random_maps.hpp"
#include "hs/util.hpp"

namespace hs {

namespace {
constexpr double kPi = std::numbers::pi;
}

cd strip_map(DiskPoint z) {
    cd omega = (1.0 + z.value()) / (1.0 - z.value());
    return cd(0.0, 2.0 / kPi) * std::log(omega);
}

DiskPoint strip_map_inverse(cd w) {
    if (std::abs(w.real()) >= 1.0)
        throw std::domain_error("strip_map_inverse: |Re w| must be < 1");
    // w = (2i/pi) log(omega)  =>  omega = exp(-i pi w / 2)
    cd omega = std::exp(cd(0.0, -kPi / 2.0) * w);
    return DiskPoint((omega - 1.0) / (omega + 1.0));
}

double extremal_real(DiskPoint z) {
    double x = z.re(), y = z.im();
    return (2.0 / kPi) * std::atan2(2.0 * y, 1.0 - x * x - y * y);
}

double extremal_real_grad_norm(DiskPoint z) {
    cd one_minus_z2 = 1.0 - z.value() * z.value();
    return kFourOverPi / std::abs(one_minus_z2);
}

HarmonicMap extremal_at(DiskPoint z0, const ExtremalSpec& spec, int degree) {
    MobiusAutomorphism pre =
        spec.precompose.is_identity() ? MobiusAutomorphism(z0, 0.0) : spec.precompose;
    // rotation of the disk before the precomposition folds into the phase
    cd alpha = pre.a().value();
    double theta = pre.theta() + spec.rotate;

    // With m(z) = e^{i theta}(z - alpha)/(1 - conj(alpha) z):
    //   (1 + m)/(1 - m) = (p + q z)/(s + t z),  |q/p| = |t/s| = 1,
    // so the analytic completion -(2i/pi) log((1+m)/(1-m)) has an exact
    // log expansion with 1/k coefficients.
    cd rot = std::polar(1.0, theta);
    cd p = 1.0 - rot * alpha;
    cd q = rot - std::conj(alpha);
    cd s = 1.0 + rot * alpha;
    cd t = -(rot + std::conj(alpha));
    cd u = q / p;
    cd v = t / s;

    TrigSeries c(degree);
    // Both p and s have positive real part, so Arg p - Arg s never wraps.
    c.at(0) = cd(spec.sign * (2.0 / kPi) * (std::arg(p) - std::arg(s)), 0.0);
    cd upow = u, vpow = v;
    double par = 1.0;  // (-1)^{k+1}
    for (int k = 1; k <= degree; ++k) {
        cd a_k = cd(0.0, -2.0 / kPi) * par * (upow - vpow) / static_cast<double>(k);
        c.at(k) = spec.sign * 0.5 * a_k;
        c.at(-k) = std::conj(c.at(k));
        upow *= u;
        vpow *= v;
        par = -par;
    }
    return HarmonicMap::real_scalar(std::move(c));
}

double extremal_ratio_at(DiskPoint z, const MobiusAutomorphism& m, double sign) {
    cd w = m.apply_raw(z.value());
    double fw = sign * extremal_real(DiskPoint(w));
    double num = 1.0 - std::norm(w);
    double den = std::abs(1.0 - w * w) * (1.0 - fw * fw);
    return num / den;
}

std::array<BoundReport, 3> check_classical_schwarz(const AnalyticPoly& f, DiskPoint z,
                                                   DiskPoint w, double tol) {
    if (std::abs(f.eval(cd(0.0))) > 1e-12)
        throw std::invalid_argument("check_classical_schwarz: f(0) must be 0");
    // max-modulus principle: boundary grid sup bounds the interior
    double sup = 0.0;
    constexpr int kGrid = 2048;
    for (int j = 0; j < kGrid; ++j)
        sup = std::max(sup, std::abs(f.eval(std::polar(
                                1.0, 2.0 * kPi * static_cast<double>(j) / kGrid))));
    // sup == 1 is admissible: rotations are the equality case of the lemma
    if (sup > 1.0 + 1e-12)
        throw std::invalid_argument("check_classical_schwarz: f does not map into the disk");

    DiskPoint fz(f.eval(z.value()));
    DiskPoint fw(f.eval(w.value()));
    BoundReport contraction = make_report("schwarz_pick_distance", z.value(), w.value(),
                                          pseudo_hyperbolic(fz, fw),
                                          pseudo_hyperbolic(z, w), tol);
    BoundReport derivative = make_report(
        "schwarz_pick_derivative", z.value(), std::nullopt, std::abs(f.deriv(z.value())),
        (1.0 - std::norm(fz.value())) / (1.0 - std::norm(z.value())), tol);
    BoundReport lemma = make_report("schwarz_origin", z.value(), std::nullopt,
                                    std::abs(fz.value()), z.abs(), tol);
    return {contraction, derivative, lemma};
}

BoundReport check_heinz(const HarmonicMap& f, DiskPoint z, double tol) {
    if (f.kind() != MapKind::PlanarComplex)
        throw std::invalid_argument("check_heinz: map must be planar complex");
    if (std::abs(f.coord(0).at(0)) > 1e-12)
        throw std::invalid_argument("check_heinz: f(0) must be 0");
    double lhs = std::abs(f.value_complex(z));
    double rhs = kFourOverPi * std::atan(z.abs());
    return make_report("heinz", z.value(), std::nullopt, lhs, rhs, tol);
}

BoundReport check_gradient_bound(const HarmonicMap& f, DiskPoint z, double tol) {
    if (f.kind() != MapKind::RealVector || f.coord_count() != 1)
        throw std::invalid_argument("check_gradient_bound: map must be real scalar");
    double fz = f.value_scalar(z);
    if (std::abs(fz) >= 1.0)
        throw std::invalid_argument("check_gradient_bound: |f(z)| must be < 1");
    double lhs = jacobian(f, z).gradient_norm();
    double rhs = kFourOverPi * (1.0 - fz * fz) / (1.0 - std::norm(z.value()));
    return make_report("gradient_bound", z.value(), std::nullopt, lhs, rhs, tol);
}

std::optional<BoundReport> check_modulus_gradient_bound(const HarmonicMap& f, DiskPoint z,
                                                        double tol) {
    auto lhs = grad_norm_of_modulus(f, z);
    if (!lhs) return std::nullopt;
    double norm2 = 0.0;
    for (double v : f.value(z)) norm2 += v * v;
    if (norm2 >= 1.0)
        throw std::invalid_argument("check_modulus_gradient_bound: |f(z)| must be < 1");
    double rhs = kFourOverPi * (1.0 - norm2) / (1.0 - std::norm(z.value()));
    return make_report("modulus_gradient_bound", z.value(), std::nullopt, *lhs, rhs, tol);
}

BoundReport check_hyperbolic_contraction(const HarmonicMap& f, DiskPoint z, DiskPoint w,
                                         double tol, double density_scale) {
    if (f.kind() != MapKind::RealVector || f.coord_count() != 1)
        throw std::invalid_argument("check_hyperbolic_contraction: map must be real scalar");
    double fz = f.value_scalar(z);
    double fw = f.value_scalar(w);
    if (std::abs(fz) >= 1.0 || std::abs(fw) >= 1.0)
        throw std::invalid_argument("check_hyperbolic_contraction: values must lie in (-1,1)");
    double lhs = density_scale * interval_hyperbolic_distance(fz, fw);
    double rhs = density_scale * kFourOverPi * hyperbolic_distance(z, w);
    return make_report("hyperbolic_contraction", z.value(), w.value(), lhs, rhs, tol);
}

BoundReport check_qc_bound(const HarmonicMap& f, double K, DiskPoint z, double tol) {
    if (f.kind() != MapKind::PlanarComplex)
        throw std::invalid_argument("check_qc_bound: map must be planar complex");
    if (K < 1.0) throw std::invalid_argument("check_qc_bound: K must be >= 1");
    Dilatation d = dilatation(f, z);
    if (!d.orientation_ok)
        throw std::domain_error("check_qc_bound: degenerate point (|f_z| <= |f_zbar|)");
    double lhs = d.abs_fz + d.abs_fzbar;
    double rhs = K * (1.0 - std::norm(f.value_complex(z))) / (1.0 - std::norm(z.value()));
    return make_report("qc_bound", z.value(), std::nullopt, lhs, rhs, tol);
}

std::optional<BoundReport> check_analytic_modulus_bound(const std::vector<AnalyticPoly>& f,
                                                        DiskPoint z, double tol) {
    cd zv = z.value();
    double norm2 = 0.0;
    cd inner(0.0);  // sum conj(f_i) f_i'
    for (const auto& p : f) {
        cd v = p.eval(zv);
        norm2 += std::norm(v);
        inner += std::conj(v) * p.deriv(zv);
    }
    double norm = std::sqrt(norm2);
    if (norm < 1e-8) return std::nullopt;
    if (norm >= 1.0)
        throw std::invalid_argument("check_analytic_modulus_bound: |f(z)| must be < 1");
    // |grad |f|| = 2 |d|f|/dz| = |sum conj(f_i) f_i'| / |f|
    double lhs = std::abs(inner) / norm;
    double rhs = (1.0 - norm2) / (1.0 - std::norm(zv));
    return make_report("analytic_modulus_bound", zv, std::nullopt, lhs, rhs, tol);
}

std::array<BoundReport, 3> verify_strip_inequality(double r, double t, double tol_identity) {
    if (!(r > 0.0)) throw std::invalid_argument("verify_strip_inequality: r must be > 0");
    if (!(std::abs(t) < kPi / 2.0))
        throw std::invalid_argument("verify_strip_inequality: |t| must be < pi/2");
    cd omega = std::polar(r, t);
    cd b = (omega - 1.0) / (omega + 1.0);
    double denom = r * r + 2.0 * r * std::cos(t) + 1.0;

    double direct1 = 1.0 - std::norm(b);
    double closed1 = 4.0 * r * std::cos(t) / denom;
    BoundReport id1 = make_report("strip_identity_one_minus_b2", cd(r, t), std::nullopt,
                                  std::abs(direct1 - closed1), tol_identity, 0.0);

    double direct2 = std::abs(1.0 - b * b);
    double closed2 = 4.0 * r / denom;
    BoundReport id2 = make_report("strip_identity_abs_one_minus_b2", cd(r, t), std::nullopt,
                                  std::abs(direct2 - closed2), tol_identity, 0.0);

    BoundReport cosine = make_report("strip_cosine_inequality", cd(r, t), std::nullopt,
                                     std::abs(std::cos(t)),
                                     1.0 - (4.0 / (kPi * kPi)) * t * t, 1e-12);
    return {id1, id2, cosine};
}

std::vector<double> counterexample_default_radii() {
    std::vector<double> radii;
    for (int k = 1; k <= 10; ++k) radii.push_back(1.0 - std::pow(2.0, -k));
    return radii;
}

std::vector<RadialScanRow> counterexample_radial_scan(const std::vector<double>& radii) {
    if (radii.empty()) throw std::invalid_argument("radial scan: empty radius list");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (radii[i] < 0.0 || radii[i] >= 1.0)
            throw std::invalid_argument("radial scan: radii must lie in [0, 1)");
        if (i > 0 && radii[i] <= radii[i - 1])
            throw std::invalid_argument("radial scan: radii must be ascending");
    }
    double rmax = radii.back();
    // log-singular boundary derivative: raise the truncation near the boundary
    int degree = std::max(4096, static_cast<int>(std::ceil(16.0 / (1.0 - rmax))));
    HarmonicMap f = HarmonicMap::from_boundary(counterexample_boundary(), degree);

    std::vector<RadialScanRow> rows(radii.size());
    parallel_for(radii.size(), [&](std::size_t i) {
        RadialScanRow row;
        row.r = radii[i];
        DiskPoint z(row.r, 0.0);
        row.abs_f = std::abs(f.value_complex(z));
        auto [fz, fzb] = f.wirtinger(0, z);
        row.grad_norm = std::abs(fz) + std::abs(fzb);
        double one_minus_r2 = 1.0 - row.r * row.r;
        row.m_ratio = (1.0 - row.abs_f * row.abs_f) / one_minus_r2;
        row.bound_ratio = row.grad_norm * one_minus_r2 / (1.0 - row.abs_f * row.abs_f);
        row.truncation_ok = f.tail_weight(row.r) <= 1e-4 * row.grad_norm;
        rows[i] = row;
    });
    return rows;
}

RatioField gradient_ratio_field(const HarmonicMap& f, const GridSpec& grid) {
    RatioField field;
    field.grid = grid;
    field.values.assign(
        static_cast<std::size_t>(grid.radial) * static_cast<std::size_t>(grid.angular), 0.0);
    parallel_for(static_cast<std::size_t>(grid.radial), [&](std::size_t i) {
        double r = grid.radius_at(static_cast<int>(i));
        for (int j = 0; j < grid.angular; ++j) {
            DiskPoint z(std::polar(r, grid.angle_at(j)));
            BoundReport rep = check_gradient_bound(f, z);
            field.values[i * static_cast<std::size_t>(grid.angular) +
                         static_cast<std::size_t>(j)] = rep.ratio;
        }
    });
    field.max_ratio = 0.0;
    for (int i = 0; i < grid.radial; ++i)
        for (int j = 0; j < grid.angular; ++j)
            if (field.at(i, j) >= field.max_ratio) {
                field.max_ratio = field.at(i, j);
                field.argmax = std::polar(grid.radius_at(i), grid.angle_at(j));
            }
    return field;
}

namespace {

RatioField closed_form_extremal_field(const MobiusAutomorphism& m, double sign,
                                      const GridSpec& grid) {
    RatioField field;
    field.grid = grid;
    field.values.assign(
        static_cast<std::size_t>(grid.radial) * static_cast<std::size_t>(grid.angular), 0.0);
    for (int i = 0; i < grid.radial; ++i)
        for (int j = 0; j < grid.angular; ++j) {
            DiskPoint z(std::polar(grid.radius_at(i), grid.angle_at(j)));
            double ratio = extremal_ratio_at(z, m, sign);
            field.values[static_cast<std::size_t>(i) * static_cast<std::size_t>(grid.angular) +
                         static_cast<std::size_t>(j)] = ratio;
            if (ratio >= field.max_ratio) {
                field.max_ratio = ratio;
                field.argmax = z.value();
            }
        }
    return field;
}

}  // namespace

SharpnessResult sharpness_search(SharpnessFamily family, DiskPoint z0, int budget,
                                 std::uint64_t seed) {
    if (budget < 1) throw std::invalid_argument("sharpness_search: budget must be >= 1");
    SharpnessResult result;
    GridSpec field_grid;

    switch (family) {
        case SharpnessFamily::ExtremalRotations: {
            double best = -1.0;
            double best_rot = 0.0;
            for (int i = 0; i < budget; ++i) {
                double rot = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(budget);
                MobiusAutomorphism m(DiskPoint(), rot);
                double ratio = extremal_ratio_at(z0, m, 1.0);
                if (ratio > best) {
                    best = ratio;
                    best_rot = rot;
                }
            }
            result.best_ratio = best;
            result.best_spec.rotate = best_rot;
            result.field = closed_form_extremal_field(
                MobiusAutomorphism(DiskPoint(), best_rot), 1.0, field_grid);
            return result;
        }
        case SharpnessFamily::ExtremalMobius: {
            // coarse grid over the precomposition center, then local refinement
            int levels = 3;
            int per_level = std::max(4, budget / levels);
            int side = std::max(2, static_cast<int>(std::sqrt(static_cast<double>(per_level))));
            cd center = z0.value();
            double span = 0.4;
            double best = -1.0;
            cd best_a = center;
            for (int level = 0; level < levels; ++level) {
                for (int ix = 0; ix < side; ++ix)
                    for (int iy = 0; iy < side; ++iy) {
                        double dx = span * (2.0 * ix / std::max(1, side - 1) - 1.0);
                        double dy = span * (2.0 * iy / std::max(1, side - 1) - 1.0);
                        cd a = center + cd(dx, dy);
                        if (std::abs(a) >= DiskPoint::kMaxAbs) continue;
                        MobiusAutomorphism m{DiskPoint(a), 0.0};
                        double ratio = extremal_ratio_at(z0, m, 1.0);
                        if (ratio > best) {
                            best = ratio;
                            best_a = a;
                        }
                    }
                center = best_a;
                span /= static_cast<double>(side);
            }
            result.best_ratio = best;
            result.best_spec.precompose = MobiusAutomorphism(DiskPoint(best_a), 0.0);
            result.field = closed_form_extremal_field(result.best_spec.precompose, 1.0,
                                                      field_grid);
            return result;
        }
        case SharpnessFamily::RandomRealMaps: {
            RandomFamilySpec spec;
            spec.kind = RandomFamilySpec::Kind::RealScalar;
            spec.degree = 16;
            std::vector<double> ratios(static_cast<std::size_t>(budget));
            parallel_for(static_cast<std::size_t>(budget), [&](std::size_t i) {
                HarmonicMap f = gen_random_harmonic(spec, seed + i);
                ratios[i] = check_gradient_bound(f, z0).ratio;
            });
            double best = -1.0;
            std::size_t best_i = 0;
            for (std::size_t i = 0; i < ratios.size(); ++i)
                if (ratios[i] > best) {
                    best = ratios[i];
                    best_i = i;
                }
            result.best_ratio = best;
            result.best_seed = seed + best_i;
            result.field = gradient_ratio_field(gen_random_harmonic(spec, result.best_seed),
                                                field_grid);
            return result;
        }
    }
    throw std::logic_error("sharpness_search: bad family");
}

}  // namespace hs
