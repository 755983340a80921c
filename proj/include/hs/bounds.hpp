#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hs/disk.hpp"
#include "hs/harmonic.hpp"
#include "hs/report.hpp"

namespace hs {

inline constexpr double kFourOverPi = 4.0 / 3.14159265358979323846;

/// Conformal map g(z) = (2i/pi) log((1+z)/(1-z)) of the disk onto the
/// vertical strip {|Re w| < 1}. Principal log; (1+z)/(1-z) has positive real
/// part on the disk, so no branch cut is crossed.
cd strip_map(DiskPoint z);

/// Inverse of strip_map; requires |Re w| < 1.
DiskPoint strip_map_inverse(cd w);

/// The strip extremal f(z) = (2/pi) arctan(2y / (1 - x^2 - y^2)); real
/// harmonic into (-1,1), |grad f(0)| = 4/pi. Equals Re(-g(z)).
double extremal_real(DiskPoint z);

/// Closed-form Euclidean gradient norm of extremal_real: |4/(pi (1 - z^2))|.
double extremal_real_grad_norm(DiskPoint z);

/// Sharpness witness family: sign * extremal_real(m(z)) with m an
/// automorphism (precompose combined with a pre-rotation of the disk).
struct ExtremalSpec {
    MobiusAutomorphism precompose;  // identity -> re-center at the query point
    double rotate = 0.0;
    double sign = 1.0;
};

/// Series representation (exact log-expansion coefficients) of the extremal
/// precomposed so the gradient bound is attained at z0. With the default
/// spec the disk is re-centered at z0.
HarmonicMap extremal_at(DiskPoint z0, const ExtremalSpec& spec = {}, int degree = 2048);

/// Gradient-bound ratio at z of sign * extremal_real(m(z)), in closed form.
double extremal_ratio_at(DiskPoint z, const MobiusAutomorphism& m, double sign = 1.0);

// ---- inequality checkers -------------------------------------------------
// Callers certify the codomain hypothesis (grid sup < 1) once per map;
// each checker validates only the pointwise data it consumes.

/// Hyperbolic contraction, derivative bound, and |f(z)| <= |z| for an
/// analytic self-map with f(0) = 0. Verifies the sup norm on a boundary grid.
std::array<BoundReport, 3> check_classical_schwarz(const AnalyticPoly& f, DiskPoint z,
                                                   DiskPoint w, double tol = 1e-9);

/// |f(z)| <= (4/pi) arctan|z| for a planar harmonic self-map with f(0) = 0.
BoundReport check_heinz(const HarmonicMap& f, DiskPoint z, double tol = 1e-9);

/// |grad f(z)| <= (4/pi)(1 - f(z)^2)/(1 - |z|^2) for real scalar f into (-1,1).
BoundReport check_gradient_bound(const HarmonicMap& f, DiskPoint z, double tol = 1e-8);

/// |grad |f(z)|| <= (4/pi)(1 - |f(z)|^2)/(1 - |z|^2) for f into the ball of R^n.
/// nullopt when |f(z)| < 1e-8 (singular point, skipped).
std::optional<BoundReport> check_modulus_gradient_bound(const HarmonicMap& f, DiskPoint z,
                                                        double tol = 1e-8);

/// d_h(f(z), f(w)) <= (4/pi) d_h(z, w), interval metric on the left. Both
/// densities may be scaled by a common factor; verdicts are invariant.
BoundReport check_hyperbolic_contraction(const HarmonicMap& f, DiskPoint z, DiskPoint w,
                                         double tol = 1e-8, double density_scale = 1.0);

/// |f_z| + |f_zbar| <= K (1 - |f(z)|^2)/(1 - |z|^2) for a K-qc harmonic
/// self-map (operator-norm reading of |grad f|).
BoundReport check_qc_bound(const HarmonicMap& f, double K, DiskPoint z, double tol = 1e-8);

/// |grad |f(z)|| <= (1 - |f(z)|^2)/(1 - |z|^2) for analytic f into the ball
/// of C^n; note the constant is 1, not 4/pi.
std::optional<BoundReport> check_analytic_modulus_bound(const std::vector<AnalyticPoly>& f,
                                                        DiskPoint z, double tol = 1e-8);

/// Internal identities of the strip-map argument at omega = r e^{it}:
///   1 - |b|^2 = 4 r cos t / (r^2 + 2 r cos t + 1),
///   |1 - b^2| = 4 r / (r^2 + 2 r cos t + 1),   b = (omega - 1)/(omega + 1),
/// and the inequality |cos t| <= 1 - (4/pi^2) t^2 on (-pi/2, pi/2).
std::array<BoundReport, 3> verify_strip_inequality(double r, double t,
                                                   double tol_identity = 1e-12);

// ---- counterexample pipeline ---------------------------------------------

struct RadialScanRow {
    double r = 0.0;
    double abs_f = 0.0;
    double grad_norm = 0.0;     // |f_z| + |f_zbar|
    double bound_ratio = 0.0;   // grad_norm (1 - r^2) / (1 - |f|^2)
    double m_ratio = 0.0;       // (1 - |f|^2) / (1 - r^2), the bounded witness
    bool truncation_ok = true;  // tail estimate below 1e-4 of the gradient
};

/// Evaluates the Example-1.9 map along the positive radius. Radii ascending,
/// max < 1; series degree 4096, raised as 16/(1-r) near the boundary.
std::vector<RadialScanRow> counterexample_radial_scan(const std::vector<double>& radii);

/// 1 - 2^{-k} for k = 1..10.
std::vector<double> counterexample_default_radii();

// ---- sharpness search ------------------------------------------------------

enum class SharpnessFamily { ExtremalRotations, ExtremalMobius, RandomRealMaps };

struct SharpnessResult {
    double best_ratio = 0.0;
    ExtremalSpec best_spec;
    std::uint64_t best_seed = 0;  // RandomRealMaps only
    RatioField field;             // landscape of the best map
};

/// Maximizes the gradient-bound ratio at z0 over the family (coarse grid plus
/// local refinement within the evaluation budget).
SharpnessResult sharpness_search(SharpnessFamily family, DiskPoint z0, int budget,
                                 std::uint64_t seed = 0);

/// Gradient-bound ratio field of a real scalar map over a polar grid.
RatioField gradient_ratio_field(const HarmonicMap& f, const GridSpec& grid);

}  // namespace hs
