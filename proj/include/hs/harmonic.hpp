#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "hs/boundary.hpp"
#include "hs/disk.hpp"
#include "hs/fourier.hpp"

namespace hs {

enum class MapKind { RealVector, PlanarComplex };

/// Analytic polynomial sum a_k z^k; used for classical Schwarz checks and as
/// the analytic completion of a real harmonic function.
struct AnalyticPoly {
    std::vector<cd> a;  // a[0..degree]

    int degree() const { return static_cast<int>(a.size()) - 1; }
    cd eval(cd z) const;
    cd deriv(cd z) const;
};

/// Harmonic extension into R^n or C, stored as per-coordinate truncated
/// Fourier coefficients; the extension is sum_k c_k r^{|k|} e^{i k theta}.
/// Immutable after construction; all evaluation is pure.
class HarmonicMap {
public:
    /// Real vector-valued map; each coordinate must be conjugate-symmetric
    /// within 1e-12 (then symmetrized exactly).
    static HarmonicMap real_vector(std::vector<TrigSeries> coords);
    static HarmonicMap real_scalar(TrigSeries coeffs);
    /// Planar complex-valued map; coefficients unconstrained.
    static HarmonicMap planar(TrigSeries coeffs);
    /// Poisson extension of boundary data, truncated at the given degree.
    /// Rules are sampled at a power-of-two grid oversampling the degree.
    static HarmonicMap from_boundary(const BoundaryFunction& b, int degree);

    MapKind kind() const { return kind_; }
    /// Real target dimension (planar maps count as 2).
    int target_dim() const;
    std::size_t coord_count() const { return coords_.size(); }
    const TrigSeries& coord(std::size_t i) const { return coords_[i]; }
    int degree() const;

    /// Spectral Poisson extension at z (series backend).
    std::vector<double> value(DiskPoint z) const;
    cd value_complex(DiskPoint z) const;
    double value_scalar(DiskPoint z) const;
    /// Wirtinger derivatives (f_z, f_zbar) of coordinate i, from the series.
    std::pair<cd, cd> wirtinger(std::size_t i, DiskPoint z) const;
    /// Tail bound sum_{|k|>degree} |c_k| r^{|k|} is zero for a truncated
    /// series; this reports the largest per-mode weight near the cutoff,
    /// a proxy for how much boundary content the truncation dropped.
    double tail_weight(double r) const;

private:
    HarmonicMap(MapKind kind, std::vector<TrigSeries> coords)
        : kind_(kind), coords_(std::move(coords)) {}
    cd eval_coord(std::size_t i, cd z) const;

    MapKind kind_;
    std::vector<TrigSeries> coords_;
};

struct JacobianAtPoint {
    std::vector<std::array<double, 2>> rows;  // d/dx, d/dy per real coordinate
    cd fz{0.0}, fzbar{0.0};                   // scalar or planar case only
    bool wirtinger_valid = false;

    /// Euclidean norm of the gradient (scalar real maps).
    double gradient_norm() const;
    /// |f_z| + |f_zbar|, the operator norm (planar maps).
    double operator_norm() const;
};

/// Exact derivative of the truncated series; no finite differences.
JacobianAtPoint jacobian(const HarmonicMap& map, DiskPoint z);

/// Conjugate h with h(0) = 0: coefficients scaled by -i sign(k); f + ih is
/// analytic. Scalar real maps only.
HarmonicMap harmonic_conjugate(const HarmonicMap& map);

/// a = f + i conj(f) as a polynomial in z: a_0 = c_0, a_k = 2 c_k (k >= 1);
/// |a'(z)| equals the Euclidean norm of grad f.
AnalyticPoly analytic_completion(const HarmonicMap& map);

struct Dilatation {
    double abs_fz = 0.0;
    double abs_fzbar = 0.0;
    double K = 0.0;
    bool orientation_ok = false;  // |f_z| > |f_zbar| at the point
};

/// Pointwise dilatation K(z) = (|f_z|+|f_zbar|)/(|f_z|-|f_zbar|) of a planar map.
Dilatation dilatation(const HarmonicMap& map, DiskPoint z);

/// Euclidean norm of grad |f| at z, computed as |J^t f| / |f|.
/// Returns nullopt when |f(z)| < eps (|f| need not be differentiable at zeros).
std::optional<double> grad_norm_of_modulus(const HarmonicMap& map, DiskPoint z,
                                           double eps = 1e-8);

/// Direct Poisson kernel integral by periodic trapezoidal quadrature.
/// nodes >= 256 required; use recommended_quadrature_nodes near the boundary.
std::vector<double> poisson_extend_quadrature(const BoundaryFunction& b, DiskPoint z,
                                              int nodes);
/// max(1024, ceil(50/(1-r))): the kernel's angular width is ~(1-r).
int recommended_quadrature_nodes(double r);
bool quadrature_nodes_sufficient(double r, int nodes);

/// Sup of |F| (Euclidean norm over coordinates) on a uniform boundary grid.
/// By the maximum principle this bounds the interior sup for the map
/// synthesized from the same coefficients.
double boundary_sup(const HarmonicMap& map, int grid = 8192);
/// Sup of |f| on an interior polar grid; surrogate for maps whose truncated
/// boundary data overshoots (Gibbs).
double interior_sup(const HarmonicMap& map, int radial = 48, int angular = 96,
                    double max_radius = 0.995);

}  // namespace hs
