#pragma once

#include <complex>
#include <utility>

namespace hs {

using cd = std::complex<double>;

/// Inverse hyperbolic tangent, accurate near the endpoints +-1.
double artanh(double x);

/// A point of the open unit disk. The constructor rejects |z| >= 1 - 1e-15;
/// near-boundary evaluations take an explicit radius instead.
class DiskPoint {
public:
    static constexpr double kMaxAbs = 1.0 - 1e-15;

    DiskPoint() : z_(0.0, 0.0) {}
    DiskPoint(double re, double im);
    explicit DiskPoint(cd z);

    cd value() const { return z_; }
    double re() const { return z_.real(); }
    double im() const { return z_.imag(); }
    double abs() const { return std::abs(z_); }

private:
    cd z_;
};

/// |z - w| / |1 - z conj(w)|, in [0, 1).
double pseudo_hyperbolic(DiskPoint z, DiskPoint w);

/// Hyperbolic distance with density 2/(1-|z|^2):
/// d = 2 artanh(pseudo_hyperbolic(z, w)).
double hyperbolic_distance(DiskPoint z, DiskPoint w);

/// Hyperbolic distance of (-1,1) with density 2/(1-t^2):
/// d = 2 |artanh(x) - artanh(y)|.
double interval_hyperbolic_distance(double x, double y);

/// m(z) = e^{i theta} (z - a) / (1 - conj(a) z); sends a to 0, maps the open
/// disk bijectively onto itself.
class MobiusAutomorphism {
public:
    MobiusAutomorphism() = default;  // identity
    MobiusAutomorphism(DiskPoint a, double theta) : a_(a), theta_(theta) {}

    DiskPoint a() const { return a_; }
    double theta() const { return theta_; }
    bool is_identity() const { return a_.abs() == 0.0 && theta_ == 0.0; }

    DiskPoint operator()(DiskPoint z) const;
    /// Same formula without the disk-membership guard; valid on the closed
    /// disk minus the pole (used for boundary samples).
    cd apply_raw(cd z) const;
    cd derivative(cd z) const;

    MobiusAutomorphism inverse() const;
    /// (*this) after inner: z -> this(inner(z)).
    MobiusAutomorphism compose(const MobiusAutomorphism& inner) const;

private:
    DiskPoint a_;
    double theta_ = 0.0;
};

/// Automorphism m with m(0) = z and m(r) = w, where
/// r = pseudo_hyperbolic(z, w). Both images hold to 1e-12.
std::pair<MobiusAutomorphism, double> mobius_from_points(DiskPoint z, DiskPoint w);

}  // namespace hs
