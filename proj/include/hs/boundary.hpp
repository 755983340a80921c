#pragma once

#include <map>
#include <string>
#include <vector>

#include "hs/fourier.hpp"

namespace hs {

/// Circle data in one of three representations. A real vector-valued function
/// carries one coordinate per target dimension; a planar complex function is
/// stored as two real coordinates (re, im) with planar_complex set.
struct BoundaryFunction {
    enum class Repr { Fourier, Samples, Rule };

    Repr repr = Repr::Fourier;
    int target_dim = 1;
    bool planar_complex = false;

    std::vector<TrigSeries> fourier;           // per coordinate
    std::vector<std::vector<double>> samples;  // per coordinate, uniform on [0, 2pi)
    std::string rule_name;
    std::map<std::string, double> rule_params;

    /// Boundary value at angle theta, one entry per coordinate.
    std::vector<double> value(double theta) const;
    /// Scalar (dim 1) or planar (dim 2, re + i im) value.
    cd value_complex(double theta) const;

    static BoundaryFunction from_json_file(const std::string& path);
    static BoundaryFunction from_json_text(const std::string& text);
};

/// psi(theta) = a (2 theta - theta log|theta|) on [-pi, pi], psi(0) = 0,
/// with a = 1/(2 - log pi) so that psi(+-pi) = +-pi; increasing on |theta| < e.
double counterexample_psi(double theta);
double counterexample_psi_prime(double theta);
double counterexample_a();

/// F(theta) = e^{i psi(theta)}: continuous degree-1 circle map whose harmonic
/// extension has radially unbounded gradient toward z = 1.
BoundaryFunction counterexample_boundary();

/// Boundary data of the strip extremal: sign * sgn(sin(theta - rotation)).
BoundaryFunction extremal_strip_boundary(double rotation = 0.0, double sign = 1.0);

}  // namespace hs
