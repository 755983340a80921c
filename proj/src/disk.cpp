#include "hs/disk.hpp"

#include <cmath>
#include <stdexcept>

namespace hs {

double artanh(double x) {
    // 0.5 (log1p(x) - log1p(-x)) keeps full precision near both endpoints.
    return 0.5 * (std::log1p(x) - std::log1p(-x));
}

DiskPoint::DiskPoint(double re, double im) : DiskPoint(cd(re, im)) {}

DiskPoint::DiskPoint(cd z) : z_(z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
        throw std::invalid_argument("DiskPoint: non-finite coordinate");
    if (std::abs(z) >= kMaxAbs)
        throw std::invalid_argument("DiskPoint: |z| must be < 1 - 1e-15");
}

double pseudo_hyperbolic(DiskPoint z, DiskPoint w) {
    cd num = z.value() - w.value();
    cd den = 1.0 - z.value() * std::conj(w.value());
    return std::abs(num) / std::abs(den);
}

double hyperbolic_distance(DiskPoint z, DiskPoint w) {
    return 2.0 * artanh(pseudo_hyperbolic(z, w));
}

double interval_hyperbolic_distance(double x, double y) {
    if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0)
        throw std::invalid_argument("interval_hyperbolic_distance: arguments must lie in (-1,1)");
    return 2.0 * std::abs(artanh(x) - artanh(y));
}

DiskPoint MobiusAutomorphism::operator()(DiskPoint z) const {
    return DiskPoint(apply_raw(z.value()));
}

cd MobiusAutomorphism::apply_raw(cd z) const {
    cd rot = std::polar(1.0, theta_);
    return rot * (z - a_.value()) / (1.0 - std::conj(a_.value()) * z);
}

cd MobiusAutomorphism::derivative(cd z) const {
    cd rot = std::polar(1.0, theta_);
    cd den = 1.0 - std::conj(a_.value()) * z;
    return rot * (1.0 - std::norm(a_.value())) / (den * den);
}

MobiusAutomorphism MobiusAutomorphism::inverse() const {
    // m^{-1}(w) = e^{-i theta} (w - a') / (1 - conj(a') w) with a' = -e^{i theta} a.
    cd a_inv = -std::polar(1.0, theta_) * a_.value();
    return MobiusAutomorphism(DiskPoint(a_inv), -theta_);
}

MobiusAutomorphism MobiusAutomorphism::compose(const MobiusAutomorphism& inner) const {
    // c = this o inner is again an automorphism. Its zero is inner^{-1}(a_this);
    // the rotation is read off at a probe point away from the zero.
    DiskPoint a_new = inner.inverse()(a_);
    cd probe = (a_new.abs() < 0.5) ? cd(0.7, 0.0) : cd(0.0, 0.0);
    cd image = apply_raw(inner.apply_raw(probe));
    cd frame = (probe - a_new.value()) / (1.0 - std::conj(a_new.value()) * probe);
    cd rot = image / frame;
    return MobiusAutomorphism(a_new, std::arg(rot));
}

std::pair<MobiusAutomorphism, double> mobius_from_points(DiskPoint z, DiskPoint w) {
    // phi_z sends z to 0; with beta = arg(phi_z(w)) the map
    // m = phi_z^{-1} o rot(beta) satisfies m(0) = z and m(r) = w.
    MobiusAutomorphism phi_z(z, 0.0);
    cd wp = phi_z.apply_raw(w.value());
    double r = std::abs(wp);
    double beta = (r > 0.0) ? std::arg(wp) : 0.0;
    MobiusAutomorphism m = phi_z.inverse().compose(MobiusAutomorphism(DiskPoint(), beta));
    return {m, r};
}

}  // namespace hs
