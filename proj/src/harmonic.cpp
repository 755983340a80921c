#include "hs/harmonic.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "hs/util.hpp"

namespace hs {

namespace {
constexpr double kPi = std::numbers::pi;
}

cd AnalyticPoly::eval(cd z) const {
    cd acc(0.0);
    for (int k = degree(); k >= 0; --k) acc = acc * z + a[static_cast<std::size_t>(k)];
    return acc;
}

cd AnalyticPoly::deriv(cd z) const {
    cd acc(0.0);
    for (int k = degree(); k >= 1; --k)
        acc = acc * z + static_cast<double>(k) * a[static_cast<std::size_t>(k)];
    return acc;
}

HarmonicMap HarmonicMap::real_vector(std::vector<TrigSeries> coords) {
    if (coords.empty()) throw std::invalid_argument("HarmonicMap: no coordinates");
    for (auto& s : coords) {
        if (!s.conjugate_symmetric(1e-12))
            throw std::invalid_argument("HarmonicMap: real coordinate lacks conjugate symmetry");
        s.symmetrize();
    }
    return HarmonicMap(MapKind::RealVector, std::move(coords));
}

HarmonicMap HarmonicMap::real_scalar(TrigSeries coeffs) {
    std::vector<TrigSeries> v;
    v.push_back(std::move(coeffs));
    return real_vector(std::move(v));
}

HarmonicMap HarmonicMap::planar(TrigSeries coeffs) {
    std::vector<TrigSeries> v;
    v.push_back(std::move(coeffs));
    return HarmonicMap(MapKind::PlanarComplex, std::move(v));
}

HarmonicMap HarmonicMap::from_boundary(const BoundaryFunction& b, int degree) {
    if (degree < 0) throw std::invalid_argument("from_boundary: negative degree");
    using Repr = BoundaryFunction::Repr;
    switch (b.repr) {
        case Repr::Fourier: {
            std::vector<TrigSeries> coords;
            for (const auto& s : b.fourier) coords.push_back(s.truncated(degree));
            if (b.planar_complex && coords.size() == 2) {
                TrigSeries c(degree);
                for (int k = -degree; k <= degree; ++k)
                    c.at(k) = coords[0].at(k) + cd(0.0, 1.0) * coords[1].at(k);
                return planar(std::move(c));
            }
            return real_vector(std::move(coords));
        }
        case Repr::Samples: {
            const std::size_t m = b.samples.at(0).size();
            if (b.planar_complex && b.samples.size() == 2) {
                std::vector<cd> buf(m);
                for (std::size_t j = 0; j < m; ++j) buf[j] = cd(b.samples[0][j], b.samples[1][j]);
                return planar(fourier_from_samples(buf).truncated(degree));
            }
            std::vector<TrigSeries> coords;
            for (const auto& s : b.samples) {
                std::vector<cd> buf(s.begin(), s.end());
                auto series = fourier_from_samples(buf).truncated(degree);
                series.symmetrize();
                coords.push_back(std::move(series));
            }
            return real_vector(std::move(coords));
        }
        case Repr::Rule: {
            const std::size_t m = next_pow2(std::max<std::size_t>(4 * (static_cast<std::size_t>(degree) + 1), 1024));
            if (b.planar_complex) {
                std::vector<cd> buf(m);
                for (std::size_t j = 0; j < m; ++j)
                    buf[j] = b.value_complex(2.0 * kPi * static_cast<double>(j) / static_cast<double>(m));
                return planar(fourier_from_samples(buf).truncated(degree));
            }
            std::vector<TrigSeries> coords;
            for (int i = 0; i < b.target_dim; ++i) {
                std::vector<cd> buf(m);
                for (std::size_t j = 0; j < m; ++j)
                    buf[j] = b.value(2.0 * kPi * static_cast<double>(j) / static_cast<double>(m))[static_cast<std::size_t>(i)];
                auto series = fourier_from_samples(buf).truncated(degree);
                series.symmetrize();
                coords.push_back(std::move(series));
            }
            return real_vector(std::move(coords));
        }
    }
    throw std::logic_error("from_boundary: bad repr");
}

int HarmonicMap::target_dim() const {
    return kind_ == MapKind::PlanarComplex ? 2 : static_cast<int>(coords_.size());
}

int HarmonicMap::degree() const {
    int d = 0;
    for (const auto& s : coords_) d = std::max(d, s.degree);
    return d;
}

cd HarmonicMap::eval_coord(std::size_t i, cd z) const {
    const TrigSeries& s = coords_[i];
    cd pos(0.0);
    for (int k = s.degree; k >= 0; --k) pos = pos * z + s.at(k);
    cd zb = std::conj(z);
    cd neg(0.0);
    for (int k = s.degree; k >= 1; --k) neg = neg * zb + s.at(-k);
    return pos + neg * zb;
}

std::vector<double> HarmonicMap::value(DiskPoint z) const {
    std::vector<double> out;
    if (kind_ == MapKind::PlanarComplex) {
        cd v = eval_coord(0, z.value());
        out = {v.real(), v.imag()};
    } else {
        out.reserve(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i)
            out.push_back(eval_coord(i, z.value()).real());
    }
    return out;
}

cd HarmonicMap::value_complex(DiskPoint z) const {
    if (kind_ == MapKind::PlanarComplex) return eval_coord(0, z.value());
    if (coords_.size() == 1) return {eval_coord(0, z.value()).real(), 0.0};
    throw std::invalid_argument("value_complex: map is neither scalar nor planar");
}

double HarmonicMap::value_scalar(DiskPoint z) const {
    if (kind_ != MapKind::RealVector || coords_.size() != 1)
        throw std::invalid_argument("value_scalar: map is not real scalar");
    return eval_coord(0, z.value()).real();
}

std::pair<cd, cd> HarmonicMap::wirtinger(std::size_t i, DiskPoint z) const {
    const TrigSeries& s = coords_[i];
    cd fz(0.0);
    for (int k = s.degree; k >= 1; --k) fz = fz * z.value() + static_cast<double>(k) * s.at(k);
    cd zb = std::conj(z.value());
    cd fzb(0.0);
    for (int k = s.degree; k >= 1; --k) fzb = fzb * zb + static_cast<double>(k) * s.at(-k);
    return {fz, fzb};
}

double HarmonicMap::tail_weight(double r) const {
    double w = 0.0;
    for (const auto& s : coords_) {
        int n = s.degree;
        int lo = std::max(1, n - 32);
        double m = 0.0;
        for (int k = lo; k <= n; ++k)
            m = std::max(m, static_cast<double>(k) * (std::abs(s.at(k)) + std::abs(s.at(-k))));
        // geometric continuation of the last modes past the cutoff
        w = std::max(w, m * std::pow(r, n) / std::max(1e-300, 1.0 - r));
    }
    return w;
}

double JacobianAtPoint::gradient_norm() const {
    if (rows.size() != 1)
        throw std::invalid_argument("gradient_norm: map is not scalar");
    return std::hypot(rows[0][0], rows[0][1]);
}

double JacobianAtPoint::operator_norm() const {
    if (!wirtinger_valid)
        throw std::invalid_argument("operator_norm: Wirtinger derivatives unavailable");
    return std::abs(fz) + std::abs(fzbar);
}

JacobianAtPoint jacobian(const HarmonicMap& map, DiskPoint z) {
    JacobianAtPoint j;
    if (map.kind() == MapKind::PlanarComplex) {
        auto [fz, fzb] = map.wirtinger(0, z);
        j.fz = fz;
        j.fzbar = fzb;
        j.wirtinger_valid = true;
        cd dx = fz + fzb;
        cd dy = cd(0.0, 1.0) * (fz - fzb);
        j.rows = {{dx.real(), dy.real()}, {dx.imag(), dy.imag()}};
    } else {
        j.rows.reserve(map.coord_count());
        for (std::size_t i = 0; i < map.coord_count(); ++i) {
            auto [fz, fzb] = map.wirtinger(i, z);
            cd dx = fz + fzb;
            cd dy = cd(0.0, 1.0) * (fz - fzb);
            j.rows.push_back({dx.real(), dy.real()});
            if (map.coord_count() == 1) {
                j.fz = fz;
                j.fzbar = fzb;
                j.wirtinger_valid = true;
            }
        }
    }
    return j;
}

HarmonicMap harmonic_conjugate(const HarmonicMap& map) {
    if (map.kind() != MapKind::RealVector || map.coord_count() != 1)
        throw std::invalid_argument("harmonic_conjugate: map must be real scalar");
    const TrigSeries& f = map.coord(0);
    TrigSeries h(f.degree);
    for (int k = 1; k <= f.degree; ++k) {
        h.at(k) = cd(0.0, -1.0) * f.at(k);
        h.at(-k) = cd(0.0, 1.0) * f.at(-k);
    }
    return HarmonicMap::real_scalar(std::move(h));
}

AnalyticPoly analytic_completion(const HarmonicMap& map) {
    if (map.kind() != MapKind::RealVector || map.coord_count() != 1)
        throw std::invalid_argument("analytic_completion: map must be real scalar");
    const TrigSeries& f = map.coord(0);
    AnalyticPoly p;
    p.a.resize(static_cast<std::size_t>(f.degree) + 1);
    p.a[0] = cd(f.at(0).real(), 0.0);
    for (int k = 1; k <= f.degree; ++k) p.a[static_cast<std::size_t>(k)] = 2.0 * f.at(k);
    return p;
}

Dilatation dilatation(const HarmonicMap& map, DiskPoint z) {
    if (map.kind() != MapKind::PlanarComplex)
        throw std::invalid_argument("dilatation: map must be planar complex");
    auto [fz, fzb] = map.wirtinger(0, z);
    Dilatation d;
    d.abs_fz = std::abs(fz);
    d.abs_fzbar = std::abs(fzb);
    d.orientation_ok = d.abs_fz > d.abs_fzbar;
    d.K = d.orientation_ok ? (d.abs_fz + d.abs_fzbar) / (d.abs_fz - d.abs_fzbar)
                           : std::numeric_limits<double>::infinity();
    return d;
}

std::optional<double> grad_norm_of_modulus(const HarmonicMap& map, DiskPoint z, double eps) {
    std::vector<double> f = map.value(z);
    double norm2 = 0.0;
    for (double v : f) norm2 += v * v;
    double norm = std::sqrt(norm2);
    if (norm < eps) return std::nullopt;
    JacobianAtPoint j = jacobian(map, z);
    double gx = 0.0, gy = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        gx += f[i] * j.rows[i][0];
        gy += f[i] * j.rows[i][1];
    }
    return std::hypot(gx, gy) / norm;
}

std::vector<double> poisson_extend_quadrature(const BoundaryFunction& b, DiskPoint z, int nodes) {
    if (nodes < 256) throw std::invalid_argument("poisson_extend_quadrature: nodes must be >= 256");
    if (b.repr == BoundaryFunction::Repr::Samples)
        nodes = static_cast<int>(b.samples.at(0).size());  // samples are the quadrature grid
    const double r = z.abs();
    const double theta = std::arg(z.value());
    const double r2 = r * r;
    std::vector<double> acc(static_cast<std::size_t>(b.target_dim), 0.0);
    for (int j = 0; j < nodes; ++j) {
        double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nodes);
        double kernel = (1.0 - r2) / (1.0 - 2.0 * r * std::cos(theta - t) + r2);
        std::vector<double> f = b.value(t);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += kernel * f[i];
    }
    for (double& v : acc) v /= static_cast<double>(nodes);
    return acc;
}

int recommended_quadrature_nodes(double r) {
    return std::max(1024, static_cast<int>(std::ceil(50.0 / std::max(1e-12, 1.0 - r))));
}

bool quadrature_nodes_sufficient(double r, int nodes) {
    return nodes >= static_cast<int>(std::ceil(50.0 / std::max(1e-12, 1.0 - r)));
}

double boundary_sup(const HarmonicMap& map, int grid) {
    double sup = 0.0;
    for (int j = 0; j < grid; ++j) {
        double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid);
        double n2 = 0.0;
        for (std::size_t i = 0; i < map.coord_count(); ++i) {
            cd v = map.coord(i).synthesize(t);
            n2 += (map.kind() == MapKind::PlanarComplex) ? std::norm(v) : v.real() * v.real();
        }
        sup = std::max(sup, std::sqrt(n2));
    }
    return sup;
}

double interior_sup(const HarmonicMap& map, int radial, int angular, double max_radius) {
    double sup = 0.0;
    for (int i = 0; i < radial; ++i) {
        double r = max_radius * static_cast<double>(i + 1) / static_cast<double>(radial);
        for (int j = 0; j < angular; ++j) {
            double t = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(angular);
            DiskPoint z(std::polar(r, t));
            double n2 = 0.0;
            for (double v : map.value(z)) n2 += v * v;
            sup = std::max(sup, std::sqrt(n2));
        }
    }
    return sup;
}

}  // namespace hs
