#include "hs/random_maps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hs {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kSupGrid = 8192;

double analytic_boundary_sup(const std::vector<AnalyticPoly>& polys, int grid = kSupGrid) {
    double sup = 0.0;
    for (int j = 0; j < grid; ++j) {
        cd w = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(grid));
        double n2 = 0.0;
        for (const auto& p : polys) n2 += std::norm(p.eval(w));
        sup = std::max(sup, std::sqrt(n2));
    }
    return sup;
}

TrigSeries draw_real_series(Rng& rng, int degree) {
    TrigSeries s(degree);
    s.at(0) = cd(rng.uniform(-0.5, 0.5), 0.0);
    for (int k = 1; k <= degree; ++k) {
        cd c = rng.uniform_complex(1.0) / static_cast<double>(1 + k);
        s.at(k) = c;
        s.at(-k) = std::conj(c);
    }
    return s;
}

void scale_series(std::vector<TrigSeries>& coords, double factor) {
    for (auto& s : coords)
        for (auto& c : s.c) c *= factor;
}

}  // namespace

cd Rng::in_disk(double rmax) {
    double r = rmax * std::sqrt(uniform());
    double t = uniform(0.0, 2.0 * kPi);
    return std::polar(r, t);
}

HarmonicMap gen_random_harmonic(const RandomFamilySpec& spec, std::uint64_t seed) {
    if (spec.degree < 0 || spec.degree > 64)
        throw std::invalid_argument("gen_random_harmonic: degree must be in [0, 64]");
    Rng rng(seed);
    using Kind = RandomFamilySpec::Kind;
    switch (spec.kind) {
        case Kind::RealScalar:
        case Kind::VectorN: {
            int n = (spec.kind == Kind::RealScalar) ? 1 : spec.n;
            std::vector<TrigSeries> coords;
            coords.reserve(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) coords.push_back(draw_real_series(rng, spec.degree));
            if (spec.zero_at_origin)
                for (auto& s : coords) s.at(0) = cd(0.0);
            if (spec.degree == 0 && n == 1) {
                // constant strictly inside (-margin, margin)
                coords[0].at(0) = cd(spec.margin * rng.uniform(-0.999, 0.999), 0.0);
                return HarmonicMap::real_vector(std::move(coords));
            }
            HarmonicMap probe = HarmonicMap::real_vector(coords);
            double sup = boundary_sup(probe, kSupGrid);
            if (sup < 1e-12) {
                coords[0].at(0) = cd(0.5 * spec.margin, 0.0);
                return HarmonicMap::real_vector(std::move(coords));
            }
            scale_series(coords, spec.margin / sup);
            return HarmonicMap::real_vector(std::move(coords));
        }
        case Kind::PlanarComplex: {
            TrigSeries s(spec.degree);
            s.at(0) = spec.zero_at_origin ? cd(0.0) : rng.uniform_complex(0.3);
            for (int k = 1; k <= spec.degree; ++k) {
                s.at(k) = rng.uniform_complex(1.0) / static_cast<double>(1 + k);
                s.at(-k) = spec.anti_scale * rng.uniform_complex(1.0) / static_cast<double>(1 + k);
            }
            HarmonicMap probe = HarmonicMap::planar(s);
            double sup = boundary_sup(probe, kSupGrid);
            if (sup < 1e-12) {
                if (spec.degree >= 1)
                    s.at(1) = cd(0.5 * spec.margin, 0.0);
                return HarmonicMap::planar(std::move(s));
            }
            for (auto& c : s.c) c *= spec.margin / sup;
            return HarmonicMap::planar(std::move(s));
        }
        default:
            throw std::invalid_argument("gen_random_harmonic: spec is an analytic family");
    }
}

std::vector<AnalyticPoly> gen_random_analytic(const RandomFamilySpec& spec,
                                              std::uint64_t seed) {
    using Kind = RandomFamilySpec::Kind;
    if (spec.kind != Kind::AnalyticPoly && spec.kind != Kind::AnalyticVector)
        throw std::invalid_argument("gen_random_analytic: spec is a harmonic family");
    if (spec.degree < 0 || spec.degree > 64)
        throw std::invalid_argument("gen_random_analytic: degree must be in [0, 64]");
    Rng rng(seed);
    int n = (spec.kind == Kind::AnalyticPoly) ? 1 : spec.n;
    std::vector<AnalyticPoly> polys(static_cast<std::size_t>(n));
    for (auto& p : polys) {
        p.a.resize(static_cast<std::size_t>(spec.degree) + 1);
        p.a[0] = spec.zero_at_origin ? cd(0.0) : rng.uniform_complex(0.3);
        for (int k = 1; k <= spec.degree; ++k)
            p.a[static_cast<std::size_t>(k)] =
                rng.uniform_complex(1.0) / static_cast<double>(1 + k);
    }
    double sup = analytic_boundary_sup(polys);
    if (sup < 1e-12) {
        if (spec.degree < 1) return polys;  // zero map
        polys[0].a.back() = cd(0.5 * spec.margin, 0.0);
        sup = analytic_boundary_sup(polys);
    }
    for (auto& p : polys)
        for (auto& c : p.a) c *= spec.margin / sup;
    return polys;
}

GeneratedMap gen_random_map(const RandomFamilySpec& spec, std::uint64_t seed) {
    using Kind = RandomFamilySpec::Kind;
    if (spec.kind == Kind::AnalyticPoly || spec.kind == Kind::AnalyticVector)
        return gen_random_analytic(spec, seed);
    return gen_random_harmonic(spec, seed);
}

}  // namespace hs
