#pragma once

#include <cstdint>
#include <random>
#include <variant>
#include <vector>

#include "hs/harmonic.hpp"

namespace hs {

/// Deterministic generator: mt19937_64 with uniforms built from raw 64-bit
/// draws, so sequences are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    double uniform() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    cd uniform_complex(double amplitude) {
        double re = uniform(-amplitude, amplitude);
        double im = uniform(-amplitude, amplitude);
        return {re, im};
    }
    /// Uniform over the disk |z| <= rmax (rejection-free, area measure).
    cd in_disk(double rmax);

private:
    std::mt19937_64 eng_;
};

struct RandomFamilySpec {
    enum class Kind { RealScalar, VectorN, PlanarComplex, AnalyticPoly, AnalyticVector };

    Kind kind = Kind::RealScalar;
    int degree = 16;
    int n = 1;              // target dimension (VectorN / AnalyticVector)
    double margin = 0.95;   // boundary-grid sup after rescaling
    bool zero_at_origin = false;
    double anti_scale = 0.0;  // PlanarComplex: antianalytic amplitude relative to analytic
};

/// Deterministic in (spec, seed); the returned map's boundary-grid sup equals
/// the margin (maximum principle then bounds the interior). Degree-0 real
/// scalars are constants strictly inside (-margin, margin).
HarmonicMap gen_random_harmonic(const RandomFamilySpec& spec, std::uint64_t seed);

std::vector<AnalyticPoly> gen_random_analytic(const RandomFamilySpec& spec,
                                              std::uint64_t seed);

using GeneratedMap = std::variant<HarmonicMap, std::vector<AnalyticPoly>>;
GeneratedMap gen_random_map(const RandomFamilySpec& spec, std::uint64_t seed);

}  // namespace hs
