#include "hs/boundary.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace hs {

namespace {

constexpr double kPi = std::numbers::pi;

double wrap_to_pi(double t) {
    t = std::fmod(t, 2.0 * kPi);
    if (t > kPi) t -= 2.0 * kPi;
    if (t < -kPi) t += 2.0 * kPi;
    return t;
}

std::vector<double> rule_value(const BoundaryFunction& b, double theta) {
    if (b.rule_name == "counterexample_psi") {
        double psi = counterexample_psi(wrap_to_pi(theta));
        return {std::cos(psi), std::sin(psi)};
    }
    if (b.rule_name == "extremal_strip") {
        double rot = 0.0, sign = 1.0;
        if (auto it = b.rule_params.find("rotation"); it != b.rule_params.end()) rot = it->second;
        if (auto it = b.rule_params.find("sign"); it != b.rule_params.end()) sign = it->second;
        double s = std::sin(theta - rot);
        return {sign * (s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0))};
    }
    throw std::invalid_argument("BoundaryFunction: unknown rule '" + b.rule_name + "'");
}

}  // namespace

std::vector<double> BoundaryFunction::value(double theta) const {
    switch (repr) {
        case Repr::Fourier: {
            std::vector<double> out;
            out.reserve(fourier.size());
            for (const auto& s : fourier) out.push_back(s.synthesize(theta).real());
            return out;
        }
        case Repr::Samples: {
            // Nearest-sample lookup; quadrature callers use the sample grid itself.
            std::vector<double> out;
            out.reserve(samples.size());
            for (const auto& s : samples) {
                double pos = wrap_to_pi(theta);
                if (pos < 0.0) pos += 2.0 * kPi;
                auto m = static_cast<double>(s.size());
                auto j = static_cast<std::size_t>(std::llround(pos * m / (2.0 * kPi))) % s.size();
                out.push_back(s[j]);
            }
            return out;
        }
        case Repr::Rule:
            return rule_value(*this, theta);
    }
    throw std::logic_error("BoundaryFunction: bad repr");
}

cd BoundaryFunction::value_complex(double theta) const {
    auto v = value(theta);
    if (planar_complex && v.size() == 2) return {v[0], v[1]};
    if (v.size() == 1) return {v[0], 0.0};
    throw std::invalid_argument("BoundaryFunction: value_complex needs a scalar or planar function");
}

double counterexample_a() { return 1.0 / (2.0 - std::log(kPi)); }

double counterexample_psi(double theta) {
    if (theta == 0.0) return 0.0;
    return counterexample_a() * (2.0 * theta - theta * std::log(std::abs(theta)));
}

double counterexample_psi_prime(double theta) {
    return counterexample_a() * (1.0 - std::log(std::abs(theta)));
}

BoundaryFunction counterexample_boundary() {
    BoundaryFunction b;
    b.repr = BoundaryFunction::Repr::Rule;
    b.target_dim = 2;
    b.planar_complex = true;
    b.rule_name = "counterexample_psi";
    return b;
}

BoundaryFunction extremal_strip_boundary(double rotation, double sign) {
    BoundaryFunction b;
    b.repr = BoundaryFunction::Repr::Rule;
    b.target_dim = 1;
    b.rule_name = "extremal_strip";
    b.rule_params["rotation"] = rotation;
    b.rule_params["sign"] = sign;
    return b;
}

BoundaryFunction BoundaryFunction::from_json_text(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    BoundaryFunction b;
    b.target_dim = j.at("target_dim").get<int>();
    if (b.target_dim < 1) throw std::invalid_argument("boundary json: target_dim must be >= 1");
    b.planar_complex = j.value("complex", false);
    if (b.planar_complex && b.target_dim != 2)
        throw std::invalid_argument("boundary json: complex functions have target_dim 2");

    const std::string repr = j.at("repr").get<std::string>();
    auto check_finite = [](double x) {
        if (!std::isfinite(x)) throw std::invalid_argument("boundary json: non-finite value");
        return x;
    };
    if (repr == "fourier") {
        b.repr = Repr::Fourier;
        for (const auto& coord : j.at("coeffs")) {
            if (coord.size() % 2 == 0)
                throw std::invalid_argument("boundary json: coefficient list must have odd length (k = -N..N)");
            int n = (static_cast<int>(coord.size()) - 1) / 2;
            TrigSeries s(n);
            for (int k = -n; k <= n; ++k) {
                const auto& pair = coord.at(static_cast<std::size_t>(k + n));
                s.at(k) = cd(check_finite(pair.at(0).get<double>()),
                             check_finite(pair.at(1).get<double>()));
            }
            if (!s.conjugate_symmetric(1e-12))
                throw std::invalid_argument("boundary json: real coordinate must have conjugate-symmetric coefficients");
            b.fourier.push_back(std::move(s));
        }
        if (static_cast<int>(b.fourier.size()) != b.target_dim)
            throw std::invalid_argument("boundary json: coeffs count must equal target_dim");
    } else if (repr == "samples") {
        b.repr = Repr::Samples;
        for (const auto& coord : j.at("samples")) {
            std::vector<double> s;
            s.reserve(coord.size());
            for (const auto& v : coord) s.push_back(check_finite(v.get<double>()));
            b.samples.push_back(std::move(s));
        }
        if (static_cast<int>(b.samples.size()) != b.target_dim)
            throw std::invalid_argument("boundary json: samples count must equal target_dim");
    } else if (repr == "rule") {
        b.repr = Repr::Rule;
        const auto& rule = j.at("rule");
        b.rule_name = rule.at("name").get<std::string>();
        if (rule.contains("params"))
            for (const auto& [key, val] : rule.at("params").items())
                b.rule_params[key] = check_finite(val.get<double>());
        if (b.rule_name == "counterexample_psi") {
            b.target_dim = 2;
            b.planar_complex = true;
        }
        rule_value(b, 0.1);  // reject unknown rules at parse time
    } else {
        throw std::invalid_argument("boundary json: repr must be fourier|samples|rule");
    }
    return b;
}

BoundaryFunction BoundaryFunction::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open boundary file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

}  // namespace hs
