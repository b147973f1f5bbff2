#pragma once

#include <functional>
#include <optional>
#include <string>

#include "swld/rng.hpp"

namespace swld {

enum class LawKind { gaussian, rademacher, uniform_bounded, centered_bernoulli, custom };

using ScalarFn = std::function<double(double)>;

struct EntryLaw {
    std::string name;
    LawKind kind = LawKind::custom;
    double param = 0;            // R for uniform_bounded, p for centered_bernoulli
    double variance = 1;
    ScalarFn log_mgf;            // Lambda(theta) = log E exp(theta G)
    ScalarFn squared_mgf;        // L(theta) = E exp(theta G^2), +inf outside its domain
    double tail = 0;             // alpha (diagonal use) or beta (off-diagonal use)
    std::optional<double> bound; // a.s. bound on |G| if any
    ScalarFn density;            // empty when the law has no density
    std::function<double(RngStream&)> sampler;

    // Right end of the domain of L: 1/(2 tail), +inf when tail = 0.
    double theta_max() const;
    bool has_density() const { return static_cast<bool>(density); }
    bool unit_variance() const;
    double sample(RngStream& rng) const { return sampler(rng); }
};

EntryLaw gaussian_law();
EntryLaw rademacher_law();
// Uniform on [-R, R]; R = sqrt(3) gives unit variance.
EntryLaw uniform_law(double R);
// Two-point law (xi - p)/sigma with xi ~ Bernoulli(p). sigma = sqrt(p(1-p))
// when normalized, sqrt(p) for the raw adjacency scaling.
EntryLaw centered_bernoulli_law(double p, bool normalized = true);

struct CustomLawParts {
    std::string name;
    ScalarFn log_mgf;
    ScalarFn squared_mgf;
    double tail = 0;
    double variance = 1;
    std::optional<double> bound;
    ScalarFn density;
    std::function<double(RngStream&)> sampler;
};
EntryLaw make_custom_law(CustomLawParts parts);

// Name-based factory used by configs: "gaussian", "rademacher",
// "uniform" (param R, default sqrt 3), "bernoulli" (param p).
EntryLaw make_law(const std::string& name, std::optional<double> param = std::nullopt);

// Lambda_p(theta) = log(1 - p + p e^theta) - theta p, p in (0, 1/2).
double bernoulli_log_mgf(double p, double theta);
// Legendre transform of Lambda_p at x in (-p, 1-p).
double bernoulli_rate(double p, double x);

struct TruncationWindow {
    double a;
    double b;
    double residual_mean;
};

// Integrands are cut at this many standard deviations.
inline constexpr double kTruncationClip = 12.0;

// Solves int_{-a}^{b} x dmu(x) = 0 for b.
TruncationWindow mean_preserving_truncation(const EntryLaw& law, double a);

}  // namespace swld
