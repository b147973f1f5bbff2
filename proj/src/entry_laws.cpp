#include "swld/entry_laws.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>

#include "swld/errors.hpp"
#include "swld/numerics.hpp"

namespace swld {

namespace {

double integrate(const ScalarFn& f, double a, double b) {
    using boost::math::quadrature::gauss_kronrod;
    return gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-12);
}

// log(1 - p + p e^t) - t p for any p in (0, 1).
double two_point_log_mgf(double p, double t) {
    if (t > 0) return t * (1 - p) + std::log(p) + std::log1p((1 - p) / p * std::exp(-t));
    return std::log1p(p * std::expm1(t)) - t * p;
}

}  // namespace

double EntryLaw::theta_max() const { return tail > 0 ? 1.0 / (2.0 * tail) : num::kInf; }

bool EntryLaw::unit_variance() const { return std::abs(variance - 1.0) < 1e-12; }

EntryLaw gaussian_law() {
    EntryLaw law;
    law.name = "gaussian";
    law.kind = LawKind::gaussian;
    law.log_mgf = [](double t) { return 0.5 * t * t; };
    law.squared_mgf = [](double t) { return t < 0.5 ? 1.0 / std::sqrt(1.0 - 2.0 * t) : num::kInf; };
    law.tail = 1.0;
    law.density = [](double x) { return std::exp(-0.5 * x * x) / std::sqrt(2 * std::numbers::pi); };
    law.sampler = [](RngStream& rng) { return rng.normal(); };
    return law;
}

EntryLaw rademacher_law() {
    EntryLaw law;
    law.name = "rademacher";
    law.kind = LawKind::rademacher;
    law.log_mgf = [](double t) {
        double a = std::abs(t);
        return a + std::log1p(std::exp(-2 * a)) - std::log(2.0);
    };
    law.squared_mgf = [](double t) { return std::exp(t); };
    law.tail = 0.0;
    law.bound = 1.0;
    law.sampler = [](RngStream& rng) { return rng.uniform() < 0.5 ? -1.0 : 1.0; };
    return law;
}

EntryLaw uniform_law(double R) {
    if (!(R > 0)) throw InvalidParameter("uniform law: R must be positive");
    EntryLaw law;
    law.name = "uniform";
    law.kind = LawKind::uniform_bounded;
    law.param = R;
    law.variance = R * R / 3.0;
    law.log_mgf = [R](double t) {
        // log(sinh(a)/a); the series for sinh(a)/a - 1 avoids cancellation below a = 1
        double a = std::abs(R * t);
        if (a < 1.0) {
            double term = 1, sum = 0, a2 = a * a;
            for (int k = 1; k < 30; ++k) {
                term *= a2 / ((2 * k) * (2 * k + 1));
                sum += term;
                if (term < 1e-17 * sum) break;
            }
            return std::log1p(sum);
        }
        return a + std::log1p(-std::exp(-2 * a)) - std::log(2 * a);
    };
    // int_0^1 exp(u y^2) dy with u = t R^2: erf form below zero, positive series
    // above, asymptotic expansion for large u.
    law.squared_mgf = [R](double t) {
        double u = t * R * R;
        if (u == 0) return 1.0;
        if (u < 0) {
            double a = std::sqrt(-u);
            return std::sqrt(std::numbers::pi) * std::erf(a) / (2 * a);
        }
        if (u >= 40) {
            // e^u/(2u) sum_k (2k-1)!!/(2u)^k, truncated at the smallest term
            double term = 1, sum = 1;
            for (int k = 1; k < 60; ++k) {
                double next = term * (2 * k - 1) / (2 * u);
                if (next >= term || next < 1e-17 * sum) break;
                term = next;
                sum += term;
            }
            return std::exp(u) / (2 * u) * sum;
        }
        double term = 1, sum = 1;
        for (int j = 1; j < 5000; ++j) {
            term *= u / j;
            double add = term / (2 * j + 1);
            sum += add;
            if (add < 1e-17 * sum) break;
        }
        return sum;
    };
    law.tail = 0.0;
    law.bound = R;
    law.density = [R](double x) { return std::abs(x) <= R ? 0.5 / R : 0.0; };
    law.sampler = [R](RngStream& rng) { return (2 * rng.uniform() - 1) * R; };
    return law;
}

EntryLaw centered_bernoulli_law(double p, bool normalized) {
    if (!(p > 0 && p < 1)) throw InvalidParameter("centered_bernoulli: p must lie in (0,1)");
    double sigma = normalized ? std::sqrt(p * (1 - p)) : std::sqrt(p);
    double hi = (1 - p) / sigma, lo = -p / sigma;
    EntryLaw law;
    law.name = normalized ? "bernoulli" : "bernoulli_raw";
    law.kind = LawKind::centered_bernoulli;
    law.param = p;
    law.variance = p * (1 - p) / (sigma * sigma);
    law.log_mgf = [p, sigma](double t) { return two_point_log_mgf(p, t / sigma); };
    law.squared_mgf = [p, hi, lo](double t) {
        return p * std::exp(t * hi * hi) + (1 - p) * std::exp(t * lo * lo);
    };
    law.tail = 0.0;
    law.bound = std::max(hi, -lo);
    law.sampler = [p, hi, lo](RngStream& rng) { return rng.uniform() < p ? hi : lo; };
    return law;
}

EntryLaw make_custom_law(CustomLawParts parts) {
    if (!parts.log_mgf || !parts.squared_mgf || !parts.sampler)
        throw InvalidParameter("custom law needs log_mgf, squared_mgf and sampler");
    if (!(parts.tail >= 0)) throw InvalidParameter("custom law: tail parameter must be >= 0");
    EntryLaw law;
    law.name = parts.name;
    law.kind = LawKind::custom;
    law.variance = parts.variance;
    law.log_mgf = std::move(parts.log_mgf);
    law.squared_mgf = std::move(parts.squared_mgf);
    law.tail = parts.tail;
    law.bound = parts.bound;
    law.density = std::move(parts.density);
    law.sampler = std::move(parts.sampler);
    return law;
}

EntryLaw make_law(const std::string& name, std::optional<double> param) {
    if (name == "gaussian") return gaussian_law();
    if (name == "rademacher") return rademacher_law();
    if (name == "uniform") return uniform_law(param.value_or(std::sqrt(3.0)));
    if (name == "bernoulli") {
        if (!param) throw InvalidParameter("bernoulli law needs a parameter p");
        return centered_bernoulli_law(*param, true);
    }
    if (name == "bernoulli_raw") {
        if (!param) throw InvalidParameter("bernoulli_raw law needs a parameter p");
        return centered_bernoulli_law(*param, false);
    }
    throw InvalidParameter("unknown law '" + name + "'");
}

double bernoulli_log_mgf(double p, double theta) {
    if (!(p > 0 && p < 0.5)) throw DomainError("bernoulli_log_mgf: p must lie in (0, 1/2)");
    return two_point_log_mgf(p, theta);
}

double bernoulli_rate(double p, double x) {
    if (!(p > 0 && p < 0.5)) throw DomainError("bernoulli_rate: p must lie in (0, 1/2)");
    if (!(x > -p && x < 1 - p)) throw DomainError("bernoulli_rate: x must lie in (-p, 1-p)");
    double q = x + p;
    return q * std::log(q / p) + (1 - q) * std::log((1 - q) / (1 - p));
}

TruncationWindow mean_preserving_truncation(const EntryLaw& law, double a) {
    if (!law.has_density())
        throw UnsupportedLaw("mean_preserving_truncation: law '" + law.name + "' has no density");
    if (!(a > 0)) throw DomainError("mean_preserving_truncation: a must be positive");
    double clip = kTruncationClip * std::sqrt(law.variance);
    if (law.bound) clip = std::min(clip, *law.bound);
    ScalarFn xf = [&law](double x) { return x * law.density(x); };
    double left = integrate(xf, -std::min(a, clip), 0.0);
    auto F = [&](double b) { return left + integrate(xf, 0.0, std::min(b, clip)); };

    double b;
    if (F(clip) <= 0) {
        b = clip;
    } else {
        b = num::bisect(F, 0.0, clip);
    }
    TruncationWindow w{a, b, F(b)};
    if (std::abs(w.residual_mean) > 1e-9)
        throw ConvergenceError("mean_preserving_truncation: residual mean above 1e-9");
    return w;
}

}  // namespace swld
