#include "swld/legendre.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <cstdint>
#include <limits>

#include "swld/errors.hpp"
#include "swld/numerics.hpp"

namespace swld {

namespace {
constexpr double kInfiniteSlope = 1e12;
constexpr double kThetaCap = 1e6;
}  // namespace

LegendreTransform::LegendreTransform(ScalarFn L, double beta)
    : L_(std::move(L)), beta_(beta), x_star_(num::kInf), L_star_(num::kInf) {
    if (!(beta >= 0)) throw InvalidParameter("LegendreTransform: beta must be >= 0");
    theta_max_ = beta > 0 ? 1.0 / (2.0 * beta) : num::kInf;
    if (beta == 0) return;

    double slope = 0;
    double theta = 0;
    for (int k = 1; k <= 40; ++k) {
        theta = theta_max_ * (1.0 - std::ldexp(1.0, -k));
        double h = std::min(1e-6 * std::max(1.0, std::abs(theta)), 0.5 * (theta_max_ - theta));
        slope = (L_(theta + h) - L_(theta - h)) / (2 * h);
        if (!std::isfinite(slope) || slope > kInfiniteSlope) return;
    }
    x_star_ = slope;
    double at_max = L_(theta_max_);
    L_star_ = std::isfinite(at_max) ? at_max : L_(theta);
}

double LegendreTransform::sup_value(double x, double* theta_out) const {
    auto g = [&](double th) { return th * x - L_(th) + 1.0; };
    // g is concave, so g(2a) < g(a) puts the maximizer below 2a (above 2a for a < 0).
    double hi = theta_max_;
    if (!std::isfinite(hi)) {
        hi = 1.0;
        while (hi < kThetaCap && !(g(hi) < g(hi / 2))) hi *= 2;
    }
    double lo = -1.0;
    while (lo > -kThetaCap && !(g(lo) < g(lo / 2))) lo *= 2;

    // L can blow up at the domain end; a finite stand-in keeps Brent's parabolic steps defined.
    auto neg = [&](double th) {
        double v = -g(th);
        return std::isfinite(v) ? v : 1e300;
    };
    std::uintmax_t iters = 200;
    auto [th, fx] = boost::math::tools::brent_find_minima(neg, lo, hi, std::numeric_limits<double>::digits, iters);
    if (theta_out) *theta_out = th;
    return std::max(0.0, -fx);
}

double LegendreTransform::operator()(double x) const {
    if (!(x > 0)) throw DomainError("h_L: x must be positive");
    if (x >= x_star_) return x / (2 * beta_) - L_star_ + 1.0;
    return sup_value(x, nullptr);
}

double LegendreTransform::argmax(double x) const {
    if (!(x > 0)) throw DomainError("h_L: x must be positive");
    if (x >= x_star_) return theta_max_;
    double th;
    sup_value(x, &th);
    return th;
}

double LegendreTransform::prime(double x) const {
    if (!(x > 0)) throw DomainError("h_L_prime: x must be positive");
    if (x >= x_star_) return 1.0 / (2 * beta_);
    double h = std::min(1e-5 * std::max(1.0, x), 0.5 * x);
    return ((*this)(x + h) - (*this)(x - h)) / (2 * h);
}

LegendreTransform build_transform(const EntryLaw& law) { return LegendreTransform(law.squared_mgf, law.tail); }

double h_L(const LegendreTransform& t, double x) { return t(x); }

double h_L_prime(const LegendreTransform& t, double x) { return t.prime(x); }

double h_poisson(double x) {
    if (!(x > 0)) throw DomainError("h_poisson: x must be positive");
    return x * std::log(x) - x + 1.0;
}

}  // namespace swld
