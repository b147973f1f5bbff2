#pragma once

#include "swld/entry_laws.hpp"

namespace swld {

// h_L(x) = sup_theta { theta x - L(theta) + 1 } for a squared-entry MGF L
// with domain interior (-inf, 1/(2 beta)).
class LegendreTransform {
public:
    LegendreTransform(ScalarFn L, double beta);

    double beta() const { return beta_; }
    double theta_max() const { return theta_max_; }
    double x_star() const { return x_star_; }
    double L_star() const { return L_star_; }
    const ScalarFn& L() const { return L_; }

    double operator()(double x) const;
    double prime(double x) const;
    // Maximizing theta for x below x_star.
    double argmax(double x) const;

private:
    double sup_value(double x, double* theta) const;

    ScalarFn L_;
    double beta_;
    double theta_max_;
    double x_star_;
    double L_star_;
};

LegendreTransform build_transform(const EntryLaw& law);

double h_L(const LegendreTransform& t, double x);
double h_L_prime(const LegendreTransform& t, double x);

// x log x - x + 1
double h_poisson(double x);

}  // namespace swld
