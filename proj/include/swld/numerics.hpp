#pragma once

#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace swld::num {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

using Fn = std::function<double(double)>;

// Bisection for a sign change of f on [lo, hi]. Throws NoRootError when the
// endpoints have the same sign.
double bisect(const Fn& f, double lo, double hi, double rel_tol = 1e-12, int max_iter = 200);

// Doubles hi - lo until f changes sign or hi exceeds cap. Returns the new hi.
double expand_upper(const Fn& f, double lo, double hi, double cap);

struct MinResult {
    double x;
    double fx;
};

// Golden-section minimization on [a, b].
MinResult golden_min(const Fn& f, double a, double b, double tol = 1e-12, int max_iter = 300);

// Grid scan with `points` nodes on [a, b], then golden refinement around the
// best few local minima of the scan.
MinResult scan_min(const Fn& f, double a, double b, int points = 2000, int refine = 3);

double pairwise_sum(std::span<const double> xs);

double mean(std::span<const double> xs);
double stddev(std::span<const double> xs);
// Linear-interpolated empirical quantile, q in [0, 1].
double quantile(std::vector<double> xs, double q);

}  // namespace swld::num

namespace swld::num {

using VecFn = std::function<double(const std::vector<double>&)>;

struct BoxMin {
    std::vector<double> x;
    double fx;
};

// Derivative-free pattern search inside the box [lo, hi]. Polls all
// 3^dim - 1 neighbour directions when dim <= 3, coordinate directions
// otherwise; steps halve on failure until below min_step (relative to
// the box width).
BoxMin compass_search(const VecFn& f, std::vector<double> x0, const std::vector<double>& lo,
                      const std::vector<double>& hi, std::vector<double> step, double min_step = 1e-10,
                      int max_evals = 200000);

}  // namespace swld::num
