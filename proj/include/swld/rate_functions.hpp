#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swld/legendre.hpp"

namespace swld {

enum class Method { brute, closed };

struct Argmin {
    std::optional<double> r;
    std::optional<double> s;
    std::optional<double> t;
    std::optional<double> kappa;
    std::vector<double> d;
};

struct VariationalSolution {
    double value;
    Argmin argmin;
    Method method;
};

enum class Regime { vertex, clique };
const char* regime_name(Regime r);

struct RateCurve {
    std::vector<double> lambda_grid;
    std::vector<double> i_hat;
    std::vector<double> clique_term;
    std::vector<double> i_value;
    std::vector<Regime> regime;
    std::optional<double> t_star;
};

// Vertex-strategy rate: inf over r + m(lambda) s = lambda, r >= 0, s >= 1 of
// r^2/(2 alpha) + h_L(s). alpha = 0 gives h_L(lambda/m(lambda)).
VariationalSolution rate_I_hat(const LegendreTransform& h, double alpha, double lambda);

// 1/(4 beta m^2); +inf when beta = 0.
double clique_term(double beta, double lambda);

double rate_I(const LegendreTransform& h, double alpha, double beta, double lambda);

// h(t/m(t)) with h(x) = x log x - x + 1.
double adjacency_rate(double t);

// Crossing of h_L(t/m(t)) and 1/(4 beta m(t)^2) when h_L(2) < 1/(4 beta).
std::optional<double> find_phase_transition(const LegendreTransform& h, double beta);

RateCurve build_rate_curve(const LegendreTransform& h, double alpha, double beta,
                           const std::vector<double>& lambda_grid);

struct PhiOptions {
    bool freeze_t = false;
    int grid = 21;
};

inline constexpr int kMaxPhiK = 6;

// Minimum of r^2/4 + sum h_L(d_i) + t/(2 beta) subject to
// r sqrt(beta + (alpha/2 - beta) kappa^2) + m kappa |d - 1| + m t >= mu.
VariationalSolution phi_brute(const LegendreTransform& h, double alpha, double beta, double lambda,
                              double mu, int k, PhiOptions opts = {});

// min(mu^2/(4 beta), inf{r^2/(2 alpha) + h_L(1+d) : r + m d >= mu}).
double phi_closed(const LegendreTransform& h, double alpha, double beta, double lambda, double mu);

struct DegreeReduction {
    double symmetric;  // min over l <= k of l h_L(1 + s/sqrt l)
    double descent;    // k-dimensional random-restart search
    double brute;      // min of the two
    double closed;     // h_L(1 + s)
};
DegreeReduction degree_reduction_check(const LegendreTransform& h, double s, int k);

struct KappaReduction {
    double brute;
    double closed;
    double kappa;     // argmin of the brute search
    double endpoint;  // best value with kappa restricted to {0, 1}
};
KappaReduction kappa_reduction_check(const LegendreTransform& h, double alpha, double beta, double lambda,
                                     double mu);

}  // namespace swld
