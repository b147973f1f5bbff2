#include "swld/rate_functions.hpp"

#include <algorithm>
#include <cmath>

#include "swld/errors.hpp"
#include "swld/numerics.hpp"
#include "swld/rng.hpp"
#include "swld/semicircle.hpp"

namespace swld {

namespace {

struct WeightDegree {
    double value;
    double d;
};

// inf over d in [0, budget/m] of (budget - m d)^2/(2 alpha) + h_L(1 + d).
// Shared by rate_I_hat and phi_closed so both see the same numerics.
WeightDegree weight_degree_min(const LegendreTransform& h, double alpha, double m, double budget) {
    double dmax = budget / m;
    if (alpha == 0) return {h(1 + dmax), dmax};
    auto f = [&](double d) {
        double r = std::max(0.0, budget - m * d);
        return r * r / (2 * alpha) + h(1 + d);
    };
    num::MinResult best = num::scan_min(f, 0.0, dmax, 2000);
    return {best.fx, best.x};
}

void check_phi_inputs(double alpha, double beta, double lambda, double mu) {
    if (!(alpha >= 0) || !(beta >= 0)) throw InvalidParameter("alpha and beta must be >= 0");
    double m = m_of(lambda);
    if (!(mu > 0)) throw DomainError("mu must be positive");
    if (mu > 1.0 / m + 1e-9) throw InfeasibleError("mu exceeds 1/m(lambda)");
}

}  // namespace

const char* regime_name(Regime r) { return r == Regime::vertex ? "vertex" : "clique"; }

VariationalSolution rate_I_hat(const LegendreTransform& h, double alpha, double lambda) {
    if (!(alpha >= 0)) throw InvalidParameter("rate_I_hat: alpha must be >= 0");
    double m = m_of(lambda);
    if (alpha == 0) {
        double s = lambda_over_m(lambda);
        return {h(s), Argmin{0.0, s, {}, {}, {}}, Method::closed};
    }
    WeightDegree w = weight_degree_min(h, alpha, m, lambda - m);
    double s = 1 + w.d;
    double r = std::max(0.0, lambda - m * s);
    return {w.value, Argmin{r, s, {}, {}, {}}, Method::brute};
}

double clique_term(double beta, double lambda) {
    double m = m_of(lambda);
    if (beta == 0) return num::kInf;
    return 1.0 / (4 * beta * m * m);
}

double rate_I(const LegendreTransform& h, double alpha, double beta, double lambda) {
    return std::min(clique_term(beta, lambda), rate_I_hat(h, alpha, lambda).value);
}

double adjacency_rate(double t) { return h_poisson(lambda_over_m(t)); }

std::optional<double> find_phase_transition(const LegendreTransform& h, double beta) {
    if (!(beta > 0)) throw InvalidParameter("find_phase_transition: beta must be positive");
    if (h(2.0) >= 1.0 / (4 * beta)) return std::nullopt;
    auto g = [&](double t) { return h(lambda_over_m(t)) - clique_term(beta, t); };
    double lo = 2.0 + 1e-9;
    if (g(lo) >= 0) return std::nullopt;
    double hi = num::expand_upper(g, lo, 3.0, 1e6);
    return num::bisect(g, lo, hi);
}

RateCurve build_rate_curve(const LegendreTransform& h, double alpha, double beta,
                           const std::vector<double>& grid) {
    RateCurve c;
    if (!std::is_sorted(grid.begin(), grid.end())) throw InvalidParameter("lambda grid must be sorted");
    c.lambda_grid = grid;
    for (double l : grid) {
        double ih = rate_I_hat(h, alpha, l).value;
        double ct = clique_term(beta, l);
        c.i_hat.push_back(ih);
        c.clique_term.push_back(ct);
        c.i_value.push_back(std::min(ih, ct));
        c.regime.push_back(ih <= ct ? Regime::vertex : Regime::clique);
    }
    if (alpha == 0 && beta > 0) {
        c.t_star = find_phase_transition(h, beta);
    } else {
        int flips = 0;
        size_t at = 0;
        for (size_t i = 1; i < grid.size(); ++i)
            if (c.regime[i] != c.regime[i - 1]) {
                ++flips;
                at = i;
            }
        if (flips == 1) {
            auto g = [&](double l) { return rate_I_hat(h, alpha, l).value - clique_term(beta, l); };
            c.t_star = num::bisect(g, grid[at - 1], grid[at], 1e-10);
        }
    }
    return c;
}

VariationalSolution phi_brute(const LegendreTransform& h, double alpha, double beta, double lambda,
                              double mu, int k, PhiOptions opts) {
    check_phi_inputs(alpha, beta, lambda, mu);
    if (k < 1 || k > kMaxPhiK) throw InvalidParameter("phi_brute: k must lie in [1, 6]");
    const double m = m_of(lambda);
    const bool use_t = beta > 0 && !opts.freeze_t;
    const int G = opts.grid;

    VariationalSolution best{num::kInf, {}, Method::brute};
    for (int l = 1; l <= k; ++l) {
        const double sl = std::sqrt(static_cast<double>(l));
        auto weight = [&](double t, double kappa, double d, double* r_out) {
            double rem = mu - m * kappa * sl * (d - 1) - m * t;
            double r = 0;
            if (rem > 0) {
                double coef = std::sqrt(std::max(0.0, beta + (alpha / 2 - beta) * kappa * kappa));
                if (coef <= 1e-300) return num::kInf;
                r = rem / coef;
            }
            if (r_out) *r_out = r;
            return r;
        };
        auto obj3 = [&](double t, double kappa, double d, double hd) {
            double r = weight(t, kappa, d, nullptr);
            if (!std::isfinite(r)) return num::kInf;
            return r * r / 4 + l * hd + (use_t ? t / (2 * beta) : 0.0);
        };

        const double tmax = use_t ? mu / m : 0.0;
        const double dmax = 1 + mu / (m * sl);
        std::vector<double> dgrid(G), hgrid(G);
        for (int i = 0; i < G; ++i) {
            dgrid[i] = 1 + (dmax - 1) * i / (G - 1);
            hgrid[i] = h(dgrid[i]);
        }
        struct Cand {
            double v, t, kappa, d;
        };
        std::vector<Cand> cands;
        const int Gt = use_t ? G : 1;
        for (int a = 0; a < Gt; ++a) {
            double t = Gt == 1 ? 0.0 : tmax * a / (G - 1);
            for (int b = 0; b < G; ++b) {
                double kappa = static_cast<double>(b) / (G - 1);
                for (int c = 0; c < G; ++c) cands.push_back({obj3(t, kappa, dgrid[c], hgrid[c]), t, kappa, dgrid[c]});
            }
        }
        std::partial_sort(cands.begin(), cands.begin() + 3, cands.end(),
                          [](const Cand& x, const Cand& y) { return x.v < y.v; });

        num::VecFn f = [&](const std::vector<double>& x) {
            double t = use_t ? x[2] : 0.0;
            return obj3(t, x[0], x[1], h(x[1]));
        };
        std::vector<double> lo{0.0, 1.0}, hi{1.0, dmax}, step{1.0 / (G - 1), (dmax - 1) / (G - 1)};
        if (use_t) {
            lo.push_back(0.0);
            hi.push_back(tmax);
            step.push_back(tmax / (G - 1));
        }
        for (int i = 0; i < 3; ++i) {
            std::vector<double> x0{cands[i].kappa, cands[i].d};
            if (use_t) x0.push_back(cands[i].t);
            num::BoxMin res = num::compass_search(f, x0, lo, hi, step);
            if (res.fx < best.value) {
                double t = use_t ? res.x[2] : 0.0;
                double r = 0;
                weight(t, res.x[0], res.x[1], &r);
                std::vector<double> d(k, 1.0);
                for (int j = 0; j < l; ++j) d[j] = res.x[1];
                best.value = res.fx;
                best.argmin = Argmin{r, {}, t, res.x[0], d};
            }
        }
    }
    return best;
}

double phi_closed(const LegendreTransform& h, double alpha, double beta, double lambda, double mu) {
    check_phi_inputs(alpha, beta, lambda, mu);
    double m = m_of(lambda);
    double clique = beta > 0 ? mu * mu / (4 * beta) : num::kInf;
    return std::min(clique, weight_degree_min(h, alpha, m, mu).value);
}

DegreeReduction degree_reduction_check(const LegendreTransform& h, double s, int k) {
    if (!(s >= 0)) throw DomainError("degree_reduction_check: s must be >= 0");
    if (k < 1 || k > kMaxPhiK) throw InvalidParameter("degree_reduction_check: k must lie in [1, 6]");
    DegreeReduction out{};
    out.closed = h(1 + s);
    out.symmetric = num::kInf;
    for (int l = 1; l <= k; ++l) out.symmetric = std::min(out.symmetric, l * h(1 + s / std::sqrt(double(l))));
    if (s == 0) {
        out.descent = 0;
        out.brute = 0;
        return out;
    }

    // d_i = 1 + s w_i/|w| with w in the positive orthant.
    num::VecFn f = [&](const std::vector<double>& w) {
        double norm = 0;
        for (double x : w) norm += x * x;
        norm = std::sqrt(norm);
        if (norm == 0) return num::kInf;
        double acc = 0;
        for (double x : w) acc += h(1 + s * x / norm);
        return acc;
    };
    RngStream rng(0xD5C0FFEEull, static_cast<uint32_t>(k));
    std::vector<double> lo(k, 0.0), hi(k, 1.0), step(k, 0.25);
    out.descent = num::kInf;
    for (int restart = 0; restart < 12; ++restart) {
        std::vector<double> w(k);
        for (double& x : w) x = rng.uniform();
        num::BoxMin res = num::compass_search(f, w, lo, hi, step, 1e-9);
        out.descent = std::min(out.descent, res.fx);
    }
    out.brute = std::min(out.symmetric, out.descent);
    return out;
}

KappaReduction kappa_reduction_check(const LegendreTransform& h, double alpha, double beta, double lambda,
                                     double mu) {
    check_phi_inputs(alpha, beta, lambda, mu);
    if (!(beta > 0 || alpha > 0)) throw InvalidParameter("kappa_reduction_check: need beta > 0 or alpha > 0");
    const double m = m_of(lambda);
    const double smax = mu / m;
    auto obj = [&](double kappa, double s) {
        double rem = mu - m * kappa * s;
        double r = 0;
        if (rem > 0) {
            double coef = std::sqrt(std::max(0.0, beta + (alpha / 2 - beta) * kappa * kappa));
            if (coef <= 1e-300) return num::kInf;
            r = rem / coef;
        }
        return r * r / 4 + h(1 + s);
    };

    const int Gk = 41, Gs = 41;
    std::vector<double> hs(Gs);
    for (int j = 0; j < Gs; ++j) hs[j] = h(1 + smax * j / (Gs - 1));
    struct Cand {
        double v, kappa, s;
    };
    std::vector<Cand> cands;
    for (int i = 0; i < Gk; ++i) {
        double kappa = static_cast<double>(i) / (Gk - 1);
        for (int j = 0; j < Gs; ++j) {
            double s = smax * j / (Gs - 1);
            double rem = mu - m * kappa * s;
            double r = 0;
            double coef = std::sqrt(std::max(0.0, beta + (alpha / 2 - beta) * kappa * kappa));
            if (rem > 0) r = coef > 1e-300 ? rem / coef : num::kInf;
            cands.push_back({r * r / 4 + hs[j], kappa, s});
        }
    }
    std::partial_sort(cands.begin(), cands.begin() + 3, cands.end(),
                      [](const Cand& x, const Cand& y) { return x.v < y.v; });
    num::VecFn f = [&](const std::vector<double>& x) { return obj(x[0], x[1]); };
    KappaReduction out{num::kInf, 0, 0, 0};
    for (int i = 0; i < 3; ++i) {
        num::BoxMin res = num::compass_search(f, {cands[i].kappa, cands[i].s}, {0.0, 0.0}, {1.0, smax},
                                              {1.0 / (Gk - 1), smax / (Gs - 1)});
        if (res.fx < out.brute) {
            out.brute = res.fx;
            out.kappa = res.x[0];
        }
    }
    out.closed = phi_closed(h, alpha, beta, lambda, mu);
    double at0 = obj(0.0, 0.0);
    double at1 = num::scan_min([&](double s) { return obj(1.0, s); }, 0.0, smax, 400).fx;
    out.endpoint = std::min(at0, at1);
    return out;
}

}  // namespace swld
