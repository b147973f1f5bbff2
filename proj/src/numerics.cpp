#include "swld/numerics.hpp"

#include <algorithm>
#include <cmath>

#include "swld/errors.hpp"

namespace swld::num {

double bisect(const Fn& f, double lo, double hi, double rel_tol, int max_iter) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0) == (fhi < 0)) throw NoRootError("bisect: no sign change on bracket");
    for (int it = 0; it < max_iter; ++it) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= rel_tol * std::max(1.0, std::abs(mid))) return mid;
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0) == (flo < 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double expand_upper(const Fn& f, double lo, double hi, double cap) {
    double sign_lo = f(lo) < 0 ? -1.0 : 1.0;
    while (hi < cap) {
        double fh = f(hi);
        if (fh * sign_lo <= 0) return hi;
        hi = lo + 2.0 * (hi - lo);
    }
    if (f(cap) * sign_lo <= 0) return cap;
    throw NoRootError("expand_upper: no sign change below cap");
}

MinResult golden_min(const Fn& f, double a, double b, double tol, int max_iter) {
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = f(c);
    double fd = f(d);
    for (int it = 0; it < max_iter && (b - a) > tol * std::max(1.0, std::abs(c)); ++it) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    MinResult best = fc <= fd ? MinResult{c, fc} : MinResult{d, fd};
    // Endpoints matter for boundary minima.
    double fa = f(a), fb = f(b);
    if (fa < best.fx) best = {a, fa};
    if (fb < best.fx) best = {b, fb};
    return best;
}

MinResult scan_min(const Fn& f, double a, double b, int points, int refine) {
    if (b <= a) return {a, f(a)};
    std::vector<double> xs(points), fs(points);
    for (int i = 0; i < points; ++i) {
        xs[i] = i + 1 == points ? b : a + (b - a) * i / (points - 1);
        fs[i] = f(xs[i]);
    }
    std::vector<int> minima;
    for (int i = 0; i < points; ++i) {
        bool left = i == 0 || fs[i] <= fs[i - 1];
        bool right = i + 1 == points || fs[i] <= fs[i + 1];
        if (left && right) minima.push_back(i);
    }
    std::sort(minima.begin(), minima.end(), [&](int i, int j) { return fs[i] < fs[j]; });
    if (static_cast<int>(minima.size()) > refine) minima.resize(refine);

    MinResult best{xs[0], fs[0]};
    for (int i = 1; i < points; ++i)
        if (fs[i] < best.fx) best = {xs[i], fs[i]};
    for (int i : minima) {
        double lo = xs[std::max(0, i - 1)];
        double hi = xs[std::min(points - 1, i + 1)];
        MinResult r = golden_min(f, lo, hi, 1e-14);
        if (r.fx < best.fx) best = r;
    }
    return best;
}

double pairwise_sum(std::span<const double> xs) {
    if (xs.size() <= 8) {
        double s = 0;
        for (double x : xs) s += x;
        return s;
    }
    size_t h = xs.size() / 2;
    return pairwise_sum(xs.first(h)) + pairwise_sum(xs.subspan(h));
}

double mean(std::span<const double> xs) {
    if (xs.empty()) return std::nan("");
    return pairwise_sum(xs) / static_cast<double>(xs.size());
}

double stddev(std::span<const double> xs) {
    if (xs.size() < 2) return std::nan("");
    double mu = mean(xs);
    std::vector<double> d(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) d[i] = (xs[i] - mu) * (xs[i] - mu);
    return std::sqrt(pairwise_sum(d) / static_cast<double>(xs.size() - 1));
}

double quantile(std::vector<double> xs, double q) {
    if (xs.empty()) return std::nan("");
    std::sort(xs.begin(), xs.end());
    double pos = q * static_cast<double>(xs.size() - 1);
    size_t i = static_cast<size_t>(std::floor(pos));
    if (i + 1 >= xs.size()) return xs.back();
    double w = pos - static_cast<double>(i);
    return xs[i] * (1 - w) + xs[i + 1] * w;
}

}  // namespace swld::num

namespace swld::num {

BoxMin compass_search(const VecFn& f, std::vector<double> x, const std::vector<double>& lo,
                      const std::vector<double>& hi, std::vector<double> step, double min_step,
                      int max_evals) {
    const size_t dim = x.size();
    std::vector<std::vector<int>> dirs;
    if (dim <= 3) {
        int total = 1;
        for (size_t i = 0; i < dim; ++i) total *= 3;
        for (int code = 0; code < total; ++code) {
            std::vector<int> d(dim);
            int c = code;
            bool zero = true;
            for (size_t i = 0; i < dim; ++i) {
                d[i] = c % 3 - 1;
                c /= 3;
                zero = zero && d[i] == 0;
            }
            if (!zero) dirs.push_back(d);
        }
    } else {
        for (size_t i = 0; i < dim; ++i)
            for (int s : {-1, 1}) {
                std::vector<int> d(dim, 0);
                d[i] = s;
                dirs.push_back(d);
            }
    }

    double fx = f(x);
    int evals = 1;
    std::vector<double> y(dim);
    auto small = [&] {
        for (size_t i = 0; i < dim; ++i)
            if (step[i] > min_step * std::max(1.0, hi[i] - lo[i])) return false;
        return true;
    };
    while (!small() && evals < max_evals) {
        bool moved = false;
        for (const auto& d : dirs) {
            for (size_t i = 0; i < dim; ++i) y[i] = std::clamp(x[i] + d[i] * step[i], lo[i], hi[i]);
            if (y == x) continue;
            double fy = f(y);
            ++evals;
            if (fy < fx) {
                x = y;
                fx = fy;
                moved = true;
                break;
            }
        }
        if (!moved)
            for (double& s : step) s *= 0.5;
    }
    return {x, fx};
}

}  // namespace swld::num
