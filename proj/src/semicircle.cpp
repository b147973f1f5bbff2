#include "swld/semicircle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "swld/errors.hpp"
#include "swld/numerics.hpp"

namespace swld {

namespace {
constexpr double kBracketOffset = 1e-9;

void require_outside_bulk(double lambda, const char* who) {
    if (!(lambda > kEdgeGuard))
        throw DomainError(std::string(who) + ": lambda must exceed 2, got " + std::to_string(lambda));
}
}  // namespace

EdgePoint::EdgePoint(double lambda) : lambda_(lambda) { require_outside_bulk(lambda, "EdgePoint"); }

double m_of(double lambda) {
    require_outside_bulk(lambda, "m_of");
    // 2/(l + sqrt(l^2-4)) avoids the cancellation in (l - sqrt(l^2-4))/2.
    return 2.0 / (lambda + std::sqrt((lambda - 2.0) * (lambda + 2.0)));
}

double m_inverse(double y) {
    if (!(y > 0.0 && y < 1.0)) throw DomainError("m_inverse: y must lie in (0,1)");
    return y + 1.0 / y;
}

double lambda_over_m(double lambda) { return lambda / m_of(lambda); }

double degree_to_lambda(double d) {
    if (!(d >= 2.0)) throw DomainError("degree_to_lambda: d must be >= 2");
    return d / std::sqrt(d - 1.0);
}

BbpPrediction clique_secular_root(double y) {
    if (!(y > 1.0)) throw DomainError("clique_secular_root: y must exceed 1");
    double closed = y + 1.0 / y;
    auto f = [y](double z) { return 1.0 - y * m_of(z); };
    double hi = std::max(closed + 1.0, 3.0);
    double lo = 2.0 + kBracketOffset;
    if (f(lo) >= 0) lo = 2.0 + 1e-11;
    double root = num::bisect(f, lo, hi);
    if (std::abs(root - closed) > 1e-10)
        throw ConvergenceError("clique_secular_root: bisection disagrees with closed form");
    return {PlantKind::clique, y, 0, 0, closed, root};
}

BbpPrediction vertex_secular_root(double r, double s) {
    if (!(r >= 0.0) || !(s >= 1.0)) throw DomainError("vertex_secular_root: need r >= 0, s >= 1");
    if (r == 0.0 && s == 1.0) throw DomainError("vertex_secular_root: degenerate plant r=0, s=1");
    auto f = [r, s](double z) { return 1.0 - s * m_of(z) / (z - r); };
    double lo = std::max(2.0, r) + kBracketOffset;
    double hi = r + s + 2.0;
    if (f(lo) >= 0) throw NoRootError("vertex_secular_root: plant too weak for an outlier");
    double root = num::bisect(f, lo, hi);
    double resid = r + m_of(root) * s - root;
    if (std::abs(resid) > 1e-9 * std::max(1.0, root))
        throw ConvergenceError("vertex_secular_root: identity r + m s = lambda not met");
    return {PlantKind::vertex, 0, r, s, root, root};
}

}  // namespace swld
