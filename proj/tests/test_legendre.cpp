#include "catch_amalgamated.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "swld/entry_laws.hpp"
#include "swld/errors.hpp"
#include "swld/legendre.hpp"
#include "swld/numerics.hpp"

using namespace swld;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double gaussian_closed(double x) { return x / 2 - 1.5 * std::cbrt(x) + 1; }
double poisson_closed(double x) { return x * std::log(x) - x + 1; }

std::vector<double> grid(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

// L(theta) = 1 + theta + a theta^2 on theta < 1/2 (beta = 1): x_star = 1 + a,
// h(x) = (x-1)^2/(4a) below x_star and x/2 - L_star + 1 above.
constexpr double kQa = 1.0;
LegendreTransform quadratic_transform() {
    return LegendreTransform([](double t) { return t < 0.5 ? 1 + t + kQa * t * t : num::kInf; }, 1.0);
}

}  // namespace

TEST_CASE("structural constants") {
    LegendreTransform g = build_transform(gaussian_law());
    CHECK(g.theta_max() == 0.5);
    CHECK(std::isinf(g.x_star()));

    LegendreTransform r = build_transform(rademacher_law());
    CHECK(std::isinf(r.theta_max()));
    CHECK(std::isinf(r.x_star()));

    LegendreTransform q = quadratic_transform();
    CHECK_THAT(q.x_star(), WithinAbs(1 + kQa, 1e-5));
    CHECK_THAT(q.L_star(), WithinAbs(1.5 + kQa / 4, 1e-9));
}

TEST_CASE("closed-form oracles") {
    LegendreTransform g = build_transform(gaussian_law());
    LegendreTransform r = build_transform(rademacher_law());
    for (double x : grid(0.1, 50.0, 200)) {
        INFO("x = " << x);
        CHECK_THAT(h_L(g, x), WithinAbs(gaussian_closed(x), 1e-6));
        CHECK_THAT(h_L(r, x), WithinAbs(poisson_closed(x), 1e-6));
        CHECK_THAT(h_L(r, x), WithinAbs(h_poisson(x), 1e-6));
    }
    CHECK_THAT(g(8.0), WithinAbs(2.0, 1e-7));
    CHECK_THAT(g(5.0), WithinAbs(3.5 - 1.5 * std::cbrt(5.0), 1e-7));
    CHECK_THAT(g(5.0), WithinAbs(0.935036, 1e-6));
    CHECK_THAT(g(2.0), WithinAbs(2 - 1.5 * std::cbrt(2.0), 1e-9));
    CHECK_THAT(g(2.0), WithinAbs(0.110118, 1e-6));
    CHECK_THAT(r(std::numbers::e), WithinAbs(1.0, 1e-7));
    CHECK_THAT(r.argmax(7.0), WithinAbs(std::log(7.0), 1e-6));
    CHECK_THAT(g.argmax(8.0), WithinAbs(0.5 * (1 - std::pow(8.0, -2.0 / 3)), 1e-6));
}

TEST_CASE("h_poisson") {
    CHECK(h_poisson(1.0) == 0.0);
    CHECK_THAT(h_poisson(5.0), WithinAbs(5 * std::log(5.0) - 4, 1e-14));
    CHECK_THAT(h_poisson(5.0), WithinAbs(4.047189, 1e-6));
    CHECK_THAT(h_poisson(std::numbers::e), WithinAbs(1.0, 1e-15));
    CHECK_THROWS_AS(h_poisson(0.0), DomainError);
}

TEST_CASE("finite x_star uses the linear branch") {
    LegendreTransform q = quadratic_transform();
    for (double x : {0.3, 0.8, 1.0, 1.5, 1.9}) CHECK_THAT(q(x), WithinAbs((x - 1) * (x - 1) / (4 * kQa), 1e-9));
    for (double x : {2.5, 3.0, 10.0}) CHECK_THAT(q(x), WithinAbs(x / 2 - (1.5 + kQa / 4) + 1, 1e-5));
    CHECK_THAT(q(3.0), WithinAbs(0.75, 1e-5));
    CHECK_THAT(h_L_prime(q, 5.0), WithinAbs(0.5, 1e-12));
    CHECK(q.argmax(5.0) == q.theta_max());
    // continuity across x_star
    CHECK_THAT(q(q.x_star() - 1e-6), WithinAbs(q(q.x_star() + 1e-6), 1e-5));
}

TEST_CASE("derivative") {
    LegendreTransform g = build_transform(gaussian_law());
    LegendreTransform r = build_transform(rademacher_law());
    CHECK_THAT(h_L_prime(r, 1.0), WithinAbs(0.0, 1e-5));
    CHECK_THAT(h_L_prime(r, std::numbers::e), WithinAbs(1.0, 1e-5));
    CHECK_THAT(h_L_prime(g, 8.0), WithinAbs(0.375, 1e-5));
    CHECK_THAT(h_L_prime(g, 1.0), WithinAbs(0.0, 1e-5));
    CHECK_THROWS_AS(h_L_prime(g, -1.0), DomainError);
}

TEST_CASE("shape of h_L for every built-in law") {
    std::vector<EntryLaw> laws{gaussian_law(), rademacher_law(), uniform_law(std::sqrt(3.0)),
                               centered_bernoulli_law(0.2)};
    for (const EntryLaw& law : laws) {
        LegendreTransform h = build_transform(law);
        INFO(law.name);
        CHECK_THAT(h(1.0), WithinAbs(0.0, 1e-10));
        auto xs = grid(0.05, 60.0, 600);
        std::vector<double> v;
        for (double x : xs) v.push_back(h(x));
        for (size_t i = 0; i < xs.size(); ++i) {
            CHECK(v[i] >= 0.0);
            if (std::abs(xs[i] - 1.0) > 0.05) CHECK(v[i] > 0.0);
        }
        for (size_t i = 1; i < xs.size(); ++i) {
            if (xs[i] <= 1.0) CHECK(v[i] <= v[i - 1] + 1e-10);
            if (xs[i - 1] >= 1.0) CHECK(v[i] >= v[i - 1] - 1e-10);
        }
        for (size_t i = 1; i + 1 < xs.size(); ++i) CHECK(v[i - 1] - 2 * v[i] + v[i + 1] >= -1e-8);
    }
}

TEST_CASE("derivative is concave below x_star") {
    for (const EntryLaw& law : {gaussian_law(), rademacher_law()}) {
        LegendreTransform h = build_transform(law);
        INFO(law.name);
        auto xs = grid(0.2, 20.0, 100);
        std::vector<double> d;
        for (double x : xs) d.push_back(h.prime(x));
        for (size_t i = 1; i < d.size(); ++i) CHECK(d[i] >= d[i - 1] - 1e-6);
        for (size_t i = 1; i + 1 < d.size(); ++i) CHECK(d[i - 1] - 2 * d[i] + d[i + 1] <= 1e-6);
    }
}

TEST_CASE("bounded law stays monotone far out") {
    // L overflows quickly for bounded laws; h_L must still grow on [1, 500]
    LegendreTransform u = build_transform(uniform_law(std::sqrt(3.0)));
    double prev = 0;
    for (double x = 1.0; x <= 500.0; x += 0.37) {
        double v = u(x);
        INFO("x = " << x);
        CHECK(v >= prev);
        prev = v;
    }
    // theta x - L(theta) + 1 at the reported maximizer matches the value
    for (double x : {2.0, 30.0, 120.0, 400.0}) {
        double th = u.argmax(x);
        CHECK_THAT(u(x), WithinRel(th * x - uniform_law(std::sqrt(3.0)).squared_mgf(th) + 1, 1e-12));
        for (double dt : {-1e-3, 1e-3}) CHECK(u(x) >= th * x + dt * x - u.L()(th + dt) + 1 - 1e-12);
    }
}

TEST_CASE("domain errors") {
    LegendreTransform g = build_transform(gaussian_law());
    CHECK_THROWS_AS(g(0.0), DomainError);
    CHECK_THROWS_AS(h_L(g, -2.0), DomainError);
    CHECK_THROWS_AS(g.argmax(0.0), DomainError);
}
