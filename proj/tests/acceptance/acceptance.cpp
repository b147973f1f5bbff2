// One PASS/FAIL line per acceptance criterion. Exit status is 1 if any
// criterion fails. Criterion ids given as arguments select a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "swld/blas_env.hpp"
#include "swld/experiments.hpp"
#include "swld/legendre.hpp"
#include "swld/numerics.hpp"
#include "swld/rate_functions.hpp"
#include "swld/semicircle.hpp"

using namespace swld;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = a + (b - a) * i / (n - 1);
    return v;
}

Outcome transform_identities() {
    double worst_inv = 0, worst_round = 0;
    for (int i = 1; i <= 500; ++i) {
        double l = 2.0 + 98.0 * i / 500;
        double m = m_of(l);
        worst_inv = std::max(worst_inv, std::abs(m + 1 / m - l));
        worst_round = std::max(worst_round, std::abs(degree_to_lambda(lambda_over_m(l)) - l));
    }
    std::ostringstream os;
    os << "max|m+1/m-l|=" << worst_inv << " max roundtrip=" << worst_round;
    return {worst_inv < 1e-12 && worst_round < 1e-10, os.str()};
}

Outcome legendre_oracles() {
    LegendreTransform g = build_transform(gaussian_law());
    LegendreTransform r = build_transform(rademacher_law());
    double eg = 0, er = 0;
    for (double x : linspace(0.1, 50, 500)) {
        eg = std::max(eg, std::abs(g(x) - (x / 2 - 1.5 * std::cbrt(x) + 1)));
        er = std::max(er, std::abs(r(x) - (x * std::log(x) - x + 1)));
    }
    std::ostringstream os;
    os << "gaussian err=" << eg << " rademacher err=" << er;
    return {eg <= 1e-6 && er <= 1e-6, os.str()};
}

Outcome rate_structure() {
    LegendreTransform g = build_transform(gaussian_law());
    LegendreTransform r = build_transform(rademacher_law());
    bool ok = true;
    std::ostringstream os;

    double edge_g = rate_I(g, 1.0, 1.0, 2.001);
    double edge_r = rate_I(r, 0.0, 0.0, 2.001);
    ok = ok && edge_g > 0.01 && edge_r > 0.01;
    os << "I(2.001): gaussian=" << edge_g << " rademacher=" << edge_r << ";";

    const double ab[3][2] = {{0, 1}, {2, 1}, {1, 1}};
    double worst = 0;
    for (auto& p : ab) {
        double target = 1 / (4 * std::max(p[1], p[0] / 2));
        double rel = std::abs(rate_I(g, p[0], p[1], 50.0) / 2500 - target) / target;
        worst = std::max(worst, rel);
    }
    ok = ok && worst < 0.05;
    os << " growth rel err=" << worst << ";";

    RateConfig rc;
    rc.alpha = 0.0;
    rc.beta = 1.0;
    rc.from = 2.01;
    rc.to = 20.0;
    rc.points = 400;
    RateCurve c = run_rate_curve(rc);
    int flips = 0;
    for (size_t i = 1; i < c.regime.size(); ++i) flips += c.regime[i] != c.regime[i - 1];
    double h2 = g(2.0);
    ok = ok && flips == 1 && std::abs(h2 - 0.110118) < 1e-6 && h2 < 0.25;
    os << " flips=" << flips << " h_L(2)=" << h2;
    if (c.t_star) os << " t*=" << *c.t_star;
    return {ok, os.str()};
}

Outcome variational_reductions() {
    std::vector<std::pair<std::string, LegendreTransform>> laws{{"gaussian", build_transform(gaussian_law())},
                                                                {"rademacher", build_transform(rademacher_law())}};
    const double ab[2][2] = {{0, 1}, {2, 1}};
    const std::vector<double> lambdas{2.2, 2.6, 3.0, 4.0, 6.0};
    const std::vector<double> fracs{0.2, 0.4, 0.6, 0.8, 1.0};
    double worst_phi = 0, worst_t = 0;
    for (auto& [name, h] : laws)
        for (auto& p : ab)
            for (double l : lambdas)
                for (double c : fracs) {
                    double mu = c / m_of(l);
                    double closed = phi_closed(h, p[0], p[1], l, mu);
                    for (int k : {1, 3, 6}) {
                        double brute = phi_brute(h, p[0], p[1], l, mu, k).value;
                        worst_phi = std::max(worst_phi, std::abs(brute - closed));
                    }
                    double free_t = phi_brute(h, p[0], p[1], l, mu, 1).value;
                    double frozen = phi_brute(h, p[0], p[1], l, mu, 1, PhiOptions{true, 21}).value;
                    worst_t = std::max(worst_t, std::abs(free_t - frozen));
                }

    bool deg_ok = true;
    double worst_deg = 0;
    for (auto& [name, h] : laws)
        for (double s : {0.0, 0.5, 2.0, 4.0})
            for (int k = 1; k <= 6; ++k) {
                DegreeReduction d = degree_reduction_check(h, s, k);
                deg_ok = deg_ok && d.brute >= d.closed - 1e-6 && d.brute <= d.closed + 1e-4;
                worst_deg = std::max(worst_deg, std::abs(d.brute - d.closed));
            }

    bool kappa_ok = true;
    double worst_kappa = 0;
    for (auto& [name, h] : laws)
        for (auto& p : ab)
            for (double l : lambdas)
                for (double c : fracs) {
                    KappaReduction kr = kappa_reduction_check(h, p[0], p[1], l, c / m_of(l));
                    bool at_end = std::min(kr.kappa, 1 - kr.kappa) <= 1e-3;
                    bool gap = std::abs(kr.brute - kr.endpoint) < 1e-6;
                    kappa_ok = kappa_ok && (at_end || gap) && std::abs(kr.brute - kr.closed) <= 5e-3;
                    worst_kappa = std::max(worst_kappa, std::abs(kr.brute - kr.closed));
                }

    std::ostringstream os;
    os << "max|brute-closed|=" << worst_phi << " degree gap=" << worst_deg << " kappa gap=" << worst_kappa
       << " free-t gap=" << worst_t;
    return {worst_phi <= 5e-3 && deg_ok && kappa_ok && worst_t < 5e-3, os.str()};
}

Outcome consistency_triangle() {
    std::vector<std::pair<std::string, EntryLaw>> laws{
        {"gaussian", gaussian_law()}, {"rademacher", rademacher_law()}, {"uniform", uniform_law(std::sqrt(3.0))}};
    const double ab[3][2] = {{0, 1}, {2, 1}, {1, 0.5}};
    double worst = 0;
    for (auto& [name, law] : laws) {
        LegendreTransform h = build_transform(law);
        for (auto& p : ab)
            for (double l : linspace(2.05, 12.0, 50)) {
                double lhs = phi_closed(h, p[0], p[1], l, 1 / m_of(l));
                double mid = rate_I(h, p[0], p[1], l);
                double rhs = std::min(clique_term(p[1], l), rate_I_hat(h, p[0], l).value);
                worst = std::max({worst, std::abs(lhs - mid), std::abs(mid - rhs)});
            }
    }
    LegendreTransform r = build_transform(rademacher_law());
    double worst_adj = 0;
    for (double t : linspace(2.05, 12.0, 50))
        worst_adj = std::max(worst_adj, std::abs(adjacency_rate(t) - rate_I(r, 0.0, 0.0, t)));
    std::ostringstream os;
    os << "phi vs I=" << worst << " adjacency vs I=" << worst_adj;
    return {worst <= 1e-9 && worst_adj <= 1e-10, os.str()};
}

Outcome typicality() {
    bool ok = true;
    std::ostringstream os;
    for (std::string model : {"wigner", "adjacency"}) {
        TypicalityConfig cfg;
        cfg.model.model = model;
        ExperimentReport rep = run_typicality(cfg);
        double mean = num::mean(rep.column("lambda1"));
        ok = ok && mean >= 1.85 && mean <= 2.15;
        os << model << " mean lambda1=" << mean << " ";
    }
    return {ok, os.str()};
}

CliqueConfig clique_cfg(double t) {
    CliqueConfig cfg;
    cfg.k = 10;
    cfg.t = t;
    return cfg;
}

Outcome clique_plant() {
    bool ok = true;
    std::ostringstream os;
    for (double t : {2.2, 3.0}) {
        ExperimentReport rep = run_clique_plant(clique_cfg(t), RunOptions{1});
        double mean = num::mean(rep.column("lambda1"));
        ok = ok && std::abs(mean - t) <= 0.15;
        os << "t=" << t << " mean lambda1=" << mean << " ";
    }
    return {ok, os.str()};
}

Outcome vertex_plant() {
    const double t = 3.0;
    const double m = m_of(t);
    bool ok = true;
    std::ostringstream os;

    VertexConfig s_plant;
    s_plant.r = 0.0;
    s_plant.s = t / m;
    ExperimentReport a = run_vertex_plant(s_plant);
    double mean_a = num::mean(a.column("lambda1"));
    double deg = num::mean(a.column("max_full_degree"));
    double mass_a = num::mean(a.column("mass_sq_eps_0.3"));
    ok = ok && std::abs(mean_a - t) <= 0.15 && std::abs(deg - t / m) <= 0.1 * (t / m) && mass_a > 0.2;
    os << "s-plant lambda1=" << mean_a << " degree=" << deg << " (target " << t / m << ") mass=" << mass_a << "; ";

    VertexConfig r_plant;
    r_plant.r = 1 / m;
    r_plant.s = 1.0;
    ExperimentReport b = run_vertex_plant(r_plant);
    double mean_b = num::mean(b.column("lambda1"));
    double mass_b = num::mean(b.column("mass_sq_eps_0.3"));
    ok = ok && std::abs(mean_b - t) <= 0.15 && mass_b > 0.2;
    os << "r-plant lambda1=" << mean_b << " mass=" << mass_b;
    return {ok, os.str()};
}

Outcome local_law() {
    bool ok = true;
    std::ostringstream os;
    const double target = m_of(3.0);
    for (std::string model : {"wigner", "adjacency"}) {
        LocalLawConfig cfg;
        cfg.model.model = model;
        ExperimentReport rep = run_local_law(cfg);
        double mean = rep.summary.at("mean_quadratic").get<double>();
        ok = ok && std::abs(mean - target) <= 0.05;
        os << model << " mean=" << mean << " ";
    }
    os << "m(3)=" << target;
    return {ok, os.str()};
}

Outcome degree_cgf() {
    LegendreTransform h = build_transform(rademacher_law());
    std::ostringstream os;

    DegreeTailConfig cgf_cfg;
    cgf_cfg.trials = 1;
    cgf_cfg.t_grid.clear();
    ExperimentReport a = run_degree_tail(cgf_cfg);
    double worst = 0;
    for (const Json& row : a.tables.at("cgf"))
        worst = std::max(worst, std::abs(row.at("lambda_n").get<double>() - row.at("limit").get<double>()));
    bool ok = worst <= 0.02;
    os << "max cgf gap=" << worst << "; ";

    DegreeTailConfig mc;
    mc.n = 3000;
    mc.p = 0.01;
    mc.theta_grid.clear();
    mc.t_grid = {1.5};
    mc.trials = 100000;
    ExperimentReport b = run_degree_tail(mc);
    const Json& row = b.tables.at("tail").at(0);
    double freq = row.at("frequency").get<double>();
    double target = -h(1.5);
    if (freq > 1e-4) {
        double rate = std::log(freq) / (mc.n * mc.p);
        ok = ok && std::abs(rate - target) <= 0.1;
        os << "tail freq=" << freq << " log(freq)/np=" << rate << " target=" << target;
    } else {
        os << "tail freq=" << freq << " below 1e-4, not scored";
    }
    return {ok, os.str()};
}

Outcome determinism() {
    namespace fs = std::filesystem;
    CliqueConfig cfg = clique_cfg(3.0);
    ExperimentReport first = run_clique_plant(cfg, RunOptions{1});
    fs::path dir = fs::temp_directory_path() / "swld_acceptance";
    fs::create_directories(dir);
    fs::path path = dir / "clique_report.json";
    persist_report(first, path.string());

    ExperimentReport stored = load_report(path.string());
    ExperimentReport again = run_from_config(stored.config, RunOptions{3});
    bool same = stored.trials.size() == again.trials.size();
    for (size_t i = 0; same && i < again.trials.size(); ++i) same = stored.trials[i] == again.trials[i];
    std::ostringstream os;
    os << again.trials.size() << " trials rerun with 3 threads, " << (same ? "bit-identical" : "MISMATCH");
    return {same && !again.trials.empty(), os.str()};
}

}  // namespace

int main(int argc, char** argv) {
    ensure_blas_kernel(argv);

    struct Criterion {
        int id;
        std::string name;
        double budget_s;
        std::function<Outcome()> run;
    };
    std::vector<Criterion> all{
        {1, "transform identities", 1, transform_identities},
        {2, "legendre oracle equivalence", 5, legendre_oracles},
        {3, "rate-function structure", 10, rate_structure},
        {4, "variational reductions vs brute force", 300, variational_reductions},
        {5, "consistency triangle", 5, consistency_triangle},
        {6, "typicality", 180, typicality},
        {7, "clique plant", 180, clique_plant},
        {8, "vertex plant", 180, vertex_plant},
        {9, "local law", 300, local_law},
        {10, "degree cgf and tail", 120, degree_cgf},
        {11, "determinism", 180, determinism},
    };

    // Optional criterion ids on the command line restrict the run.
    std::vector<int> only;
    for (int i = 1; i < argc; ++i) only.push_back(std::atoi(argv[i]));

    int failures = 0;
    for (const Criterion& c : all) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.budget_s;
        bool pass = o.pass && in_time;
        failures += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << " (" << c.name << "): " << o.detail << " ["
                  << fmt("%.2f", secs) << " s" << (in_time ? "" : ", over budget " + fmt("%.0f", c.budget_s) + " s")
                  << "]" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
