#include "catch_amalgamated.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <string>

#include "swld/errors.hpp"
#include "swld/experiments.hpp"
#include "swld/numerics.hpp"

using namespace swld;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

std::filesystem::path scratch(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "swld_test_experiments";
    std::filesystem::create_directories(dir);
    return dir / name;
}

}  // namespace

TEST_CASE("typicality run") {
    TypicalityConfig cfg;
    cfg.n = 300;
    cfg.p = 0.2;
    cfg.trials = 3;
    ExperimentReport r = run_typicality(cfg);
    CHECK(r.name == "typicality");
    REQUIRE(r.trials.size() == 3);
    for (double l : r.column("lambda1")) {
        CHECK(l > 1.7);
        CHECK(l < 2.4);
    }
    CHECK(r.aggregates["lambda1"]["count"] == 3);
    CHECK(r.aggregates["lambda1"].contains("stddev"));
    CHECK(r.summary["mean_lambda1"].get<double>() == num::mean(r.column("lambda1")));

    cfg.trials = 1;
    ExperimentReport one = run_typicality(cfg);
    CHECK_FALSE(one.aggregates["lambda1"].contains("stddev"));
    cfg.trials = 0;
    CHECK_THROWS_AS(run_typicality(cfg), InvalidParameter);
}

TEST_CASE("results do not depend on the thread count") {
    CliqueConfig cfg;
    cfg.n = 250;
    cfg.p = 0.3;
    cfg.k = 4;
    cfg.t = 3.0;
    cfg.trials = 4;
    Json a = to_json(run_clique_plant(cfg, RunOptions{1}));
    Json b = to_json(run_clique_plant(cfg, RunOptions{3}));
    CHECK(a.dump() == b.dump());

    cfg.seed = kDefaultSeed + 1;
    Json c = to_json(run_clique_plant(cfg, RunOptions{1}));
    CHECK(a["trials"] != c["trials"]);
}

TEST_CASE("clique plant") {
    CliqueConfig cfg;
    cfg.n = 400;
    cfg.p = 0.5;
    cfg.k = 4;
    cfg.t = 3.0;
    cfg.trials = 2;
    ExperimentReport r = run_clique_plant(cfg);
    CHECK_THAT(r.summary["plant_value"].get<double>(), WithinAbs(1 / (4 * m_of(3.0)), 1e-14));
    for (double l : r.column("lambda1")) CHECK_THAT(l, WithinAbs(3.0, 0.35));
    for (double c : r.column("count_above")) CHECK(c == 1);

    cfg.k = 40;  // above sqrt(np/log(1/p)) = 17
    ExperimentReport w = run_clique_plant(cfg);
    CHECK_FALSE(w.warnings.empty());
    cfg.strict_guard = true;
    CHECK_THROWS_AS(run_clique_plant(cfg), GuardViolation);
    cfg.strict_guard = false;
    cfg.k = 1;
    CHECK_THROWS_AS(run_clique_plant(cfg), InvalidParameter);
    cfg.k = 4;
    cfg.t = 2.0;
    CHECK_THROWS_AS(run_clique_plant(cfg), DomainError);
    CHECK_THAT(clique_guard_bound(2000, 0.05), WithinAbs(std::sqrt(100 / std::log(20.0)), 1e-12));
}

TEST_CASE("plant specs") {
    const double m = m_of(3.0);
    PlantSpec a = PlantSpec::vertex_from_s(lambda_over_m(3.0), 3.0);
    CHECK(a.r == 0.0);
    CHECK_THAT(a.s, WithinAbs(7.854102, 1e-6));
    PlantSpec b = PlantSpec::vertex_from_r(1.0, 3.0);
    CHECK_THAT(b.r + m * b.s, WithinAbs(3.0, 1e-12));
    PlantSpec c = PlantSpec::vertex_from_rs(b.r, b.s);
    CHECK_THAT(c.t, WithinAbs(3.0, 1e-9));
    CHECK_THROWS_AS(PlantSpec::vertex_from_s(0.5, 3.0), InvalidParameter);
    CHECK_THROWS_AS(PlantSpec::vertex_from_s(100.0, 3.0), InvalidParameter);
    CHECK_THROWS_AS(PlantSpec::vertex_from_r(3.0, 3.0), InvalidParameter);
    CHECK_THROWS_AS(PlantSpec::vertex_from_r(-1.0, 3.0), InvalidParameter);
}

TEST_CASE("vertex plant hits the prescribed weight and degree") {
    VertexConfig cfg;
    cfg.n = 400;
    cfg.p = 0.2;
    cfg.r = 1.0;
    cfg.t = 3.0;
    cfg.trials = 3;
    ExperimentReport r = run_vertex_plant(cfg);
    double s = r.summary["s"].get<double>();
    CHECK_THAT(s, WithinAbs((3.0 - 1.0) / m_of(3.0), 1e-12));
    for (double d : r.column("first_degree")) CHECK_THAT(d, WithinRel(s, 1e-10));
    for (double w : r.column("first_weight")) CHECK(w == 1.0);
    for (double l : r.column("lambda1")) CHECK_THAT(l, WithinAbs(3.0, 0.4));

    VertexConfig bad = cfg;
    bad.t.reset();
    bad.r.reset();
    CHECK_THROWS_AS(run_vertex_plant(bad), InvalidParameter);
    bad = cfg;
    bad.s = 1.5;  // over-determined and inconsistent
    CHECK_THROWS_AS(run_vertex_plant(bad), InvalidParameter);
}

TEST_CASE("local law") {
    for (std::string kind : {"sphere", "delocalized"}) {
        Eigen::VectorXd u = local_law_vector(1000, 0.1, kind, 5, 0);
        CHECK_THAT(u.norm(), WithinAbs(1.0, 1e-12));
        if (kind == "delocalized") CHECK(u.lpNorm<1>() <= 1000 * 0.1 / std::log(1000.0) + 1e-9);
        CHECK(u == local_law_vector(1000, 0.1, kind, 5, 0));
        CHECK(u != local_law_vector(1000, 0.1, kind, 5, 1));
    }
    CHECK_THROWS_AS(local_law_vector(10, 0.5, "spiky", 1, 0), InvalidParameter);

    LocalLawConfig cfg;
    cfg.n = 600;
    cfg.p = 0.3;
    cfg.lambda = 3.0;
    cfg.vectors = 6;
    cfg.trials = 2;
    cfg.vector_kind = "mixed";
    ExperimentReport r = run_local_law(cfg);
    CHECK(r.summary["excluded_trials"] == 0);
    CHECK_THAT(r.summary["mean_quadratic"].get<double>(), WithinAbs(m_of(3.0), 0.03));
    CHECK(r.summary["rms_error"].get<double>() < 0.05);

    cfg.lambda = 2.0;
    CHECK_THROWS_AS(run_local_law(cfg), DomainError);
    cfg.lambda = 3.0;
    cfg.vector_kind = "spiky";
    CHECK_THROWS_AS(run_local_law(cfg), InvalidParameter);
}

TEST_CASE("degree tail") {
    DegreeTailConfig cfg;
    cfg.n = 2000;
    cfg.p = 0.05;
    cfg.trials = 5000;
    ExperimentReport r = run_degree_tail(cfg);
    REQUIRE(r.tables["cgf"].size() == 3);
    CHECK(r.tables["cgf"][0]["gap"].get<double>() == 0.0);
    // mean of |X_1|^2 with the diagonal removed is (n-1)/n
    CHECK_THAT(num::mean(r.column("degree")), WithinAbs(1999.0 / 2000, 0.02));
    CHECK(r.summary["max_cgf_gap"].get<double>() < 0.1);
    cfg.law = {"gaussian", std::nullopt};
    cfg.theta_grid = {0.6};
    CHECK_THROWS_AS(run_degree_tail(cfg), InvalidParameter);
}

TEST_CASE("rate curve output") {
    RateConfig cfg;
    cfg.law = {"rademacher", std::nullopt};
    CHECK(cfg.resolved_alpha() == 0.0);
    CHECK(cfg.resolved_beta() == 0.0);
    RateCurve c = run_rate_curve(cfg);
    REQUIRE(c.lambda_grid.size() == 100);
    CHECK(c.lambda_grid.front() == 2.1);
    CHECK(c.lambda_grid.back() == 6.0);

    auto path = scratch("rate.csv");
    write_rate_csv(c, path.string());
    std::ifstream in(path);
    std::string line;
    std::getline(in, line);
    CHECK(line == "lambda,i_hat,clique,i,regime");
    int rows = 0;
    while (std::getline(in, line)) {
        ++rows;
        CHECK(line.find(",inf,") != std::string::npos);
        CHECK(line.ends_with(",vertex"));
    }
    CHECK(rows == 100);

    Json j = rate_curve_json(c, cfg);
    CHECK(j["rows"].size() == 100);
    CHECK(j["rows"][0]["clique"].is_null());
    CHECK(j["t_star"].is_null());

    cfg.from = 2.0;
    CHECK_THROWS_AS(cfg.grid(), InvalidParameter);
}

TEST_CASE("report persistence") {
    TypicalityConfig cfg;
    cfg.n = 100;
    cfg.p = 0.5;
    cfg.trials = 2;
    ExperimentReport r = run_typicality(cfg);
    auto path = scratch("report.json");
    persist_report(r, path.string());
    ExperimentReport back = load_report(path.string());
    CHECK(to_json(back).dump() == to_json(r).dump());
    CHECK(back.trials == r.trials);
    CHECK(back.predicted == r.predicted);

    CHECK_THROWS(persist_report(r, "/nonexistent_dir/r.json"));
    CHECK_THROWS(load_report("/nonexistent_dir/r.json"));
    std::ofstream(scratch("garbage.json")) << "{not json";
    CHECK_THROWS(load_report(scratch("garbage.json").string()));
}

TEST_CASE("config round trips") {
    CliqueConfig c;
    c.k = 7;
    c.diagonal = CliqueDiagonal::sampled;
    c.model.diag_law = LawChoice{"uniform", 1.7320508075688772};
    CliqueConfig c2 = clique_config(to_json(c));
    CHECK(to_json(c2) == to_json(c));
    CHECK(c2.diagonal == CliqueDiagonal::sampled);

    VertexConfig v;
    v.s = 4.0;
    v.t = 3.0;
    CHECK(to_json(vertex_config(to_json(v))) == to_json(v));
    CHECK_FALSE(vertex_config(to_json(v)).r.has_value());

    LocalLawConfig l;
    l.vector_kind = "sphere";
    CHECK(to_json(local_law_config(to_json(l))) == to_json(l));
    DegreeTailConfig d;
    d.t_grid = {1.2, 2.0};
    CHECK(to_json(degree_tail_config(to_json(d))) == to_json(d));
    RateConfig rc;
    rc.alpha = 1.0;
    CHECK(to_json(rate_config(to_json(rc))) == to_json(rc));
    TypicalityConfig t;
    CHECK(to_json(typicality_config(to_json(t))) == to_json(t));

    // missing fields take defaults
    TypicalityConfig dflt = typicality_config(Json{{"experiment", "typicality"}});
    CHECK(dflt.n == 2000);
    CHECK(dflt.seed == kDefaultSeed);

    Json small = to_json(t);
    small["n"] = 80;
    small["p"] = 0.5;
    small["trials"] = 1;
    CHECK(run_from_config(small).name == "typicality");
    CHECK_THROWS(run_from_config(Json{{"experiment", "nope"}}));
}
