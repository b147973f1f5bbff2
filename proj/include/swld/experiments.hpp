#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "swld/entry_laws.hpp"
#include "swld/matrix_lab.hpp"
#include "swld/rate_functions.hpp"
#include "swld/report.hpp"
#include "swld/semicircle.hpp"

namespace swld {

inline constexpr uint64_t kDefaultSeed = 20240917ull;

struct RunOptions {
    int threads = 0;  // 0: all hardware threads
};

struct LawChoice {
    std::string name = "gaussian";
    std::optional<double> param;
    EntryLaw make() const { return make_law(name, param); }
};

struct MatrixModel {
    std::string model = "wigner";  // wigner | adjacency
    LawChoice law;
    std::optional<LawChoice> diag_law;  // defaults to law

    WignerSample sample(int n, double p, uint64_t seed) const;
    const LawChoice& diagonal() const { return diag_law ? *diag_law : law; }
};

struct TypicalityConfig {
    int n = 2000;
    double p = 0.05;
    MatrixModel model;
    int trials = 20;
    uint64_t seed = kDefaultSeed;
};

enum class CliqueDiagonal { planted, sampled };

struct CliqueConfig {
    int n = 2000;
    double p = 0.05;
    MatrixModel model;
    int k = 10;
    double t = 3.0;
    int trials = 20;
    uint64_t seed = kDefaultSeed;
    CliqueDiagonal diagonal = CliqueDiagonal::planted;
    double count_threshold = 2.5;
    bool strict_guard = false;
};

struct VertexConfig {
    int n = 2000;
    double p = 0.05;
    MatrixModel model;
    // Any two of r, s, t determine the plant.
    std::optional<double> r;
    std::optional<double> s;
    std::optional<double> t;
    int trials = 20;
    uint64_t seed = kDefaultSeed;
    double count_threshold = 2.5;
};

struct LocalLawConfig {
    int n = 4096;
    double p = 0.1;
    MatrixModel model;
    double lambda = 3.0;
    int vectors = 50;
    int trials = 10;
    uint64_t seed = kDefaultSeed;
    std::string vector_kind = "delocalized";  // delocalized | sphere | mixed
};

struct DegreeTailConfig {
    LawChoice law{"rademacher", std::nullopt};
    int n = 10000;
    double p = 0.01;
    std::vector<double> theta_grid{0.0, 0.5, 1.0};
    std::vector<double> t_grid{1.5};
    int trials = 100000;  // column draws
    uint64_t seed = kDefaultSeed;
};

struct RateConfig {
    LawChoice law;
    std::optional<LawChoice> diag_law;
    std::optional<double> alpha;
    std::optional<double> beta;
    double from = 2.1;
    double to = 6.0;
    int points = 100;

    double resolved_alpha() const;
    double resolved_beta() const;
    std::vector<double> grid() const;
};

struct PlantSpec {
    PlantKind kind;
    int k = 0;
    double r = 0, s = 0, t = 0;

    static PlantSpec clique(int k, double t);
    static PlantSpec vertex_from_r(double r, double t);
    static PlantSpec vertex_from_s(double s, double t);
    static PlantSpec vertex_from_rs(double r, double s);
};

// sqrt(np / log(1/p))
double clique_guard_bound(int n, double p);

ExperimentReport run_typicality(const TypicalityConfig& cfg, const RunOptions& opts = {});
ExperimentReport run_clique_plant(const CliqueConfig& cfg, const RunOptions& opts = {});
ExperimentReport run_vertex_plant(const VertexConfig& cfg, const RunOptions& opts = {});
ExperimentReport run_local_law(const LocalLawConfig& cfg, const RunOptions& opts = {});
ExperimentReport run_degree_tail(const DegreeTailConfig& cfg, const RunOptions& opts = {});
RateCurve run_rate_curve(const RateConfig& cfg);

void write_rate_csv(const RateCurve& c, const std::string& path);
Json rate_curve_json(const RateCurve& c, const RateConfig& cfg);

// Test vector of the local-law experiment: "sphere" is uniform on the unit
// sphere; "delocalized" is Gaussian on a random support of size
// min(n, (np/log n)^2), normalized, so that |u|_1 <= np/log n.
Eigen::VectorXd local_law_vector(int n, double p, const std::string& kind, uint64_t seed, int index);

// Configs as JSON, with an "experiment" discriminator. Missing fields take
// the defaults above.
Json to_json(const TypicalityConfig& c);
Json to_json(const CliqueConfig& c);
Json to_json(const VertexConfig& c);
Json to_json(const LocalLawConfig& c);
Json to_json(const DegreeTailConfig& c);
Json to_json(const RateConfig& c);
TypicalityConfig typicality_config(const Json& j);
CliqueConfig clique_config(const Json& j);
VertexConfig vertex_config(const Json& j);
LocalLawConfig local_law_config(const Json& j);
DegreeTailConfig degree_tail_config(const Json& j);
RateConfig rate_config(const Json& j);

// Runs the experiment named by config["experiment"].
ExperimentReport run_from_config(const Json& config, const RunOptions& opts = {});

}  // namespace swld
