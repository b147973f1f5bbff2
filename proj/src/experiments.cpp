#include "swld/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include "swld/errors.hpp"
#include "swld/legendre.hpp"
#include "swld/numerics.hpp"
#include "swld/rng.hpp"
#include "swld/semicircle.hpp"

namespace swld {

namespace {

template <class F>
void parallel_for(int count, int threads, F&& fn) {
    int workers = threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    workers = std::max(1, std::min(workers, count));
    std::atomic<int> next{0};
    std::vector<std::exception_ptr> errors(count);
    auto work = [&] {
        for (int i; (i = next++) < count;) {
            try {
                fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

void check_trials(int trials) {
    if (trials < 1) throw InvalidParameter("trials must be >= 1");
}

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string eps_key(double eps) {
    std::ostringstream os;
    os << "mass_sq_eps_" << eps;
    return os.str();
}

// JSON helpers -------------------------------------------------------------

std::optional<double> opt_number(const Json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

void put_opt(Json& j, const char* key, const std::optional<double>& v) {
    if (v) {
        j[key] = *v;
    } else {
        j[key] = nullptr;
    }
}

LawChoice law_from(const Json& j, const char* name_key, const char* param_key, const std::string& dflt) {
    return LawChoice{j.value(name_key, dflt), opt_number(j, param_key)};
}

void put_law(Json& j, const char* name_key, const char* param_key, const LawChoice& l) {
    j[name_key] = l.name;
    put_opt(j, param_key, l.param);
}

void put_model(Json& j, const MatrixModel& m) {
    j["model"] = m.model;
    put_law(j, "law", "law_param", m.law);
    if (m.diag_law) {
        put_law(j, "diag_law", "diag_law_param", *m.diag_law);
    } else {
        j["diag_law"] = nullptr;
        j["diag_law_param"] = nullptr;
    }
}

MatrixModel model_from(const Json& j) {
    MatrixModel m;
    m.model = j.value("model", std::string("wigner"));
    m.law = law_from(j, "law", "law_param", "gaussian");
    if (j.contains("diag_law") && !j.at("diag_law").is_null())
        m.diag_law = law_from(j, "diag_law", "diag_law_param", m.law.name);
    return m;
}

uint64_t seed_from(const Json& j) { return j.contains("seed") ? j.at("seed").get<uint64_t>() : kDefaultSeed; }

std::vector<double> numbers_from(const Json& j, const char* key, std::vector<double> dflt) {
    if (!j.contains(key)) return dflt;
    return j.at(key).get<std::vector<double>>();
}

}  // namespace

// ---------------------------------------------------------------------------

WignerSample MatrixModel::sample(int n, double p, uint64_t seed) const {
    if (model == "adjacency") return sample_adjacency_centered(n, p, seed);
    if (model != "wigner") throw InvalidParameter("unknown model '" + model + "'");
    return sample_wigner(n, p, law.make(), diagonal().make(), seed);
}

double RateConfig::resolved_beta() const { return beta ? *beta : law.make().tail; }

double RateConfig::resolved_alpha() const {
    if (alpha) return *alpha;
    return (diag_law ? *diag_law : law).make().tail;
}

std::vector<double> RateConfig::grid() const {
    if (!(from > 2) || !(to > from) || points < 2) throw InvalidParameter("rate grid needs 2 < from < to, points >= 2");
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) g[i] = i + 1 == points ? to : from + (to - from) * i / (points - 1);
    return g;
}

PlantSpec PlantSpec::clique(int k, double t) {
    if (k < 2) throw InvalidParameter("clique plant needs k >= 2");
    EdgePoint{t};
    return {PlantKind::clique, k, 0, 0, t};
}

PlantSpec PlantSpec::vertex_from_r(double r, double t) {
    double m = m_of(t);
    if (!(r >= 0)) throw InvalidParameter("vertex plant needs r >= 0");
    double s = (t - r) / m;
    if (!(s >= 1)) throw InvalidParameter("vertex plant: r too large for t (s would drop below 1)");
    return {PlantKind::vertex, 0, r, s, t};
}

PlantSpec PlantSpec::vertex_from_s(double s, double t) {
    double m = m_of(t);
    if (!(s >= 1)) throw InvalidParameter("vertex plant needs s >= 1");
    double r = t - m * s;
    if (r < 0 && r > -1e-12 * t) r = 0;
    if (!(r >= 0)) throw InvalidParameter("vertex plant: s too large for t (r would be negative)");
    return {PlantKind::vertex, 0, r, s, t};
}

PlantSpec PlantSpec::vertex_from_rs(double r, double s) {
    double t = vertex_secular_root(r, s).predicted_location;
    return {PlantKind::vertex, 0, r, s, t};
}

double clique_guard_bound(int n, double p) { return std::sqrt(n * p / std::log(1.0 / p)); }

// ---------------------------------------------------------------------------

ExperimentReport run_typicality(const TypicalityConfig& cfg, const RunOptions& opts) {
    check_trials(cfg.trials);
    ExperimentReport rep;
    rep.name = "typicality";
    rep.config = to_json(cfg);
    rep.trials.resize(cfg.trials);
    std::vector<std::vector<std::string>> warns(cfg.trials);
    parallel_for(cfg.trials, opts.threads, [&](int i) {
        uint64_t seed = trial_seed(cfg.seed, i);
        WignerSample x = cfg.model.sample(cfg.n, cfg.p, seed);
        ExtremeEigs e = extreme_eigs(x.matrix);
        std::vector<double> deg = degrees(x);
        TrialRecord& t = rep.trials[i];
        t.seed = seed;
        t.add("lambda1", e.max);
        t.add("lambda_min", e.min);
        t.add("norm", std::max(e.max, -e.min));
        t.add("max_degree", *std::max_element(deg.begin(), deg.end()));
        warns[i] = x.warnings;
    });
    if (!warns.empty()) rep.warnings = warns[0];
    rep.aggregate();
    rep.predicted.push_back({"lambda1", 2.0, "right edge of the semicircle support"});
    rep.summary["mean_lambda1"] = num::mean(rep.column("lambda1"));
    rep.summary["mean_norm"] = num::mean(rep.column("norm"));
    rep.error_scale = error_scale(cfg.n, cfg.p);
    return rep;
}

ExperimentReport run_clique_plant(const CliqueConfig& cfg, const RunOptions& opts) {
    check_trials(cfg.trials);
    PlantSpec plant = PlantSpec::clique(cfg.k, cfg.t);
    if (cfg.k > cfg.n) throw InvalidParameter("clique size exceeds n");
    ExperimentReport rep;
    rep.name = "clique_plant";
    rep.config = to_json(cfg);

    double bound = clique_guard_bound(cfg.n, cfg.p);
    if (cfg.k > bound) {
        std::string msg = "k=" + std::to_string(cfg.k) + " exceeds the sub-entropic bound sqrt(np/log(1/p))=" + fmt(bound);
        if (cfg.strict_guard) throw GuardViolation(msg);
        rep.warnings.push_back(msg);
    } else if (cfg.k > 0.5 * bound) {
        rep.warnings.push_back("k=" + std::to_string(cfg.k) + " is beyond half the sub-entropic bound " + fmt(bound));
    }

    const double m = m_of(plant.t);
    const double value = 1.0 / (cfg.k * m);
    const bool diag = cfg.diagonal == CliqueDiagonal::planted;
    rep.trials.resize(cfg.trials);
    parallel_for(cfg.trials, opts.threads, [&](int i) {
        uint64_t seed = trial_seed(cfg.seed, i);
        WignerSample x = cfg.model.sample(cfg.n, cfg.p, seed);
        plant_clique(x.matrix, cfg.k, value, diag);
        SpectralSummary s = top_eigs(x, std::min(3, cfg.n));
        int above = static_cast<int>(
            std::count_if(s.top_eigs.begin(), s.top_eigs.end(), [&](double v) { return v >= cfg.count_threshold; }));
        if (above == static_cast<int>(s.top_eigs.size())) above = count_eigs_above(x, cfg.count_threshold);
        TrialRecord& t = rep.trials[i];
        t.seed = seed;
        t.add("lambda1", s.top_eigs[0]);
        if (s.top_eigs.size() > 1) t.add("lambda2", s.top_eigs[1]);
        t.add("count_above", above);
        double block_mass = 0;
        for (int j = 0; j < cfg.k; ++j) block_mass += s.top_vec[j] * s.top_vec[j];
        t.add("block_mass_sq", block_mass);
    });
    rep.aggregate();

    BbpPrediction bbp = clique_secular_root(1.0 / m);
    rep.predicted.push_back({"lambda1", bbp.predicted_location, "outlier at y + 1/y for a rank-one plant of strength y = 1/m(t)"});
    double plant_norm = diag ? cfg.k * value : (cfg.k - 1) * value;
    rep.summary["plant_value"] = value;
    rep.summary["plant_norm"] = plant_norm;
    rep.summary["guard_bound"] = bound;
    double beta = cfg.model.law.make().tail;
    if (beta > 0 && cfg.model.model == "wigner") {
        double np = cfg.n * cfg.p;
        double pairs = 0.5 * cfg.k * (cfg.k - 1);
        double proxy = pairs * (std::log(1.0 / cfg.p) + np / (2 * beta * cfg.k * cfg.k * m * m)) / np;
        rep.summary["rate_cost_proxy"] = proxy;
        rep.predicted.push_back({"rate_cost_limit", 1.0 / (4 * beta * m * m), "clique cost 1/(4 beta m(t)^2)"});
    }
    std::vector<double> lam = rep.column("lambda1");
    std::vector<double> cnt = rep.column("count_above");
    rep.summary["mean_lambda1"] = num::mean(lam);
    rep.summary["lambda1_error"] = num::mean(lam) - bbp.predicted_location;
    rep.summary["single_outlier_fraction"] =
        static_cast<double>(std::count(cnt.begin(), cnt.end(), 1.0)) / static_cast<double>(cnt.size());
    rep.error_scale = error_scale(cfg.n, cfg.p);
    return rep;
}

namespace {
PlantSpec resolve_vertex(const VertexConfig& cfg) {
    PlantSpec spec;
    if (cfg.r && cfg.t) {
        spec = PlantSpec::vertex_from_r(*cfg.r, *cfg.t);
    } else if (cfg.s && cfg.t) {
        spec = PlantSpec::vertex_from_s(*cfg.s, *cfg.t);
    } else if (cfg.r && cfg.s) {
        spec = PlantSpec::vertex_from_rs(*cfg.r, *cfg.s);
    } else {
        throw InvalidParameter("vertex plant needs two of r, s, t");
    }
    if (cfg.r && cfg.s && cfg.t && std::abs(*cfg.s - spec.s) > 1e-9 * std::max(1.0, spec.s))
        throw InvalidParameter("vertex plant: r, s, t given but r + m(t) s != t");
    double m = m_of(spec.t);
    if (std::abs(spec.r + m * spec.s - spec.t) > 1e-9 * std::max(1.0, spec.t))
        throw InvalidParameter("vertex plant: constraint r + m(t) s = t not met");
    return spec;
}
}  // namespace

ExperimentReport run_vertex_plant(const VertexConfig& cfg, const RunOptions& opts) {
    check_trials(cfg.trials);
    PlantSpec plant = resolve_vertex(cfg);
    BbpPrediction bbp = vertex_secular_root(plant.r, plant.s);
    ExperimentReport rep;
    rep.name = "vertex_plant";
    rep.config = to_json(cfg);
    const int min_nnz = static_cast<int>(std::ceil(cfg.n * cfg.p / 2));
    const std::vector<double> eps{0.1, 0.2, 0.3, 0.5};
    rep.trials.resize(cfg.trials);
    parallel_for(cfg.trials, opts.threads, [&](int i) {
        uint64_t seed = trial_seed(cfg.seed, i);
        uint64_t used = seed;
        int attempts = 0;
        WignerSample x = cfg.model.sample(cfg.n, cfg.p, seed);
        while (x.matrix.offdiag_nnz(0) < min_nnz) {
            if (++attempts > 16) throw ExperimentFailure("vertex plant: first column stays too sparse");
            used = trial_seed(seed, attempts);
            x = cfg.model.sample(cfg.n, cfg.p, used);
        }
        plant_vertex(x.matrix, plant.r, plant.s);
        double first = x.matrix.offdiag_column_sq(0);
        if (std::abs(first - plant.s) > 1e-10 * std::max(1.0, plant.s) || x.matrix.get(0, 0) != plant.r)
            throw ExperimentFailure("vertex plant: mutation did not hit the prescribed (r, s)");
        SpectralSummary s = top_eigs(x, std::min(3, cfg.n));
        std::vector<double> full = full_column_degrees(x);
        int above = static_cast<int>(
            std::count_if(s.top_eigs.begin(), s.top_eigs.end(), [&](double v) { return v >= cfg.count_threshold; }));
        if (above == static_cast<int>(s.top_eigs.size())) above = count_eigs_above(x, cfg.count_threshold);

        TrialRecord& t = rep.trials[i];
        t.seed = used;
        t.add("lambda1", s.top_eigs[0]);
        if (s.top_eigs.size() > 1) t.add("lambda2", s.top_eigs[1]);
        t.add("count_above", above);
        t.add("first_degree", first);
        t.add("first_weight", x.matrix.get(0, 0));
        t.add("max_full_degree", *std::max_element(full.begin(), full.end()));
        t.add("max_degree", s.max_degree);
        t.add("resample_attempts", attempts);
        for (const auto& pt : localization_profile(s.top_vec, eps)) t.add(eps_key(pt.eps), pt.mass_sq);
    });
    rep.aggregate();
    rep.predicted.push_back({"lambda1", bbp.predicted_location, "largest root of 1 - s m(z)/(z - r)"});
    rep.predicted.push_back({"max_full_degree", lambda_over_m(plant.t), "degree t/m(t) of the vertex strategy"});
    rep.summary["r"] = plant.r;
    rep.summary["s"] = plant.s;
    rep.summary["t"] = plant.t;
    std::vector<double> lam = rep.column("lambda1");
    rep.summary["mean_lambda1"] = num::mean(lam);
    rep.summary["lambda1_error"] = num::mean(lam) - bbp.predicted_location;
    rep.error_scale = error_scale(cfg.n, cfg.p);
    return rep;
}

Eigen::VectorXd local_law_vector(int n, double p, const std::string& kind, uint64_t seed, int index) {
    RngStream rng(seed, static_cast<uint32_t>(index), 0, 7);
    Eigen::VectorXd u = Eigen::VectorXd::Zero(n);
    if (kind == "sphere") {
        for (int i = 0; i < n; ++i) u[i] = rng.normal();
    } else if (kind == "delocalized") {
        double budget = n * p / std::log(static_cast<double>(n));
        int K = static_cast<int>(std::clamp(std::floor(budget * budget), 1.0, static_cast<double>(n)));
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        for (int i = 0; i < K; ++i) {
            int j = i + static_cast<int>(rng.uniform() * (n - i));
            std::swap(idx[i], idx[j]);
            u[idx[i]] = rng.normal();
        }
    } else {
        throw InvalidParameter("unknown test vector kind '" + kind + "'");
    }
    return u.normalized();
}

ExperimentReport run_local_law(const LocalLawConfig& cfg, const RunOptions& opts) {
    check_trials(cfg.trials);
    if (cfg.vectors < 1) throw InvalidParameter("local law needs at least one test vector");
    if (cfg.vector_kind != "sphere" && cfg.vector_kind != "delocalized" && cfg.vector_kind != "mixed")
        throw InvalidParameter("unknown test vector kind '" + cfg.vector_kind + "'");
    const double m = m_of(cfg.lambda);
    ExperimentReport rep;
    rep.name = "local_law";
    rep.config = to_json(cfg);
    rep.trials.resize(cfg.trials);
    parallel_for(cfg.trials, opts.threads, [&](int i) {
        uint64_t seed = trial_seed(cfg.seed, i);
        WignerSample x = cfg.model.sample(cfg.n, cfg.p, seed);
        double l1 = top_eigs(x, 1).top_eigs[0];
        TrialRecord& t = rep.trials[i];
        t.seed = seed;
        t.add("lambda1", l1);
        if (l1 >= cfg.lambda - 0.1) {
            t.add("excluded", 1);
            return;
        }
        t.add("excluded", 0);
        ResolventProbe probe(x.matrix, l1);
        std::vector<double> q(cfg.vectors), err2(cfg.vectors), l1norm(cfg.vectors), iters(cfg.vectors);
        double max_err = 0;
        for (int v = 0; v < cfg.vectors; ++v) {
            std::string kind = cfg.vector_kind == "mixed" ? (v % 2 == 0 ? "sphere" : "delocalized") : cfg.vector_kind;
            Eigen::VectorXd u = local_law_vector(cfg.n, cfg.p, kind, seed, v);
            int it = 0;
            q[v] = probe.quadratic(cfg.lambda, u, &it);
            err2[v] = (q[v] - m) * (q[v] - m);
            l1norm[v] = u.lpNorm<1>();
            iters[v] = it;
            max_err = std::max(max_err, std::abs(q[v] - m));
        }
        t.add("mean_quadratic", num::mean(q));
        t.add("mean_error", num::mean(q) - m);
        t.add("rms_error", std::sqrt(num::mean(err2)));
        t.add("max_abs_error", max_err);
        t.add("mean_l1_norm", num::mean(l1norm));
        t.add("mean_cg_iterations", num::mean(iters));
    });
    rep.aggregate();
    int excluded = 0;
    std::vector<double> means, rms;
    for (const auto& t : rep.trials) {
        if (*t.find("excluded") != 0) {
            ++excluded;
            continue;
        }
        means.push_back(*t.find("mean_quadratic"));
        rms.push_back(*t.find("rms_error") * *t.find("rms_error"));
    }
    if (means.empty()) throw ExperimentFailure("local law: every trial was excluded (lambda1 too close to lambda)");
    double frac = static_cast<double>(excluded) / cfg.trials;
    rep.summary["excluded_trials"] = excluded;
    rep.summary["excluded_fraction"] = frac;
    rep.summary["flagged"] = frac > 0.2;
    if (frac > 0.2) rep.warnings.push_back("more than 20% of trials excluded");
    rep.summary["mean_quadratic"] = num::mean(means);
    rep.summary["mean_error"] = num::mean(means) - m;
    rep.summary["rms_error"] = std::sqrt(num::mean(rms));
    rep.summary["l1_budget"] = cfg.n * cfg.p / std::log(static_cast<double>(cfg.n));
    rep.predicted.push_back({"mean_quadratic", m, "semicircle Stieltjes transform m(lambda)"});
    rep.error_scale = error_scale(cfg.n, cfg.p);
    return rep;
}

ExperimentReport run_degree_tail(const DegreeTailConfig& cfg, const RunOptions& opts) {
    check_trials(cfg.trials);
    if (cfg.n < 2 || !(cfg.p > 0 && cfg.p <= 1)) throw InvalidParameter("degree tail: bad n or p");
    EntryLaw law = cfg.law.make();
    LegendreTransform h = build_transform(law);
    const double np = cfg.n * cfg.p;
    ExperimentReport rep;
    rep.name = "degree_tail";
    rep.config = to_json(cfg);

    Json cgf = Json::array();
    double max_gap = 0;
    for (double th : cfg.theta_grid) {
        if (!(th < law.theta_max())) throw InvalidParameter("degree tail: theta outside the domain of L");
        double L = law.squared_mgf(th);
        double lam = (cfg.n - 1) / np * std::log1p(cfg.p * (L - 1));
        double gap = std::abs(lam - (L - 1));
        max_gap = std::max(max_gap, gap);
        cgf.push_back(Json{{"theta", th}, {"lambda_n", lam}, {"limit", L - 1}, {"gap", gap}});
    }
    rep.tables["cgf"] = cgf;
    rep.summary["max_cgf_gap"] = max_gap;

    rep.trials.resize(cfg.trials);
    const double log_q = std::log1p(-cfg.p);
    parallel_for(cfg.trials, opts.threads, [&](int i) {
        uint64_t seed = trial_seed(cfg.seed, i);
        RngStream rng(seed, 0, 0, 11);
        double deg = 0;
        long long j = -1;
        while (true) {
            double gap = cfg.p < 1 ? std::floor(std::log(rng.uniform_pos()) / log_q) : 0.0;
            j += static_cast<long long>(gap) + 1;
            if (j >= cfg.n - 1) break;
            double g = law.sample(rng);
            deg += g * g;
        }
        rep.trials[i].seed = seed;
        rep.trials[i].add("degree", deg / np);
    });
    rep.aggregate();

    std::vector<double> d = rep.column("degree");
    Json tail = Json::array();
    for (double t : cfg.t_grid) {
        if (!(t > 1 && t <= 5)) throw InvalidParameter("degree tail: t must lie in (1, 5]");
        double count = static_cast<double>(std::count_if(d.begin(), d.end(), [t](double v) { return v >= t; }));
        double freq = count / d.size();
        double ht = h(t);
        Json row{{"t", t}, {"frequency", freq}, {"minus_h_L", -ht}, {"chernoff_bound", std::exp(-np * ht)}};
        row["log_frequency_over_np"] = freq > 0 ? Json(std::log(freq) / np) : Json(nullptr);
        tail.push_back(row);
    }
    rep.tables["tail"] = tail;
    rep.predicted.push_back({"mean_degree", (cfg.n - 1) / static_cast<double>(cfg.n), "E|X_1|^2 with the diagonal removed"});
    rep.error_scale = error_scale(cfg.n, cfg.p);
    return rep;
}

RateCurve run_rate_curve(const RateConfig& cfg) {
    LegendreTransform h = build_transform(cfg.law.make());
    return build_rate_curve(h, cfg.resolved_alpha(), cfg.resolved_beta(), cfg.grid());
}

void write_rate_csv(const RateCurve& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out.precision(17);
    out << "lambda,i_hat,clique,i,regime\n";
    for (size_t k = 0; k < c.lambda_grid.size(); ++k) {
        out << c.lambda_grid[k] << ',' << c.i_hat[k] << ',';
        if (std::isinf(c.clique_term[k])) {
            out << "inf";
        } else {
            out << c.clique_term[k];
        }
        out << ',' << c.i_value[k] << ',' << regime_name(c.regime[k]) << '\n';
    }
}

Json rate_curve_json(const RateCurve& c, const RateConfig& cfg) {
    Json j;
    j["config"] = to_json(cfg);
    j["alpha"] = cfg.resolved_alpha();
    j["beta"] = cfg.resolved_beta();
    j["t_star"] = c.t_star ? Json(*c.t_star) : Json(nullptr);
    Json rows = Json::array();
    for (size_t k = 0; k < c.lambda_grid.size(); ++k) {
        Json r{{"lambda", c.lambda_grid[k]}, {"i_hat", c.i_hat[k]}};
        r["clique"] = std::isinf(c.clique_term[k]) ? Json(nullptr) : Json(c.clique_term[k]);
        r["i"] = c.i_value[k];
        r["regime"] = regime_name(c.regime[k]);
        rows.push_back(r);
    }
    j["rows"] = rows;
    return j;
}

// Config (de)serialization ---------------------------------------------------

Json to_json(const TypicalityConfig& c) {
    Json j;
    j["experiment"] = "typicality";
    j["n"] = c.n;
    j["p"] = c.p;
    put_model(j, c.model);
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    return j;
}

Json to_json(const CliqueConfig& c) {
    Json j;
    j["experiment"] = "clique_plant";
    j["n"] = c.n;
    j["p"] = c.p;
    put_model(j, c.model);
    j["k"] = c.k;
    j["t"] = c.t;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["diagonal"] = c.diagonal == CliqueDiagonal::planted ? "planted" : "sampled";
    j["count_threshold"] = c.count_threshold;
    j["strict_guard"] = c.strict_guard;
    return j;
}

Json to_json(const VertexConfig& c) {
    Json j;
    j["experiment"] = "vertex_plant";
    j["n"] = c.n;
    j["p"] = c.p;
    put_model(j, c.model);
    put_opt(j, "r", c.r);
    put_opt(j, "s", c.s);
    put_opt(j, "t", c.t);
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["count_threshold"] = c.count_threshold;
    return j;
}

Json to_json(const LocalLawConfig& c) {
    Json j;
    j["experiment"] = "local_law";
    j["n"] = c.n;
    j["p"] = c.p;
    put_model(j, c.model);
    j["lambda"] = c.lambda;
    j["vectors"] = c.vectors;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    j["vector_kind"] = c.vector_kind;
    return j;
}

Json to_json(const DegreeTailConfig& c) {
    Json j;
    j["experiment"] = "degree_tail";
    put_law(j, "law", "law_param", c.law);
    j["n"] = c.n;
    j["p"] = c.p;
    j["theta_grid"] = c.theta_grid;
    j["t_grid"] = c.t_grid;
    j["trials"] = c.trials;
    j["seed"] = c.seed;
    return j;
}

Json to_json(const RateConfig& c) {
    Json j;
    j["experiment"] = "rate";
    put_law(j, "law", "law_param", c.law);
    if (c.diag_law) {
        put_law(j, "diag_law", "diag_law_param", *c.diag_law);
    } else {
        j["diag_law"] = nullptr;
        j["diag_law_param"] = nullptr;
    }
    put_opt(j, "alpha", c.alpha);
    put_opt(j, "beta", c.beta);
    j["from"] = c.from;
    j["to"] = c.to;
    j["points"] = c.points;
    return j;
}

TypicalityConfig typicality_config(const Json& j) {
    TypicalityConfig c;
    c.n = j.value("n", c.n);
    c.p = j.value("p", c.p);
    c.model = model_from(j);
    c.trials = j.value("trials", c.trials);
    c.seed = seed_from(j);
    return c;
}

CliqueConfig clique_config(const Json& j) {
    CliqueConfig c;
    c.n = j.value("n", c.n);
    c.p = j.value("p", c.p);
    c.model = model_from(j);
    c.k = j.value("k", c.k);
    c.t = j.value("t", c.t);
    c.trials = j.value("trials", c.trials);
    c.seed = seed_from(j);
    std::string d = j.value("diagonal", std::string("planted"));
    if (d != "planted" && d != "sampled") throw InvalidParameter("diagonal must be 'planted' or 'sampled'");
    c.diagonal = d == "planted" ? CliqueDiagonal::planted : CliqueDiagonal::sampled;
    c.count_threshold = j.value("count_threshold", c.count_threshold);
    c.strict_guard = j.value("strict_guard", c.strict_guard);
    return c;
}

VertexConfig vertex_config(const Json& j) {
    VertexConfig c;
    c.n = j.value("n", c.n);
    c.p = j.value("p", c.p);
    c.model = model_from(j);
    c.r = opt_number(j, "r");
    c.s = opt_number(j, "s");
    c.t = opt_number(j, "t");
    c.trials = j.value("trials", c.trials);
    c.seed = seed_from(j);
    c.count_threshold = j.value("count_threshold", c.count_threshold);
    return c;
}

LocalLawConfig local_law_config(const Json& j) {
    LocalLawConfig c;
    c.n = j.value("n", c.n);
    c.p = j.value("p", c.p);
    c.model = model_from(j);
    c.lambda = j.value("lambda", c.lambda);
    c.vectors = j.value("vectors", c.vectors);
    c.trials = j.value("trials", c.trials);
    c.seed = seed_from(j);
    c.vector_kind = j.value("vector_kind", c.vector_kind);
    return c;
}

DegreeTailConfig degree_tail_config(const Json& j) {
    DegreeTailConfig c;
    c.law = law_from(j, "law", "law_param", c.law.name);
    c.n = j.value("n", c.n);
    c.p = j.value("p", c.p);
    c.theta_grid = numbers_from(j, "theta_grid", c.theta_grid);
    c.t_grid = numbers_from(j, "t_grid", c.t_grid);
    c.trials = j.value("trials", c.trials);
    c.seed = seed_from(j);
    return c;
}

RateConfig rate_config(const Json& j) {
    RateConfig c;
    c.law = law_from(j, "law", "law_param", c.law.name);
    if (j.contains("diag_law") && !j.at("diag_law").is_null())
        c.diag_law = law_from(j, "diag_law", "diag_law_param", c.law.name);
    c.alpha = opt_number(j, "alpha");
    c.beta = opt_number(j, "beta");
    c.from = j.value("from", c.from);
    c.to = j.value("to", c.to);
    c.points = j.value("points", c.points);
    return c;
}

ExperimentReport run_from_config(const Json& config, const RunOptions& opts) {
    std::string e = config.value("experiment", std::string());
    if (e == "typicality") return run_typicality(typicality_config(config), opts);
    if (e == "clique_plant") return run_clique_plant(clique_config(config), opts);
    if (e == "vertex_plant") return run_vertex_plant(vertex_config(config), opts);
    if (e == "local_law") return run_local_law(local_law_config(config), opts);
    if (e == "degree_tail") return run_degree_tail(degree_tail_config(config), opts);
    throw InvalidParameter("unknown experiment '" + e + "'");
}

}  // namespace swld
