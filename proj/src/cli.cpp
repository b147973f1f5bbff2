#include "swld/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <ostream>

#include "swld/errors.hpp"
#include "swld/experiments.hpp"

namespace swld::cli {

namespace {

// Collects explicitly given flags into a JSON config overlay.
class Binder {
public:
    explicit Binder(CLI::App* app) : app_(app) {}

    template <class T>
    void opt(const std::string& flag, const std::string& key, const std::string& desc) {
        auto value = std::make_shared<T>();
        CLI::Option* o = app_->add_option(flag, *value, desc);
        if constexpr (std::is_same_v<T, std::vector<double>>) o->delimiter(',');
        apply_.push_back([o, value, key](Json& j) {
            if (o->count() > 0) j[key] = *value;
        });
    }

    void flag(const std::string& flag, const std::string& key, const std::string& desc) {
        CLI::Option* o = app_->add_flag(flag, desc);
        apply_.push_back([o, key](Json& j) {
            if (o->count() > 0) j[key] = true;
        });
    }

    void overlay(Json& j) const {
        for (const auto& f : apply_) f(j);
    }

private:
    CLI::App* app_;
    std::vector<std::function<void(Json&)>> apply_;
};

struct Common {
    std::string config_path;
    std::string out_path;
    bool json = false;
    int threads = 0;
};

void add_common(CLI::App* app, Binder& b, Common& c) {
    b.opt<uint64_t>("--seed", "seed", "master seed");
    app->add_option("--out", c.out_path, "output path");
    app->add_flag("--json", c.json, "print machine-readable JSON");
    app->add_option("--threads", c.threads, "worker threads (0: all cores)");
    app->add_option("--config", c.config_path, "JSON config file");
}

void add_model(Binder& b) {
    b.opt<int>("--n", "n", "matrix order");
    b.opt<double>("--p", "p", "edge probability");
    b.opt<std::string>("--model", "model", "wigner | adjacency");
    b.opt<std::string>("--law", "law", "off-diagonal law: gaussian | rademacher | uniform | bernoulli");
    b.opt<double>("--law-param", "law_param", "law parameter (R or p)");
    b.opt<std::string>("--diag-law", "diag_law", "diagonal law (default: off-diagonal law)");
    b.opt<double>("--diag-law-param", "diag_law_param", "diagonal law parameter");
}

Json load_config(const std::string& path) {
    if (path.empty()) return Json::object();
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot open config file '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw InvalidParameter("config file '" + path + "': " + e.what());
    }
}

std::string f3(double v) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << v;
    return os.str();
}

double predicted_value(const ExperimentReport& r, const std::string& key) {
    for (const auto& p : r.predicted)
        if (p.key == key) return p.value;
    return std::nan("");
}

void print_summary(const ExperimentReport& r, std::ostream& out) {
    if (r.name == "clique_plant" || r.name == "vertex_plant") {
        if (r.name == "vertex_plant")
            out << "r = " << r.summary["r"].get<double>() << ", s = " << std::setprecision(10)
                << r.summary["s"].get<double>() << ", t = " << r.summary["t"].get<double>() << '\n';
        out << "predicted " << f3(predicted_value(r, "lambda1")) << " measured "
            << f3(r.summary["mean_lambda1"].get<double>()) << " (" << r.trials.size() << " trials)\n";
    } else if (r.name == "typicality") {
        out << "mean lambda1 " << f3(r.summary["mean_lambda1"].get<double>()) << ", mean norm "
            << f3(r.summary["mean_norm"].get<double>()) << ", predicted 2 (" << r.trials.size() << " trials)\n";
    } else if (r.name == "local_law") {
        out << "mean quadratic " << r.summary["mean_quadratic"].get<double>() << ", m(lambda) "
            << predicted_value(r, "mean_quadratic") << ", mean error " << r.summary["mean_error"].get<double>()
            << ", rms error " << r.summary["rms_error"].get<double>() << ", excluded "
            << r.summary["excluded_trials"].get<int>() << "/" << r.trials.size() << '\n';
    } else if (r.name == "degree_tail") {
        out << "theta,lambda_n,limit,gap\n";
        for (const auto& row : r.tables["cgf"])
            out << row["theta"].get<double>() << ',' << row["lambda_n"].get<double>() << ','
                << row["limit"].get<double>() << ',' << row["gap"].get<double>() << '\n';
        out << "t,frequency,log_frequency_over_np,minus_h_L\n";
        for (const auto& row : r.tables["tail"]) {
            out << row["t"].get<double>() << ',' << row["frequency"].get<double>() << ',';
            if (row["log_frequency_over_np"].is_null()) {
                out << "nan";
            } else {
                out << row["log_frequency_over_np"].get<double>();
            }
            out << ',' << row["minus_h_L"].get<double>() << '\n';
        }
    }
    for (const auto& w : r.warnings) out << "warning: " << w << '\n';
}

void emit_report(const ExperimentReport& r, const Common& c, std::ostream& out) {
    if (!c.out_path.empty()) persist_report(r, c.out_path);
    if (c.json) {
        out << to_json(r).dump(2) << '\n';
    } else {
        print_summary(r, out);
    }
}

void emit_rate(const RateConfig& cfg, const std::string& out_path, bool json, std::ostream& out) {
    RateCurve c = run_rate_curve(cfg);
    if (!out_path.empty()) write_rate_csv(c, out_path);
    if (json) {
        out << rate_curve_json(c, cfg).dump(2) << '\n';
        return;
    }
    out << c.lambda_grid.size() << " rows";
    if (!out_path.empty()) out << " written to " << out_path;
    out << '\n';
    if (c.t_star) {
        out << "t_star " << std::setprecision(10) << *c.t_star << '\n';
    } else {
        out << "no regime crossover on the grid\n";
    }
}

int sweep(const std::string& path, const RunOptions& opts, bool json, std::ostream& out, std::ostream& err) {
    Json cfg = load_config(path);
    Json runs = cfg.is_object() && cfg.contains("runs") ? cfg["runs"] : cfg;
    if (!runs.is_array()) throw InvalidParameter("sweep config must be a JSON array of runs");
    int failed = 0;
    int index = 0;
    for (const auto& run : runs) {
        try {
            std::string out_path = run.value("out", std::string());
            if (run.value("experiment", std::string()) == "rate") {
                emit_rate(rate_config(run), out_path, json, out);
            } else {
                ExperimentReport r = run_from_config(run, opts);
                if (!out_path.empty()) persist_report(r, out_path);
                if (json) {
                    out << to_json(r).dump(2) << '\n';
                } else {
                    print_summary(r, out);
                }
            }
        } catch (const std::exception& e) {
            ++failed;
            err << "run " << index << " failed: " << e.what() << '\n';
        }
        ++index;
    }
    return failed > 0 ? kFailure : kSuccess;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rate functions and Monte Carlo checks for the top eigenvalue of sparse Wigner matrices"};
    app.require_subcommand(1);

    Common common;

    CLI::App* rate = app.add_subcommand("rate", "tabulate the rate function I on a lambda grid");
    Binder rate_b(rate);
    add_common(rate, rate_b, common);
    rate_b.opt<std::string>("--law", "law", "off-diagonal law");
    rate_b.opt<double>("--law-param", "law_param", "law parameter");
    rate_b.opt<std::string>("--diag-law", "diag_law", "diagonal law");
    rate_b.opt<double>("--diag-law-param", "diag_law_param", "diagonal law parameter");
    rate_b.opt<double>("--alpha", "alpha", "diagonal tail parameter (default from the diagonal law)");
    rate_b.opt<double>("--beta", "beta", "off-diagonal tail parameter (default from the law)");
    rate_b.opt<double>("--from", "from", "first lambda (> 2)");
    rate_b.opt<double>("--to", "to", "last lambda");
    rate_b.opt<int>("--points", "points", "grid size");

    CLI::App* plant = app.add_subcommand("plant", "planted clique or heavy vertex");
    Binder plant_b(plant);
    add_common(plant, plant_b, common);
    add_model(plant_b);
    bool is_clique = false, is_vertex = false;
    plant->add_flag("--clique", is_clique, "plant a clique block");
    plant->add_flag("--vertex", is_vertex, "plant a heavy vertex");
    plant_b.opt<int>("--k", "k", "clique size");
    plant_b.opt<double>("--t", "t", "target outlier location");
    plant_b.opt<double>("--r", "r", "vertex weight X_11");
    plant_b.opt<double>("--s", "s", "vertex degree");
    plant_b.opt<int>("--trials", "trials", "number of trials");
    plant_b.opt<std::string>("--diagonal", "diagonal", "clique block diagonal: planted | sampled");
    plant_b.opt<double>("--count-threshold", "count_threshold", "threshold for outlier counts");
    plant_b.flag("--strict-guard", "strict_guard", "fail when k exceeds sqrt(np/log(1/p))");

    CLI::App* loclaw = app.add_subcommand("loclaw", "resolvent quadratic forms above the spectrum");
    Binder loclaw_b(loclaw);
    add_common(loclaw, loclaw_b, common);
    add_model(loclaw_b);
    loclaw_b.opt<double>("--lambda", "lambda", "spectral parameter");
    loclaw_b.opt<int>("--trials", "trials", "number of trials");
    loclaw_b.opt<int>("--vectors", "vectors", "test vectors per trial");
    loclaw_b.opt<std::string>("--vector-kind", "vector_kind", "delocalized | sphere | mixed");

    CLI::App* tail = app.add_subcommand("tail", "degree cumulant generating function and tail frequencies");
    Binder tail_b(tail);
    add_common(tail, tail_b, common);
    tail_b.opt<std::string>("--law", "law", "entry law");
    tail_b.opt<double>("--law-param", "law_param", "law parameter");
    tail_b.opt<int>("--n", "n", "matrix order");
    tail_b.opt<double>("--p", "p", "edge probability");
    tail_b.opt<std::vector<double>>("--theta", "theta_grid", "comma-separated theta grid");
    tail_b.opt<std::vector<double>>("--t", "t_grid", "comma-separated degree thresholds");
    tail_b.opt<int>("--draws", "trials", "column draws");

    CLI::App* typ = app.add_subcommand("typicality", "top eigenvalue without planting");
    Binder typ_b(typ);
    add_common(typ, typ_b, common);
    add_model(typ_b);
    typ_b.opt<int>("--trials", "trials", "number of trials");

    CLI::App* sw = app.add_subcommand("sweep", "run a JSON list of configs");
    std::string sweep_path;
    sw->add_option("--config", sweep_path, "JSON array of run configs")->required();
    sw->add_flag("--json", common.json, "print machine-readable JSON");
    sw->add_option("--threads", common.threads, "worker threads (0: all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    RunOptions opts{common.threads};
    try {
        if (*sw) return sweep(sweep_path, opts, common.json, out, err);

        Json cfg = load_config(common.config_path);
        if (!cfg.is_object()) throw InvalidParameter("config file must hold a JSON object");
        if (*rate) {
            rate_b.overlay(cfg);
            if (!cfg.contains("law")) throw InvalidParameter("rate: --law is required");
            emit_rate(rate_config(cfg), common.out_path, common.json, out);
            return kSuccess;
        }
        if (*plant) {
            plant_b.overlay(cfg);
            if (is_clique && is_vertex) throw InvalidParameter("plant: --clique and --vertex are exclusive");
            std::string kind = is_clique ? "clique_plant" : is_vertex ? "vertex_plant" : cfg.value("experiment", std::string());
            if (kind != "clique_plant" && kind != "vertex_plant")
                throw InvalidParameter("plant: one of --clique or --vertex is required");
            cfg["experiment"] = kind;
            ExperimentReport r = kind == "clique_plant" ? run_clique_plant(clique_config(cfg), opts)
                                                        : run_vertex_plant(vertex_config(cfg), opts);
            emit_report(r, common, out);
            return kSuccess;
        }
        if (*loclaw) {
            loclaw_b.overlay(cfg);
            emit_report(run_local_law(local_law_config(cfg), opts), common, out);
            return kSuccess;
        }
        if (*tail) {
            tail_b.overlay(cfg);
            emit_report(run_degree_tail(degree_tail_config(cfg), opts), common, out);
            return kSuccess;
        }
        if (*typ) {
            typ_b.overlay(cfg);
            emit_report(run_typicality(typicality_config(cfg), opts), common, out);
            return kSuccess;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const Json::exception& e) {
        err << "error: bad config value: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "experiment failed: " << e.what() << '\n';
        return kFailure;
    }
    return kUsage;
}

}  // namespace swld::cli
