#include "swld/report.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "swld/numerics.hpp"

namespace swld {

const double* TrialRecord::find(const std::string& key) const {
    for (const auto& [k, v] : scalars)
        if (k == key) return &v;
    return nullptr;
}

std::vector<double> ExperimentReport::column(const std::string& key) const {
    std::vector<double> out;
    for (const auto& t : trials)
        if (const double* v = t.find(key)) out.push_back(*v);
    return out;
}

void ExperimentReport::aggregate() {
    aggregates = Json::object();
    std::vector<std::string> keys;
    for (const auto& t : trials)
        for (const auto& [k, v] : t.scalars)
            if (std::find(keys.begin(), keys.end(), k) == keys.end()) keys.push_back(k);
    for (const auto& k : keys) {
        std::vector<double> xs = column(k);
        Json a;
        a["count"] = xs.size();
        a["mean"] = num::mean(xs);
        if (xs.size() >= 2) a["stddev"] = num::stddev(xs);
        a["min"] = num::quantile(xs, 0.0);
        a["q10"] = num::quantile(xs, 0.1);
        a["median"] = num::quantile(xs, 0.5);
        a["q90"] = num::quantile(xs, 0.9);
        a["max"] = num::quantile(xs, 1.0);
        aggregates[k] = a;
    }
}

double error_scale(int n, double p) {
    double denom = std::min(n * p, std::pow(static_cast<double>(n), 0.4));
    return std::sqrt(std::log(static_cast<double>(n)) / denom);
}

Json to_json(const ExperimentReport& r) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["name"] = r.name;
    j["config"] = r.config;
    Json trials = Json::array();
    for (const auto& t : r.trials) {
        Json o;
        o["seed"] = t.seed;
        for (const auto& [k, v] : t.scalars) o[k] = v;
        trials.push_back(o);
    }
    j["trials"] = trials;
    j["aggregates"] = r.aggregates;
    j["summary"] = r.summary;
    Json pred = Json::object();
    for (const auto& p : r.predicted) pred[p.key] = Json{{"value", p.value}, {"provenance", p.provenance}};
    j["predicted"] = pred;
    j["error_scale"] = r.error_scale;
    j["warnings"] = r.warnings;
    j["tables"] = r.tables;
    return j;
}

ExperimentReport report_from_json(const Json& j) {
    if (j.value("schema_version", 0) != kSchemaVersion) throw std::runtime_error("report: unsupported schema version");
    ExperimentReport r;
    r.name = j.at("name").get<std::string>();
    r.config = j.at("config");
    for (const auto& o : j.at("trials")) {
        TrialRecord t;
        for (const auto& [k, v] : o.items()) {
            if (k == "seed") {
                t.seed = v.get<uint64_t>();
            } else {
                t.add(k, v.get<double>());
            }
        }
        r.trials.push_back(std::move(t));
    }
    r.aggregates = j.at("aggregates");
    r.summary = j.at("summary");
    for (const auto& [k, v] : j.at("predicted").items())
        r.predicted.push_back({k, v.at("value").get<double>(), v.at("provenance").get<std::string>()});
    r.error_scale = j.at("error_scale").get<double>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    r.tables = j.at("tables");
    return r;
}

void persist_report(const ExperimentReport& r, const std::string& path) {
    namespace fs = std::filesystem;
    fs::path parent = fs::path(path).parent_path();
    if (!parent.empty() && !fs::is_directory(parent))
        throw std::runtime_error("persist_report: directory '" + parent.string() + "' does not exist");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("persist_report: cannot open '" + path + "' for writing");
    out << to_json(r).dump(2) << '\n';
    if (!out) throw std::runtime_error("persist_report: write failed for '" + path + "'");
}

ExperimentReport load_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_report: cannot open '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error("load_report: '" + path + "': " + e.what());
    }
    return report_from_json(j);
}

}  // namespace swld
