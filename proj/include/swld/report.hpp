#pragma once

#include <cstdint>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace swld {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct TrialRecord {
    uint64_t seed = 0;
    std::vector<std::pair<std::string, double>> scalars;

    void add(std::string key, double v) { scalars.emplace_back(std::move(key), v); }
    const double* find(const std::string& key) const;
    bool operator==(const TrialRecord&) const = default;
};

struct Predicted {
    std::string key;
    double value;
    std::string provenance;
    bool operator==(const Predicted&) const = default;
};

struct ExperimentReport {
    std::string name;
    Json config;
    std::vector<TrialRecord> trials;
    Json aggregates = Json::object();
    Json summary = Json::object();
    std::vector<Predicted> predicted;
    double error_scale = 0;
    std::vector<std::string> warnings;
    Json tables = Json::object();

    // Per-field mean, stddev (two or more values), min, quantiles, max.
    void aggregate();
    std::vector<double> column(const std::string& key) const;
};

// sqrt(log n / min(np, n^0.4))
double error_scale(int n, double p);

Json to_json(const ExperimentReport& r);
ExperimentReport report_from_json(const Json& j);

void persist_report(const ExperimentReport& r, const std::string& path);
ExperimentReport load_report(const std::string& path);

}  // namespace swld
