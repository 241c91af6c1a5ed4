#include "coursealloc/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace coursealloc {

namespace {

// Shortest representation that parses back to the same double.
std::string number(double v) {
    if (std::isnan(v)) return "nan";
    char buffer[32];
    for (int precision = 15; precision <= 17; ++precision) {
        std::snprintf(buffer, sizeof(buffer), "%.*g", precision, v);
        if (std::strtod(buffer, nullptr) == v) break;
    }
    return buffer;
}

// Metric columns shared by per-run and aggregate rows, in header order.
const char* const kMetricNames[] = {"total_utility", "course_utility", "friendship_utility",
                                    "illegal",       "first",          "middle",
                                    "last",          "gini"};
constexpr int kMetricCount = 8;

std::string config_row(const RunReport& r) {
    std::ostringstream out;
    out << r.n << ',' << r.m << ',' << r.b << ',' << r.q << ',' << r.f << ',' << number(r.w) << ','
        << r.rounds << ',' << number(r.alpha);
    return out.str();
}

std::string group_key(const RunReport& r) { return r.algorithm + "|" + config_row(r); }

std::vector<double> metrics_of(const RunReport& r) {
    return {r.total_utility,
            r.course_utility,
            r.friendship_utility,
            static_cast<double>(r.illegal),
            r.first,
            r.middle,
            r.last,
            r.gini_defined ? r.gini : std::nan("")};
}

struct Accumulator {
    std::string algorithm;
    std::string config;
    int count = 0;
    std::vector<double> sum = std::vector<double>(kMetricCount, 0.0);
    std::vector<double> sum_sq = std::vector<double>(kMetricCount, 0.0);
};

}  // namespace

std::string csv_header() {
    std::ostringstream out;
    out << "algorithm,seed,n,m,b,q,f,w,rounds,alpha";
    for (const char* name : kMetricNames) out << ',' << name;
    for (const char* name : kMetricNames) out << ',' << name << "_sd";
    return out.str();
}

std::string csv_row(const RunReport& r) {
    std::ostringstream out;
    out << r.algorithm << ',' << r.seed << ',' << config_row(r);
    for (double v : metrics_of(r)) out << ',' << number(v);
    for (int i = 0; i < kMetricCount; ++i) out << ',';
    return out.str();
}

void write_reports(const std::vector<RunReport>& reports, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write report file: " + path);
    out << csv_header() << '\n';

    std::vector<std::string> group_order;
    std::map<std::string, Accumulator> groups;
    for (const RunReport& r : reports) {
        out << csv_row(r) << '\n';
        const std::string key = group_key(r);
        auto [it, inserted] = groups.try_emplace(key);
        if (inserted) {
            group_order.push_back(key);
            it->second.algorithm = r.algorithm;
            it->second.config = config_row(r);
        }
        const std::vector<double> values = metrics_of(r);
        ++it->second.count;
        for (int k = 0; k < kMetricCount; ++k) {
            it->second.sum[static_cast<std::size_t>(k)] += values[static_cast<std::size_t>(k)];
            it->second.sum_sq[static_cast<std::size_t>(k)] +=
                values[static_cast<std::size_t>(k)] * values[static_cast<std::size_t>(k)];
        }
    }

    for (const std::string& key : group_order) {
        const Accumulator& acc = groups[key];
        out << acc.algorithm << ",," << acc.config;  // empty seed marks the aggregate
        std::vector<double> means(kMetricCount), sds(kMetricCount);
        for (int k = 0; k < kMetricCount; ++k) {
            const double mean = acc.sum[static_cast<std::size_t>(k)] / acc.count;
            const double var =
                std::max(0.0, acc.sum_sq[static_cast<std::size_t>(k)] / acc.count - mean * mean);
            means[static_cast<std::size_t>(k)] = mean;
            sds[static_cast<std::size_t>(k)] = std::sqrt(var);
        }
        for (double v : means) out << ',' << number(v);
        for (double v : sds) out << ',' << number(v);
        out << '\n';
    }
    if (!out) throw std::runtime_error("failed writing report file: " + path);
}

void write_plot_data(const std::vector<RunReport>& reports, const std::string& axis,
                     const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write plot file: " + path);
    out << "algorithm,metric," << axis << ",mean,stddev\n";

    auto axis_value = [&](const RunReport& r) {
        if (axis == "n") return static_cast<double>(r.n);
        if (axis == "q") return static_cast<double>(r.q);
        if (axis == "w") return r.w;
        throw std::invalid_argument("plot axis must be n, q, or w");
    };

    struct Key {
        std::string algorithm;
        double x;
        bool operator<(const Key& other) const {
            if (algorithm != other.algorithm) return algorithm < other.algorithm;
            return x < other.x;
        }
    };
    std::map<Key, Accumulator> groups;
    for (const RunReport& r : reports) {
        Accumulator& acc = groups[Key{r.algorithm, axis_value(r)}];
        const std::vector<double> values = metrics_of(r);
        ++acc.count;
        for (int k = 0; k < kMetricCount; ++k) {
            acc.sum[static_cast<std::size_t>(k)] += values[static_cast<std::size_t>(k)];
            acc.sum_sq[static_cast<std::size_t>(k)] +=
                values[static_cast<std::size_t>(k)] * values[static_cast<std::size_t>(k)];
        }
    }
    for (const auto& [key, acc] : groups) {
        for (int k = 0; k < kMetricCount; ++k) {
            const double mean = acc.sum[static_cast<std::size_t>(k)] / acc.count;
            const double var =
                std::max(0.0, acc.sum_sq[static_cast<std::size_t>(k)] / acc.count - mean * mean);
            out << key.algorithm << ',' << kMetricNames[k] << ',' << number(key.x) << ','
                << number(mean) << ',' << number(std::sqrt(var)) << '\n';
        }
    }
    if (!out) throw std::runtime_error("failed writing plot file: " + path);
}

void write_anytime_trace(const RunReport& report, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write trace file: " + path);
    out << "round,best_illegal,best_utility\n";
    int round = 1;
    for (const AnytimeKey& key : report.anytime_curve) {
        out << round++ << ',' << key.illegal << ',' << number(key.utility) << '\n';
    }
    if (!out) throw std::runtime_error("failed writing trace file: " + path);
}

}  // namespace coursealloc
