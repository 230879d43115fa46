#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "vqoa/oracle.hpp"
#include "vqoa/pauli.hpp"
#include "vqoa/polynomial.hpp"
#include "vqoa/problems.hpp"
#include "vqoa/runner.hpp"

namespace vqoa::io {

using nlohmann::json;

class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A problem file: either a polynomial (qubo, hobo, nary, maxcut) or a TSP
/// instance.
struct Problem {
    std::string kind;
    std::optional<Polynomial> polynomial;
    std::optional<TspInstance> tsp;

    int n() const;
    int arity() const;
    int order() const;
};

json polynomial_to_json(const Polynomial& p, const std::string& kind);
Polynomial polynomial_from_json(const json& j);
json tsp_to_json(const TspInstance& inst);
TspInstance tsp_from_json(const json& j);

json problem_to_json(const Problem& p);
Problem problem_from_json(const json& j);

json read_json(const std::filesystem::path& path);
/// Pretty-printed with a trailing newline.
void write_json(const std::filesystem::path& path, const json& j);

Problem load_problem(const std::filesystem::path& path);
PauliSum load_pauli(const std::filesystem::path& path);

json oracle_to_json(const OracleResult& r);

/// Short description of the problem for result files.
json problem_summary(const Problem& p);

/// Result JSON. Only wall_time_s depends on scheduling.
json run_result_to_json(const RunResult& r, const RunConfig& config, const json& problem,
                        const std::string& mode_name, int partitions, const std::vector<std::string>& trace_files,
                        double label_power = kDefaultLabelPower);

/// One CSV per replica as <dir>/<stem>.replica<k>.csv. Returns the paths in
/// replica order.
std::vector<std::string> write_traces(const RunResult& r, const std::filesystem::path& dir, const std::string& stem);

/// Fully materialized configuration, as echoed before running.
json config_to_json(const RunConfig& c, const std::string& mode_name, int partitions,
                    double label_power = kDefaultLabelPower);

std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace vqoa::io
