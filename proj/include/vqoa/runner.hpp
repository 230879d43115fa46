#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqoa/ansatz.hpp"
#include "vqoa/evaluator.hpp"
#include "vqoa/optimizer.hpp"

namespace vqoa {

/// m = t = 3 up to 20 variables, 7 beyond that and for 5-ary problems.
AnsatzConfig default_ansatz(int n, int arity = 2);

/// Nelder-Mead for binary problems, the linear trust region for N-ary ones.
Method default_method(int arity);

/// Exponent applied to N-ary label fidelities in the relaxed cost; 1 for
/// binary problems, where it has no effect.
double default_label_power(int arity);

/// VQOA_WORKERS if set and valid, else the hardware concurrency (at least 1).
int default_workers();

struct RunConfig {
    AnsatzConfig ansatz;
    StopPolicy stop;
    OptimizerOptions optimizer;
    int replicas = 50;
    int workers = 1;
    std::uint64_t seed = 1;
    bool keep_traces = true;

    void validate(int n) const;
};

inline std::uint64_t replica_seed(std::uint64_t global_seed, int replica) {
    return derive_seed(global_seed, "replica", static_cast<std::uint64_t>(replica));
}

struct ReplicaResult {
    int index = 0;
    std::uint64_t seed = 0;
    bool ok = false;
    std::string error;
    double final_objective = 0.0;
    double best_cost = 0.0;            // best exact value seen
    std::vector<int> best_assignment;
    int evaluations = 0;
    StopReason reason = StopReason::MaxIters;
    Trace trace;
};

struct Ratio {
    std::optional<double> value;  // empty when the reference is ~0
    double gap = 0.0;             // found - reference
};

/// found/reference for minimization families with negative optima, and
/// reference/found for "tsp". |reference| < 1e-9 leaves the ratio undefined.
Ratio approximation_ratio(double found, double reference, const std::string& family);

struct RunResult {
    std::vector<int> best_assignment;
    double best_cost = 0.0;
    int best_replica = -1;
    std::vector<ReplicaResult> replicas;
    std::optional<double> reference;
    std::string reference_source = "none";  // oracle | external | none
    std::optional<Ratio> ratio;
    double wall_time_s = 0.0;

    void set_reference(double value, std::string source, const std::string& family);
};

class RunFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One replica: theta0 uniform in [-2pi, 2pi]^d from the child seed, then
/// minimize. Exceptions are recorded, not propagated.
ReplicaResult run_replica(const CostModel& cost, const RunConfig& config, int index);

/// Best of R independent replicas on a pool of `workers` threads. The result
/// apart from wall_time_s does not depend on the worker count. Throws
/// RunFailed only when every replica aborts.
RunResult run(const CostModel& cost, const RunConfig& config);

struct BenchOptions {
    int repeats = 3;
    std::uint64_t seed = 1;
    int replicas = 4;
    int workers = 1;
    double min_sample_s = 0.02;  // timed loops repeat until at least this long
};

struct BenchRow {
    std::string suite;
    int size = 0;
    std::string mode;
    int partitions = 1;
    int workers = 1;
    double seconds = 0.0;
    std::optional<double> approx_ratio;
};

/// eval_scaling: per-qubit state evaluation and decode at n = size.
/// partition_scaling: one dense group of `size` qubits.
/// worker_scaling: a fixed n=12 QUBO run with `size` workers.
/// brute_vs_dvqoa: paired oracle and DVQOA timings on gen_qubo(size).
std::vector<BenchRow> bench(const std::string& suite, const std::vector<int>& sizes, const BenchOptions& options);

const std::vector<std::string>& bench_suites();

}  // namespace vqoa
