#include "vqoa/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <thread>

#include "vqoa/oracle.hpp"
#include "vqoa/problems.hpp"

namespace vqoa {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Runs job(i) for i in [0, count) on `workers` threads.
template <class Job>
void parallel_for(int count, int workers, const Job& job) {
    workers = std::max(1, std::min(workers, count));
    if (workers == 1) {
        for (int i = 0; i < count; ++i) job(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) job(i);
        });
    }
}

// Repeats f until at least min_s has elapsed; returns seconds per call.
template <class F>
double time_per_call(const F& f, double min_s) {
    long calls = 0;
    const auto t0 = Clock::now();
    double elapsed = 0.0;
    do {
        f();
        ++calls;
        elapsed = seconds_since(t0);
    } while (elapsed < min_s);
    return elapsed / static_cast<double>(calls);
}

template <class F>
double best_of(int repeats, const F& f) {
    double best = std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, repeats); ++r) best = std::min(best, f());
    return best;
}

}  // namespace

AnsatzConfig default_ansatz(int n, int arity) {
    AnsatzConfig c;
    c.n = n;
    c.arity = arity;
    const int depth = (n > 20 || arity == 5) ? 7 : 3;
    c.m = depth;
    c.t = depth;
    return c;
}

Method default_method(int arity) { return arity > 2 ? Method::LinearTrustRegion : Method::NelderMead; }

// Chosen so an adjacent label keeps 1/16 of the weight of the nearest one:
// cos^2(pi/N)^power = 1/16. Gives 2, 4 and about 6.5 for N = 3, 4, 5.
double default_label_power(int arity) {
    if (arity <= 2) return kDefaultLabelPower;
    const double c = std::cos(std::numbers::pi / arity);
    return std::log(16.0) / -std::log(c * c);
}

int default_workers() {
    if (const char* env = std::getenv("VQOA_WORKERS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 4096) return static_cast<int>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

void RunConfig::validate(int n) const {
    ansatz.validate();
    stop.validate();
    if (ansatz.n != n)
        throw std::invalid_argument("ansatz has " + std::to_string(ansatz.n) + " qubits but the problem has " +
                                    std::to_string(n) + " variables");
    if (replicas < 1) throw std::invalid_argument("replicas must be >= 1");
    if (workers < 1) throw std::invalid_argument("workers must be >= 1");
    if (!(optimizer.initial_step > 0)) throw std::invalid_argument("initial step must be positive");
}

Ratio approximation_ratio(double found, double reference, const std::string& family) {
    Ratio r;
    r.gap = found - reference;
    if (std::abs(reference) < 1e-9) return r;
    if (family == "tsp") {
        if (std::abs(found) < 1e-9) return r;
        r.value = reference / found;
    } else {
        r.value = found / reference;
    }
    return r;
}

void RunResult::set_reference(double value, std::string source, const std::string& family) {
    reference = value;
    reference_source = std::move(source);
    ratio = approximation_ratio(best_cost, value, family);
}

ReplicaResult run_replica(const CostModel& cost, const RunConfig& config, int index) {
    ReplicaResult rep;
    rep.index = index;
    rep.seed = replica_seed(config.seed, index);
    rep.best_cost = std::numeric_limits<double>::infinity();
    try {
        Rng init(rep.seed, "theta0");
        Rng noise(rep.seed, "shots");
        auto x0 = random_parameters(config.ansatz, init);
        Objective f = [&](std::span<const double> x) {
            Evaluation e = cost.evaluate(config.ansatz, x, noise);
            if (e.reported < rep.best_cost) {
                rep.best_cost = e.reported;
                rep.best_assignment = std::move(e.assignment);
            }
            return ObjectiveValue{e.objective, e.reported};
        };
        auto res = minimize(f, std::move(x0), config.stop, rep.seed, config.optimizer);
        rep.final_objective = res.f;
        rep.evaluations = res.evaluations;
        rep.reason = res.reason;
        if (config.keep_traces) rep.trace = std::move(res.trace);
        rep.ok = !rep.best_assignment.empty();
        if (!rep.ok) rep.error = "no evaluation completed";
    } catch (const std::exception& e) {
        rep.ok = false;
        rep.error = e.what();
    }
    return rep;
}

RunResult run(const CostModel& cost, const RunConfig& config) {
    config.validate(cost.n());
    if (config.ansatz.arity != cost.arity())
        throw std::invalid_argument("ansatz arity does not match the problem");
    const auto t0 = Clock::now();
    RunResult out;
    out.replicas.resize(static_cast<std::size_t>(config.replicas));
    parallel_for(config.replicas, config.workers, [&](int r) {
        out.replicas[static_cast<std::size_t>(r)] = run_replica(cost, config, r);
    });
    out.wall_time_s = seconds_since(t0);

    // Index order makes ties resolve to the lowest replica.
    for (const auto& rep : out.replicas) {
        if (!rep.ok) continue;
        if (out.best_replica < 0 || rep.best_cost < out.best_cost) {
            out.best_replica = rep.index;
            out.best_cost = rep.best_cost;
            out.best_assignment = rep.best_assignment;
        }
    }
    if (out.best_replica < 0) {
        const std::string first = out.replicas.empty() ? std::string("none") : out.replicas.front().error;
        throw RunFailed("all " + std::to_string(config.replicas) + " replicas failed; first error: " + first);
    }
    return out;
}

const std::vector<std::string>& bench_suites() {
    static const std::vector<std::string> s{"eval_scaling", "partition_scaling", "worker_scaling",
                                            "brute_vs_dvqoa"};
    return s;
}

std::vector<BenchRow> bench(const std::string& suite, const std::vector<int>& sizes, const BenchOptions& options) {
    std::vector<BenchRow> rows;
    if (suite == "eval_scaling") {
        for (int n : sizes) {
            AnsatzConfig cfg = default_ansatz(std::max(n, 1));
            cfg.m = cfg.t = 3;
            Rng rng(options.seed, "bench-theta", static_cast<std::uint64_t>(n));
            const auto params = random_parameters(cfg, rng);
            volatile std::size_t sink = 0;
            const double s = best_of(options.repeats, [&] {
                return time_per_call(
                    [&] {
                        const auto states = all_states(cfg, params);
                        sink = sink + static_cast<std::size_t>(decode_states(states, 2).back());
                    },
                    options.min_sample_s);
            });
            rows.push_back({suite, n, "per_qubit", 1, 1, s, std::nullopt});
        }
    } else if (suite == "partition_scaling") {
        for (int g : sizes) {
            AnsatzConfig cfg;
            cfg.n = g;
            Rng rng(options.seed, "bench-theta", static_cast<std::uint64_t>(g));
            const auto params = random_parameters(cfg, rng);
            const auto states = all_states(cfg, params);
            const PartitionPlan plan{{g}};
            volatile double sink = 0.0;
            const double s = best_of(options.repeats, [&] {
                return time_per_call([&] { sink = sink + std::abs(grouped_state(states, plan).front().back()); },
                                     options.min_sample_s);
            });
            rows.push_back({suite, g, "grouped", 1, 1, s, std::nullopt});
        }
    } else if (suite == "worker_scaling") {
        const auto poly = gen_qubo(12, options.seed);
        const double ref = brute_force_poly(poly).optimum;
        PolynomialCost cost(poly, EvalMode::expectation());
        for (int w : sizes) {
            RunConfig rc;
            rc.ansatz = default_ansatz(12);
            rc.replicas = std::max(options.replicas, w);
            rc.workers = w;
            rc.seed = options.seed;
            rc.keep_traces = false;
            RunResult res;
            const double s = best_of(options.repeats, [&] {
                const auto t0 = Clock::now();
                res = run(cost, rc);
                return seconds_since(t0);
            });
            rows.push_back({suite, w, "expectation", 1, w, s, approximation_ratio(res.best_cost, ref, "qubo").value});
        }
    } else if (suite == "brute_vs_dvqoa") {
        for (int n : sizes) {
            const auto poly = gen_qubo(n, options.seed);
            OracleResult oracle;
            const double s_oracle = best_of(options.repeats, [&] {
                oracle = brute_force_poly(poly, 1);
                return oracle.wall_time_s;
            });
            rows.push_back({suite, n, "oracle", 1, 1, s_oracle, std::nullopt});

            PolynomialCost cost(poly, EvalMode::expectation());
            RunConfig rc;
            rc.ansatz = default_ansatz(n);
            rc.replicas = options.replicas;
            rc.workers = options.workers;
            rc.seed = options.seed;
            rc.keep_traces = false;
            RunResult res;
            const double s_dvqoa = best_of(options.repeats, [&] {
                const auto t0 = Clock::now();
                res = run(cost, rc);
                return seconds_since(t0);
            });
            rows.push_back({suite, n, "dvqoa", 1, options.workers, s_dvqoa,
                            approximation_ratio(res.best_cost, oracle.optimum, "qubo").value});
        }
    } else {
        throw std::invalid_argument("unknown bench suite '" + suite + "'");
    }
    return rows;
}

}  // namespace vqoa
