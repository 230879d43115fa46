#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace vqoa {

struct StopPolicy {
    int max_iters = 5000;             // objective evaluations
    int plateau_window = 500;         // evaluations
    double plateau_rel_change = 5e-4; // 0.05 %
    double abs_tol = 1e-8;            // simplex diameter and value spread

    void validate() const;
};

/// |new - prev| / max(|prev|, 1e-12)
double relative_change(double prev_best, double new_best);

struct TraceRecord {
    int iter = 0;
    double cost = 0.0;
    double best_cost = 0.0;
    double decoded_cost = std::numeric_limits<double>::quiet_NaN();  // best so far
};

struct Trace {
    std::vector<TraceRecord> records;

    /// `iter,cost,best_cost,decoded_cost`; missing decoded costs are empty cells.
    void write_csv(std::ostream& os) const;
};

enum class StopReason { Converged, Plateau, MaxIters };
std::string to_string(StopReason r);

enum class Method { NelderMead, LinearTrustRegion };
std::string to_string(Method m);
Method parse_method(const std::string& s);

struct OptimizerOptions {
    Method method = Method::NelderMead;
    double initial_step = 0.5;  // radians
};

/// Objective value plus, optionally, the exact cost of the point's
/// decoded assignment (NaN if there is none).
struct ObjectiveValue {
    double value = 0.0;
    double decoded = std::numeric_limits<double>::quiet_NaN();
};

using Objective = std::function<ObjectiveValue(std::span<const double>)>;

struct MinimizeResult {
    std::vector<double> x;
    double f = 0.0;
    Trace trace;
    StopReason reason = StopReason::MaxIters;
    int evaluations = 0;
};

class NonFiniteObjective : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Derivative-free minimization. Every objective evaluation counts as one
/// iteration. Stops when the simplex (or trust region) collapses below
/// abs_tol, when the best value moves by less than plateau_rel_change
/// across plateau_window evaluations, or at max_iters evaluations.
MinimizeResult minimize(const Objective& objective, std::vector<double> x0, const StopPolicy& policy,
                        std::uint64_t seed, const OptimizerOptions& options = {});

/// Convenience overload for plain R^d -> R objectives.
MinimizeResult minimize(const std::function<double(std::span<const double>)>& objective, std::vector<double> x0,
                        const StopPolicy& policy, std::uint64_t seed, const OptimizerOptions& options = {});

}  // namespace vqoa
