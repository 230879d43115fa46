#pragma once

#include <complex>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vqoa/ansatz.hpp"
#include "vqoa/pauli.hpp"
#include "vqoa/polynomial.hpp"
#include "vqoa/problems.hpp"
#include "vqoa/rng.hpp"

namespace vqoa {

inline constexpr double kDefaultLabelPower = 1.0;

struct EvalMode {
    enum class Kind { Expectation, Decode, Shots };

    Kind kind = Kind::Expectation;
    int shots = 0;
    double label_power = kDefaultLabelPower;  // N-ary label distribution, see label_probabilities

    static EvalMode expectation() { return {Kind::Expectation, 0, kDefaultLabelPower}; }
    static EvalMode decode() { return {Kind::Decode, 0, kDefaultLabelPower}; }
    static EvalMode sampled(int shots);

    std::string name() const;
    static EvalMode parse(const std::string& name, int shots);
};

/// Disjoint consecutive qubit groups, simulated as separate dense vectors.
struct PartitionPlan {
    std::vector<int> sizes;

    /// `parts` groups whose sizes differ by at most one.
    static PartitionPlan even(int n, int parts);
    int total() const;
    void validate(int n) const;
};

inline constexpr int kDefaultGroupCap = 26;

class MemoryGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PolyEval {
    double cost = 0.0;       // value under the evaluation mode
    double cost_std = 0.0;   // sample standard deviation (shots only)
    std::vector<int> decoded;
    double decoded_cost = 0.0;
    std::vector<int> best_sample;  // shots only
    double best_sample_cost = 0.0;
};

/// Cost of a polynomial under the product-state ansatz. `rng` is required
/// for shot sampling; `plan` routes z-basis sampling through grouped
/// statevectors.
PolyEval poly_cost(const Polynomial& poly, const AnsatzConfig& config, std::span<const double> params,
                   EvalMode mode, Rng* rng = nullptr, const PartitionPlan* plan = nullptr);

/// Per-variable means: P(1) for binary, sum_j j p_j over label
/// probabilities otherwise.
std::vector<double> variable_means(std::span<const QubitState> states, int arity,
                                   double label_power = kDefaultLabelPower);
std::vector<int> decode_states(std::span<const QubitState> states, int arity);

/// <psi|H|psi> for a product state, one factor per qubit.
double pauli_expectation(const PauliSum& h, std::span<const QubitState> states);

using DenseVector = std::vector<std::complex<double>>;

/// Kronecker product of each group's qubit states. The first qubit of a
/// group is the most significant bit of its basis index.
std::vector<DenseVector> grouped_state(std::span<const QubitState> states, const PartitionPlan& plan,
                                       int group_cap = kDefaultGroupCap);

/// One shot per group from its dense distribution, concatenated.
void sample_grouped(std::span<const DenseVector> groups, const PartitionPlan& plan, Rng& rng,
                    std::span<int> bits);

/// Any reentrant callable mapping an assignment to a finite real.
using BlackBoxFn = std::function<double(std::span<const int>)>;

/// Decode deterministically, then evaluate f once. Failures are rethrown
/// with the decoded assignment attached.
PolyEval blackbox_cost(const BlackBoxFn& f, const AnsatzConfig& config, std::span<const double> params);

/// What one objective evaluation yields for the optimizer and the
/// best-found tracker.
struct Evaluation {
    double objective = 0.0;         // minimized by the optimizer
    double reported = 0.0;          // exact value of `assignment`
    std::vector<int> assignment;
};

/// A cost the runner can minimize over ansatz parameters. Implementations
/// are immutable and safe to call from many replicas at once.
class CostModel {
public:
    virtual ~CostModel() = default;
    virtual int n() const = 0;
    virtual int arity() const { return 2; }
    virtual std::string family() const = 0;
    virtual std::string mode_name() const = 0;
    virtual Evaluation evaluate(const AnsatzConfig& config, std::span<const double> params, Rng& rng) const = 0;
};

class PolynomialCost final : public CostModel {
public:
    PolynomialCost(Polynomial poly, EvalMode mode, std::string family = "qubo",
                   PartitionPlan plan = {});

    int n() const override { return poly_.n(); }
    int arity() const override { return poly_.arity(); }
    std::string family() const override { return family_; }
    std::string mode_name() const override { return mode_.name(); }
    Evaluation evaluate(const AnsatzConfig& config, std::span<const double> params, Rng& rng) const override;

    const Polynomial& polynomial() const { return poly_; }

private:
    Polynomial poly_;
    EvalMode mode_;
    std::string family_;
    PartitionPlan plan_;
};

/// Energy <psi|H|psi>; the reported value is the energy itself.
class PauliCost final : public CostModel {
public:
    explicit PauliCost(PauliSum h) : h_(std::move(h)) {}

    int n() const override { return h_.n; }
    std::string family() const override { return "chemistry"; }
    std::string mode_name() const override { return "expectation"; }
    Evaluation evaluate(const AnsatzConfig& config, std::span<const double> params, Rng& rng) const override;

    const PauliSum& hamiltonian() const { return h_; }

private:
    PauliSum h_;
};

/// One-hot TSP QUBO. The optimizer sees the QUBO value under `mode`; the
/// reported value is the length of the repaired decoded tour, and the
/// assignment is that tour's one-hot encoding.
class TspCost final : public CostModel {
public:
    TspCost(TspInstance inst, EvalMode mode);

    int n() const override { return poly_.n(); }
    std::string family() const override { return "tsp"; }
    std::string mode_name() const override { return mode_.name(); }
    Evaluation evaluate(const AnsatzConfig& config, std::span<const double> params, Rng& rng) const override;

    const TspInstance& instance() const { return inst_; }
    const Polynomial& polynomial() const { return poly_; }

private:
    TspInstance inst_;
    Polynomial poly_;
    EvalMode mode_;
};

/// Tour as a one-hot assignment, x_{c,p} = 1 iff route[p] = c.
std::vector<int> tsp_assignment(std::span<const int> route);

class BlackBoxCost final : public CostModel {
public:
    BlackBoxCost(BlackBoxFn f, int n, std::string family = "blackbox", int arity = 2)
        : f_(std::move(f)), n_(n), arity_(arity), family_(std::move(family)) {}

    int n() const override { return n_; }
    int arity() const override { return arity_; }
    std::string family() const override { return family_; }
    std::string mode_name() const override { return "decode"; }
    Evaluation evaluate(const AnsatzConfig& config, std::span<const double> params, Rng& rng) const override;

private:
    BlackBoxFn f_;
    int n_;
    int arity_;
    std::string family_;
};

}  // namespace vqoa
