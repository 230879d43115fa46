#include "vqoa/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

namespace vqoa {

EvalMode EvalMode::sampled(int shots) {
    if (shots < 1) throw std::invalid_argument("shot count must be >= 1");
    return {Kind::Shots, shots, kDefaultLabelPower};
}

std::string EvalMode::name() const {
    switch (kind) {
        case Kind::Expectation: return "expectation";
        case Kind::Decode: return "decode";
        case Kind::Shots: return "shots";
    }
    return "?";
}

EvalMode EvalMode::parse(const std::string& name, int shots) {
    if (name == "expectation") return expectation();
    if (name == "decode") return decode();
    if (name == "shots") return sampled(shots);
    throw std::invalid_argument("unknown evaluation mode '" + name + "' (expected expectation, decode or shots)");
}

PartitionPlan PartitionPlan::even(int n, int parts) {
    if (parts < 1 || parts > n) throw std::invalid_argument("partition count must be in [1, n]");
    PartitionPlan plan;
    for (int g = 0; g < parts; ++g) plan.sizes.push_back(n / parts + (g < n % parts ? 1 : 0));
    return plan;
}

int PartitionPlan::total() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

void PartitionPlan::validate(int n) const {
    for (int s : sizes)
        if (s < 1) throw std::invalid_argument("partition group sizes must be >= 1");
    if (total() != n)
        throw std::invalid_argument("partition plan covers " + std::to_string(total()) + " qubits, expected " +
                                    std::to_string(n));
}

std::vector<double> variable_means(std::span<const QubitState> states, int arity, double label_power) {
    std::vector<double> mu(states.size());
    if (arity == 2) {
        for (std::size_t i = 0; i < states.size(); ++i) mu[i] = probability_one(states[i]);
        return mu;
    }
    const LabelSet labels(arity);
    std::vector<double> p(static_cast<std::size_t>(arity));
    for (std::size_t i = 0; i < states.size(); ++i) {
        label_probabilities(states[i], labels, p, label_power);
        double m = 0.0;
        for (int j = 1; j < arity; ++j) m += j * p[static_cast<std::size_t>(j)];
        mu[i] = m;
    }
    return mu;
}

std::vector<int> decode_states(std::span<const QubitState> states, int arity) {
    std::vector<int> x(states.size());
    if (arity == 2) {
        for (std::size_t i = 0; i < states.size(); ++i) x[i] = decode_binary(probability_one(states[i]));
        return x;
    }
    const LabelSet labels(arity);
    for (std::size_t i = 0; i < states.size(); ++i) x[i] = decode_nary(states[i], labels);
    return x;
}

namespace {

void check_dims(const Polynomial& poly, const AnsatzConfig& config) {
    if (poly.n() != config.n)
        throw std::invalid_argument("polynomial has " + std::to_string(poly.n()) + " variables but ansatz has " +
                                    std::to_string(config.n) + " qubits");
    if (poly.arity() != config.arity)
        throw std::invalid_argument("polynomial arity " + std::to_string(poly.arity()) +
                                    " does not match ansatz arity " + std::to_string(config.arity));
}

// Cumulative distribution over a group's basis states.
std::vector<double> group_cdf(const DenseVector& v) {
    std::vector<double> cdf(v.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < v.size(); ++k) cdf[k] = (acc += std::norm(v[k]));
    return cdf;
}

}  // namespace

PolyEval poly_cost(const Polynomial& poly, const AnsatzConfig& config, std::span<const double> params,
                   EvalMode mode, Rng* rng, const PartitionPlan* plan) {
    check_dims(poly, config);
    const auto states = all_states(config, params);

    PolyEval out;
    out.decoded = decode_states(states, config.arity);
    out.decoded_cost = poly.evaluate(out.decoded);

    switch (mode.kind) {
        case EvalMode::Kind::Expectation:
            out.cost = poly.evaluate_relaxed(variable_means(states, config.arity, mode.label_power));
            break;
        case EvalMode::Kind::Decode:
            out.cost = out.decoded_cost;
            break;
        case EvalMode::Kind::Shots: {
            if (rng == nullptr) throw std::invalid_argument("shot sampling needs a random stream");
            if (mode.shots < 1) throw std::invalid_argument("shot count must be >= 1");
            const auto n = static_cast<std::size_t>(config.n);
            std::vector<int> sample(n);

            const bool grouped = plan != nullptr && !plan->sizes.empty() && config.arity == 2;
            std::vector<DenseVector> groups;
            std::vector<std::vector<double>> cdfs;
            std::vector<double> p_one;
            std::vector<std::vector<double>> label_cdf;
            if (grouped) {
                groups = grouped_state(states, *plan);
                for (const auto& g : groups) cdfs.push_back(group_cdf(g));
            } else if (config.arity == 2) {
                for (const auto& s : states) p_one.push_back(probability_one(s));
            } else {
                const LabelSet labels(config.arity);
                for (const auto& s : states) {
                    auto p = label_probabilities(s, labels, mode.label_power);
                    std::partial_sum(p.begin(), p.end(), p.begin());
                    label_cdf.push_back(std::move(p));
                }
            }

            double sum = 0.0, sum_sq = 0.0;
            out.best_sample_cost = std::numeric_limits<double>::infinity();
            for (int shot = 0; shot < mode.shots; ++shot) {
                if (grouped) {
                    std::size_t q = 0;
                    for (std::size_t g = 0; g < cdfs.size(); ++g) {
                        const double u = rng->uniform() * cdfs[g].back();
                        const auto k = static_cast<std::size_t>(
                            std::upper_bound(cdfs[g].begin(), cdfs[g].end() - 1, u) - cdfs[g].begin());
                        const int size = plan->sizes[g];
                        for (int b = 0; b < size; ++b)
                            sample[q + static_cast<std::size_t>(b)] = static_cast<int>((k >> (size - 1 - b)) & 1u);
                        q += static_cast<std::size_t>(size);
                    }
                } else if (config.arity == 2) {
                    for (std::size_t i = 0; i < n; ++i) sample[i] = rng->uniform() < p_one[i] ? 1 : 0;
                } else {
                    for (std::size_t i = 0; i < n; ++i) {
                        const double u = rng->uniform() * label_cdf[i].back();
                        sample[i] = static_cast<int>(
                            std::upper_bound(label_cdf[i].begin(), label_cdf[i].end() - 1, u) - label_cdf[i].begin());
                    }
                }
                const double v = poly.evaluate(sample);
                sum += v;
                sum_sq += v * v;
                if (v < out.best_sample_cost) {
                    out.best_sample_cost = v;
                    out.best_sample = sample;
                }
            }
            const double shots = mode.shots;
            out.cost = sum / shots;
            out.cost_std = mode.shots > 1
                               ? std::sqrt(std::max(0.0, (sum_sq - sum * sum / shots) / (shots - 1)))
                               : 0.0;
            break;
        }
    }
    return out;
}

double pauli_expectation(const PauliSum& h, std::span<const QubitState> states) {
    if (states.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("pauli_expectation: " + std::to_string(states.size()) + " states for a " +
                                    std::to_string(h.n) + "-qubit operator");
    struct Bloch {
        double x, y, z;
    };
    std::vector<Bloch> bloch(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) {
        const auto c = std::conj(states[i].amp0) * states[i].amp1;
        bloch[i] = {2 * c.real(), 2 * c.imag(), std::norm(states[i].amp0) - std::norm(states[i].amp1)};
    }
    double total = 0.0;
    for (const auto& term : h.terms) {
        double prod = term.coeff;
        for (std::size_t i = 0; i < term.ops.size() && prod != 0.0; ++i) {
            switch (term.ops[i]) {
                case 'X': prod *= bloch[i].x; break;
                case 'Y': prod *= bloch[i].y; break;
                case 'Z': prod *= bloch[i].z; break;
                default: break;
            }
        }
        total += prod;
    }
    return total;
}

std::vector<DenseVector> grouped_state(std::span<const QubitState> states, const PartitionPlan& plan,
                                       int group_cap) {
    plan.validate(static_cast<int>(states.size()));
    std::vector<DenseVector> out;
    out.reserve(plan.sizes.size());
    std::size_t q = 0;
    for (int size : plan.sizes) {
        if (size > group_cap)
            throw MemoryGuardError("partition group of " + std::to_string(size) + " qubits exceeds the cap of " +
                                   std::to_string(group_cap) + " (dense vector would need " +
                                   std::to_string((std::size_t{16} << size) >> 20) + " MiB)");
        DenseVector v(std::size_t{1} << size);
        v[0] = 1.0;
        std::size_t len = 1;
        for (int b = 0; b < size; ++b, ++q) {
            // Appending a qubit on the right keeps earlier qubits more significant.
            for (std::size_t k = len; k-- > 0;) {
                v[2 * k + 1] = v[k] * states[q].amp1;
                v[2 * k] = v[k] * states[q].amp0;
            }
            len *= 2;
        }
        out.push_back(std::move(v));
    }
    return out;
}

void sample_grouped(std::span<const DenseVector> groups, const PartitionPlan& plan, Rng& rng, std::span<int> bits) {
    std::size_t q = 0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto cdf = group_cdf(groups[g]);
        const double u = rng.uniform() * cdf.back();
        const auto k = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end() - 1, u) - cdf.begin());
        const int size = plan.sizes[g];
        for (int b = 0; b < size; ++b) bits[q + static_cast<std::size_t>(b)] = static_cast<int>((k >> (size - 1 - b)) & 1u);
        q += static_cast<std::size_t>(size);
    }
}

PolyEval blackbox_cost(const BlackBoxFn& f, const AnsatzConfig& config, std::span<const double> params) {
    const auto states = all_states(config, params);
    PolyEval out;
    out.decoded = decode_states(states, config.arity);
    try {
        out.decoded_cost = f(out.decoded);
    } catch (const std::exception& e) {
        std::ostringstream os;
        os << "cost function failed on decoded assignment [";
        for (std::size_t i = 0; i < out.decoded.size(); ++i) os << (i ? "," : "") << out.decoded[i];
        os << "]: " << e.what();
        throw std::runtime_error(os.str());
    }
    if (!std::isfinite(out.decoded_cost)) {
        std::ostringstream os;
        os << "cost function returned a non-finite value on decoded assignment [";
        for (std::size_t i = 0; i < out.decoded.size(); ++i) os << (i ? "," : "") << out.decoded[i];
        os << "]";
        throw std::runtime_error(os.str());
    }
    out.cost = out.decoded_cost;
    return out;
}

PolynomialCost::PolynomialCost(Polynomial poly, EvalMode mode, std::string family, PartitionPlan plan)
    : poly_(std::move(poly)), mode_(mode), family_(std::move(family)), plan_(std::move(plan)) {
    if (!plan_.sizes.empty()) plan_.validate(poly_.n());
}

Evaluation PolynomialCost::evaluate(const AnsatzConfig& config, std::span<const double> params, Rng& rng) const {
    auto r = poly_cost(poly_, config, params, mode_, &rng, plan_.sizes.empty() ? nullptr : &plan_);
    Evaluation e{r.cost, r.decoded_cost, std::move(r.decoded)};
    if (!r.best_sample.empty() && r.best_sample_cost < e.reported) {
        e.reported = r.best_sample_cost;
        e.assignment = std::move(r.best_sample);
    }
    return e;
}

Evaluation PauliCost::evaluate(const AnsatzConfig& config, std::span<const double> params, Rng&) const {
    const auto states = all_states(config, params);
    const double energy = pauli_expectation(h_, states);
    return {energy, energy, decode_states(states, 2)};
}

std::vector<int> tsp_assignment(std::span<const int> route) {
    const auto c = route.size();
    std::vector<int> bits(c * c, 0);
    for (std::size_t p = 0; p < c; ++p)
        bits[static_cast<std::size_t>(tsp_var(route[p], static_cast<int>(p), static_cast<int>(c)))] = 1;
    return bits;
}

TspCost::TspCost(TspInstance inst, EvalMode mode)
    : inst_(std::move(inst)), poly_(encode_tsp(inst_)), mode_(mode) {}

Evaluation TspCost::evaluate(const AnsatzConfig& config, std::span<const double> params, Rng& rng) const {
    auto r = poly_cost(poly_, config, params, mode_, &rng);
    const auto states = all_states(config, params);
    const auto means = variable_means(states, 2);
    auto route = decode_tsp(r.decoded, inst_.size(), std::span<const double>(means));
    double len = route_length(inst_, route);
    if (!r.best_sample.empty()) {
        auto alt = decode_tsp(r.best_sample, inst_.size());
        const double alt_len = route_length(inst_, alt);
        if (alt_len < len) {
            len = alt_len;
            route = std::move(alt);
        }
    }
    return {r.cost, len, tsp_assignment(route)};
}

Evaluation BlackBoxCost::evaluate(const AnsatzConfig& config, std::span<const double> params, Rng&) const {
    auto r = blackbox_cost(f_, config, params);
    return {r.cost, r.decoded_cost, std::move(r.decoded)};
}

}  // namespace vqoa
