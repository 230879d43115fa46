#include "vqoa/ansatz.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vqoa {

namespace {

using cplx = std::complex<double>;

struct Mat2 {
    cplx a, b, c, d;  // [[a, b], [c, d]]
};

QubitState apply(const Mat2& g, const QubitState& s) {
    return {g.a * s.amp0 + g.b * s.amp1, g.c * s.amp0 + g.d * s.amp1};
}

Mat2 rx(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {c, cplx(0, -s), cplx(0, -s), c};
}

Mat2 ry(double theta) {
    const double c = std::cos(theta / 2), s = std::sin(theta / 2);
    return {c, -s, s, c};
}

}  // namespace

std::string_view to_string(GateSet g) {
    switch (g) {
        case GateSet::RY: return "ry";
        case GateSet::RX: return "rx";
        case GateSet::RXRY: return "rxry";
    }
    return "?";
}

GateSet parse_gate_set(std::string_view s) {
    if (s == "ry" || s == "RY") return GateSet::RY;
    if (s == "rx" || s == "RX") return GateSet::RX;
    if (s == "rxry" || s == "RXRY") return GateSet::RXRY;
    throw std::invalid_argument("unknown gate set '" + std::string(s) + "' (expected ry, rx or rxry)");
}

void AnsatzConfig::validate() const {
    if (n < 1 || m < 1 || t < 1)
        throw std::invalid_argument("ansatz: n, m and t must all be >= 1");
    if (arity < 2) throw std::invalid_argument("ansatz: arity must be >= 2");
}

ParameterVector random_parameters(const AnsatzConfig& config, Rng& rng) {
    constexpr double two_pi = 2 * std::numbers::pi;
    ParameterVector theta(config.parameter_count());
    for (double& x : theta) x = rng.uniform(-two_pi, two_pi);
    return theta;
}

double norm_squared(const QubitState& s) { return std::norm(s.amp0) + std::norm(s.amp1); }

LabelSet::LabelSet(int arity) {
    if (arity < 2) throw std::invalid_argument("label set needs arity >= 2");
    labels_.reserve(static_cast<std::size_t>(arity));
    for (int j = 0; j < arity; ++j) {
        const double beta = std::numbers::pi * j / arity;
        labels_.push_back({std::cos(beta), std::sin(beta)});
    }
}

double LabelSet::half_angle(std::size_t j) const {
    return std::numbers::pi * static_cast<double>(j) / static_cast<double>(labels_.size());
}

QubitState qubit_state(const AnsatzConfig& config, std::span<const double> params, int qubit) {
    if (params.size() != config.parameter_count())
        throw std::invalid_argument("parameter vector length " + std::to_string(params.size()) +
                                    " does not match ansatz dimension " +
                                    std::to_string(config.parameter_count()));
    if (qubit < 0 || qubit >= config.n)
        throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range");

    const std::size_t per_qubit = static_cast<std::size_t>(config.m) * config.gates_per_layer();
    const auto angles = params.subspan(static_cast<std::size_t>(qubit) * per_qubit, per_qubit);

    if (config.gates != GateSet::RXRY) {
        // Rotations about a single axis compose additively.
        double a = 0.0;
        for (double x : angles) a += x;
        a *= config.t;
        const double c = std::cos(a / 2), s = std::sin(a / 2);
        if (config.gates == GateSet::RY) return {c, s};
        return {c, cplx(0, -s)};
    }

    QubitState s;
    for (int rep = 0; rep < config.t; ++rep) {
        for (int l = 0; l < config.m; ++l) {
            s = apply(ry(angles[2 * l + 1]), s);
            s = apply(rx(angles[2 * l]), s);
        }
    }
    return s;
}

std::vector<QubitState> all_states(const AnsatzConfig& config, std::span<const double> params) {
    std::vector<QubitState> out;
    out.reserve(static_cast<std::size_t>(config.n));
    for (int i = 0; i < config.n; ++i) out.push_back(qubit_state(config, params, i));
    return out;
}

double probability_one(const QubitState& s) { return std::norm(s.amp1); }

double fidelity(const QubitState& label, const QubitState& s) {
    return std::norm(std::conj(label.amp0) * s.amp0 + std::conj(label.amp1) * s.amp1);
}

int decode_nary(const QubitState& s, const LabelSet& labels) {
    int best = 0;
    double best_f = fidelity(labels[0], s);
    for (int j = 1; j < labels.arity(); ++j) {
        const double f = fidelity(labels[static_cast<std::size_t>(j)], s);
        if (f > best_f) {
            best_f = f;
            best = j;
        }
    }
    return best;
}

void label_probabilities(const QubitState& s, const LabelSet& labels, std::span<double> out, double power) {
    if (!(power > 0)) throw std::invalid_argument("label power must be positive");
    double total = 0.0;
    for (int j = 0; j < labels.arity(); ++j) {
        const double f = fidelity(labels[static_cast<std::size_t>(j)], s);
        out[static_cast<std::size_t>(j)] = power == 1.0 ? f : std::pow(f, power);
        total += out[static_cast<std::size_t>(j)];
    }
    if (total < 1e-9) throw std::logic_error("label fidelities sum to zero");
    for (int j = 0; j < labels.arity(); ++j) out[static_cast<std::size_t>(j)] /= total;
}

std::vector<double> label_probabilities(const QubitState& s, const LabelSet& labels, double power) {
    std::vector<double> p(static_cast<std::size_t>(labels.arity()));
    label_probabilities(s, labels, p, power);
    return p;
}

}  // namespace vqoa
