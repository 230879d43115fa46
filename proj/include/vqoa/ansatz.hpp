#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vqoa/rng.hpp"

namespace vqoa {

enum class GateSet { RY, RX, RXRY };

std::string_view to_string(GateSet g);
GateSet parse_gate_set(std::string_view s);

/// Shape of the entanglement-free circuit: every qubit gets m rotation
/// layers, and the whole layer block is applied t times with the same
/// angles. `arity` is the number of labels each qubit encodes.
struct AnsatzConfig {
    int n = 1;
    int m = 3;
    int t = 3;
    GateSet gates = GateSet::RY;
    int arity = 2;

    std::size_t gates_per_layer() const { return gates == GateSet::RXRY ? 2 : 1; }
    std::size_t parameter_count() const {
        return static_cast<std::size_t>(n) * static_cast<std::size_t>(m) * gates_per_layer();
    }
    void validate() const;
};

/// Angles in radians. Layout: qubit-major, then layer, then gate within the
/// layer (Rx angle before Ry angle for RXRY).
using ParameterVector = std::vector<double>;

/// Draw every angle uniformly from [-2pi, 2pi].
ParameterVector random_parameters(const AnsatzConfig& config, Rng& rng);

struct QubitState {
    std::complex<double> amp0{1.0, 0.0};
    std::complex<double> amp1{0.0, 0.0};
};

double norm_squared(const QubitState& s);

/// N real label states (cos b_j, sin b_j) with half-angles b_j = pi*j/N.
class LabelSet {
public:
    explicit LabelSet(int arity);

    int arity() const { return static_cast<int>(labels_.size()); }
    const QubitState& operator[](std::size_t j) const { return labels_[j]; }
    double half_angle(std::size_t j) const;

private:
    std::vector<QubitState> labels_;
};

QubitState qubit_state(const AnsatzConfig& config, std::span<const double> params, int qubit);
std::vector<QubitState> all_states(const AnsatzConfig& config, std::span<const double> params);

double probability_one(const QubitState& s);

/// Most probable z-basis outcome. Exactly 0.5 reads as 0.
inline int decode_binary(double p_one) { return p_one > 0.5 ? 1 : 0; }

double fidelity(const QubitState& label, const QubitState& s);

/// Label with the largest fidelity; lowest index wins ties.
int decode_nary(const QubitState& s, const LabelSet& labels);

/// Fidelities raised to `power` and normalized to a distribution over
/// labels. Larger powers concentrate the mass on the nearest label.
std::vector<double> label_probabilities(const QubitState& s, const LabelSet& labels, double power = 1.0);
void label_probabilities(const QubitState& s, const LabelSet& labels, std::span<double> out, double power = 1.0);

}  // namespace vqoa
