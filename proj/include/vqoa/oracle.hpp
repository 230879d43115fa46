#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "vqoa/ansatz.hpp"
#include "vqoa/pauli.hpp"
#include "vqoa/polynomial.hpp"
#include "vqoa/problems.hpp"

namespace vqoa {

struct OracleResult {
    double optimum = 0.0;
    std::vector<int> optimizer;  // assignment, or route for TSP
    std::uint64_t enumerated = 0;
    double wall_time_s = 0.0;
    int workers = 1;
    /// wall time x workers, the single-core equivalent
    double total_core_time_s() const { return wall_time_s * workers; }
};

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultBruteForceCap = std::uint64_t{1} << 34;

/// Reflected N-ary Gray code over n digits; digit 0 changes fastest and
/// every step moves exactly one digit by +-1.
class GrayCounter {
public:
    GrayCounter(int digits, int radix, std::uint64_t rank = 0);

    std::span<const int> digits() const { return gray_; }
    std::uint64_t rank() const { return rank_; }

    struct Step {
        int digit;
        int from;
        int to;
    };
    /// Advance to rank + 1. Must not be called at the last rank.
    Step next();

private:
    int radix_;
    std::uint64_t rank_;
    std::vector<int> count_;     // base-radix digits of rank
    std::vector<int> gray_;
    std::vector<char> reversed_;  // digit i runs downward
};

/// Exact minimum over all arity^n assignments. Ranges of the Gray-code
/// sequence are split across workers; each worker updates its running value
/// incrementally (only terms containing the changed variable). Ties go to
/// the lexicographically smallest assignment, so the result does not depend
/// on the worker count.
OracleResult brute_force_poly(const Polynomial& poly, int workers = 1, std::uint64_t cap = kDefaultBruteForceCap);

/// Shortest closed tour with city 0 fixed first. With `use_symmetry`, only
/// one direction of each cycle is visited ((n-1)!/2 routes).
OracleResult brute_force_tsp(const TspInstance& inst, bool use_symmetry = true, int max_cities = 12);

/// 2^n x 2^n matrix; qubit 0 is the leftmost tensor factor.
Eigen::MatrixXcd dense_pauli_matrix(const PauliSum& h, int max_qubits = 10);

/// H|v> without forming the matrix.
std::vector<std::complex<double>> apply_pauli_sum(const PauliSum& h, std::span<const std::complex<double>> v);

/// Smallest eigenvalue: full Hermitian decomposition up to 8 qubits,
/// Lanczos with full reorthogonalization (converged to 1e-10) up to the cap.
double dense_min_eigenvalue(const PauliSum& h, int max_qubits = 12);

/// Kronecker product of single-qubit states, qubit 0 most significant.
std::vector<std::complex<double>> product_state_vector(std::span<const QubitState> states);

/// <psi|H|psi> on the dense product-state vector.
double dense_expectation(const PauliSum& h, std::span<const QubitState> states);

}  // namespace vqoa
