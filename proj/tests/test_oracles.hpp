#pragma once

// Reference implementations used only by tests. They deliberately take the
// slow, literal route (full enumeration, explicit matrices) so they share no
// code path with the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <vector>

#include "vqoa/ansatz.hpp"
#include "vqoa/pauli.hpp"
#include "vqoa/polynomial.hpp"

namespace vqoa::testing {

using cd = std::complex<double>;
using Mat2 = std::array<cd, 4>;  // row-major

inline Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3]};
}

inline Mat2 ry(double t) {
    return {std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2)};
}

inline Mat2 rx(double t) {
    return {std::cos(t / 2), cd(0, -std::sin(t / 2)), cd(0, -std::sin(t / 2)), std::cos(t / 2)};
}

// Applies the gate sequence of one qubit literally, gate by gate.
inline std::array<cd, 2> circuit_state(const AnsatzConfig& c, std::span<const double> params, int q) {
    cd a0 = 1, a1 = 0;
    const std::size_t g = c.gates_per_layer();
    const std::size_t base = static_cast<std::size_t>(q) * static_cast<std::size_t>(c.m) * g;
    for (int rep = 0; rep < c.t; ++rep) {
        for (int l = 0; l < c.m; ++l) {
            const std::size_t at = base + static_cast<std::size_t>(l) * g;
            std::vector<Mat2> gates;
            switch (c.gates) {
                case GateSet::RY: gates = {ry(params[at])}; break;
                case GateSet::RX: gates = {rx(params[at])}; break;
                case GateSet::RXRY: gates = {ry(params[at + 1]), rx(params[at])}; break;
            }
            for (const auto& m : gates) {
                const cd b0 = m[0] * a0 + m[1] * a1;
                const cd b1 = m[2] * a0 + m[3] * a1;
                a0 = b0, a1 = b1;
            }
        }
    }
    return {a0, a1};
}

// Calls f on every assignment in {0..arity-1}^n, lexicographic order.
inline void for_each_assignment(int n, int arity, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> x(static_cast<std::size_t>(n), 0);
    while (true) {
        f(x);
        int i = n - 1;
        while (i >= 0 && ++x[static_cast<std::size_t>(i)] == arity) x[static_cast<std::size_t>(i--)] = 0;
        if (i < 0) return;
    }
}

// Term-by-term evaluation straight from the term list.
inline double literal_value(const Polynomial& p, const std::vector<int>& x) {
    double v = p.offset();
    for (std::size_t i = 0; i < p.term_count(); ++i) {
        const auto t = p.term(i);
        double prod = t.coeff;
        for (auto var : t.vars) prod *= x[var];
        v += prod;
    }
    return v;
}

inline std::pair<double, std::vector<int>> enumerate_min(const Polynomial& p) {
    double best = INFINITY;
    std::vector<int> arg;
    for_each_assignment(p.n(), p.arity(), [&](const std::vector<int>& x) {
        const double v = literal_value(p, x);
        if (v < best) best = v, arg = x;
    });
    return {best, arg};
}

inline std::vector<cd> kron(const std::vector<cd>& a, const std::vector<cd>& b) {
    std::vector<cd> out(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
    return out;
}

// 2^n x 2^n matrix as row-major vector via explicit Kronecker products.
inline std::vector<cd> pauli_matrix_kron(const PauliSum& h) {
    const std::size_t dim = std::size_t{1} << h.n;
    std::vector<cd> total(dim * dim, 0.0);
    const std::vector<cd> I{1, 0, 0, 1}, X{0, 1, 1, 0}, Y{0, cd(0, -1), cd(0, 1), 0}, Z{1, 0, 0, -1};
    for (const auto& term : h.terms) {
        std::vector<cd> m{1};
        std::size_t side = 1;
        for (char c : term.ops) {
            const auto& p = c == 'X' ? X : c == 'Y' ? Y : c == 'Z' ? Z : I;
            std::vector<cd> next(side * 2 * side * 2);
            for (std::size_t r = 0; r < side; ++r)
                for (std::size_t s = 0; s < side; ++s)
                    for (std::size_t a = 0; a < 2; ++a)
                        for (std::size_t b = 0; b < 2; ++b)
                            next[(r * 2 + a) * side * 2 + (s * 2 + b)] = m[r * side + s] * p[a * 2 + b];
            m = std::move(next);
            side *= 2;
        }
        for (std::size_t i = 0; i < m.size(); ++i) total[i] += term.coeff * m[i];
    }
    return total;
}

}  // namespace vqoa::testing
