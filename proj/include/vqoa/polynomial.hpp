#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace vqoa {

/// Number of distinct interaction subsets of size 1..k over n variables.
std::uint64_t interaction_count(int n, int k);

/// Sparse multilinear cost over n variables with integer domain
/// {0, ..., arity-1}:  offset + sum_S c_S prod_{i in S} x_i.
///
/// Immutable once built. Terms are stored flat, ordered by subset size and
/// then lexicographically; every subset is strictly ascending.
class Polynomial {
public:
    struct TermView {
        std::span<const std::uint32_t> vars;
        double coeff;
    };

    Polynomial() = default;

    int n() const { return n_; }
    int arity() const { return arity_; }
    int max_order() const { return max_order_; }
    double offset() const { return offset_; }
    std::size_t term_count() const { return coeffs_.size(); }

    TermView term(std::size_t i) const {
        return {std::span(vars_).subspan(starts_[i], starts_[i + 1] - starts_[i]), coeffs_[i]};
    }

    /// Exact value at an integer assignment.
    double evaluate(std::span<const int> x) const;
    /// Value with each variable replaced by a real mean (independent variables).
    double evaluate_relaxed(std::span<const double> mu) const;

    std::span<const std::uint32_t> flat_vars() const { return vars_; }
    std::span<const std::uint32_t> term_starts() const { return starts_; }
    std::span<const double> coeffs() const { return coeffs_; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    friend class PolynomialBuilder;

    int n_ = 0;
    int arity_ = 2;
    int max_order_ = 0;
    double offset_ = 0.0;
    std::vector<std::uint32_t> vars_;
    std::vector<std::uint32_t> starts_{0};
    std::vector<double> coeffs_;
};

/// Accumulates terms, merging repeats of the same subset.
class PolynomialBuilder {
public:
    explicit PolynomialBuilder(int n, int arity = 2);

    /// Indices may arrive in any order but must be distinct and < n.
    PolynomialBuilder& add(std::vector<std::uint32_t> vars, double coeff);
    PolynomialBuilder& add_offset(double c);

    /// Drops terms whose merged coefficient is exactly zero.
    Polynomial build() const;

private:
    int n_;
    int arity_;
    double offset_ = 0.0;
    std::map<std::vector<std::uint32_t>, double> terms_;
};

}  // namespace vqoa
