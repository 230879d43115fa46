#include "vqoa/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace vqoa {

std::uint64_t interaction_count(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("interaction_count: negative argument");
    std::uint64_t total = 0;
    std::uint64_t binom = 1;  // C(n, 0)
    for (int r = 1; r <= std::min(n, k); ++r) {
        // C(n, r) = C(n, r-1) * (n - r + 1) / r stays integral at every step.
        const auto num = static_cast<std::uint64_t>(n - r + 1);
        if (binom > std::numeric_limits<std::uint64_t>::max() / num)
            throw std::overflow_error("interaction_count overflows 64 bits");
        binom = binom * num / static_cast<std::uint64_t>(r);
        total += binom;
    }
    return total;
}

double Polynomial::evaluate(std::span<const int> x) const {
    if (x.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                    " does not match polynomial size " + std::to_string(n_));
    double value = offset_;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        double prod = coeffs_[t];
        for (std::uint32_t j = starts_[t]; j < starts_[t + 1]; ++j) {
            prod *= x[vars_[j]];
            if (prod == 0.0) break;
        }
        value += prod;
    }
    return value;
}

double Polynomial::evaluate_relaxed(std::span<const double> mu) const {
    if (mu.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("mean vector length does not match polynomial size");
    double value = offset_;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        double prod = coeffs_[t];
        for (std::uint32_t j = starts_[t]; j < starts_[t + 1]; ++j) prod *= mu[vars_[j]];
        value += prod;
    }
    return value;
}

PolynomialBuilder::PolynomialBuilder(int n, int arity) : n_(n), arity_(arity) {
    if (n < 1) throw std::invalid_argument("polynomial needs n >= 1");
    if (arity < 2) throw std::invalid_argument("polynomial needs arity >= 2");
}

PolynomialBuilder& PolynomialBuilder::add(std::vector<std::uint32_t> vars, double coeff) {
    if (vars.empty()) return add_offset(coeff);
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
        throw std::invalid_argument("polynomial term repeats a variable");
    if (vars.back() >= static_cast<std::uint32_t>(n_))
        throw std::out_of_range("polynomial term index " + std::to_string(vars.back()) +
                                " >= n = " + std::to_string(n_));
    terms_[std::move(vars)] += coeff;
    return *this;
}

PolynomialBuilder& PolynomialBuilder::add_offset(double c) {
    offset_ += c;
    return *this;
}

Polynomial PolynomialBuilder::build() const {
    std::vector<std::pair<const std::vector<std::uint32_t>*, double>> ordered;
    ordered.reserve(terms_.size());
    for (const auto& [vars, c] : terms_)
        if (c != 0.0) ordered.emplace_back(&vars, c);
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        return a.first->size() < b.first->size();
    });

    Polynomial p;
    p.n_ = n_;
    p.arity_ = arity_;
    p.offset_ = offset_;
    p.coeffs_.reserve(ordered.size());
    p.starts_.reserve(ordered.size() + 1);
    for (const auto& [vars, c] : ordered) {
        p.vars_.insert(p.vars_.end(), vars->begin(), vars->end());
        p.starts_.push_back(static_cast<std::uint32_t>(p.vars_.size()));
        p.coeffs_.push_back(c);
        p.max_order_ = std::max(p.max_order_, static_cast<int>(vars->size()));
    }
    return p;
}

}  // namespace vqoa
