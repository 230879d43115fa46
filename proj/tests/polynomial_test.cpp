#include "vqoa/polynomial.hpp"

#include <gtest/gtest.h>

#include "test_oracles.hpp"
#include "vqoa/problems.hpp"
#include "vqoa/rng.hpp"

using namespace vqoa;

namespace {

// Sum of binomial(n, j) for j = 1..k by Pascal's triangle.
std::uint64_t pascal_count(int n, int k) {
    std::vector<std::vector<std::uint64_t>> c(static_cast<std::size_t>(n + 1));
    for (int i = 0; i <= n; ++i) {
        c[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(i + 1), 1);
        for (int j = 1; j < i; ++j)
            c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
                c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)];
    }
    std::uint64_t total = 0;
    for (int j = 1; j <= std::min(k, n); ++j) total += c[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)];
    return total;
}

}  // namespace

TEST(InteractionCount, known_values) {
    EXPECT_EQ(interaction_count(10, 2), 55u);
    EXPECT_EQ(interaction_count(10, 3), 175u);
    EXPECT_EQ(interaction_count(12, 2), 78u);
    EXPECT_EQ(interaction_count(5, 5), 31u);
}

TEST(InteractionCount, matches_pascal) {
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k <= n; ++k) EXPECT_EQ(interaction_count(n, k), pascal_count(n, k)) << n << "," << k;
}

TEST(InteractionCount, overflow_is_reported) { EXPECT_THROW(interaction_count(200, 100), std::overflow_error); }

TEST(PolynomialBuilder, merges_and_orders_terms) {
    PolynomialBuilder b(4);
    b.add({2, 0}, 1.5).add({0, 2}, 0.5).add({3}, -1.0).add({1, 2, 3}, 2.0).add({}, 0.25);
    b.add({1}, 1.0).add({1}, -1.0);
    const auto p = b.build();
    ASSERT_EQ(p.term_count(), 3u);
    EXPECT_EQ(p.offset(), 0.25);
    EXPECT_EQ(p.max_order(), 3);
    EXPECT_EQ(std::vector<std::uint32_t>(p.term(0).vars.begin(), p.term(0).vars.end()), std::vector<std::uint32_t>{3});
    EXPECT_EQ(std::vector<std::uint32_t>(p.term(1).vars.begin(), p.term(1).vars.end()),
              (std::vector<std::uint32_t>{0, 2}));
    EXPECT_EQ(p.term(1).coeff, 2.0);
    EXPECT_EQ(p.term(2).vars.size(), 3u);
}

TEST(PolynomialBuilder, rejects_bad_terms) {
    PolynomialBuilder b(3);
    EXPECT_THROW(b.add({1, 1}, 1.0), std::invalid_argument);
    EXPECT_THROW(b.add({3}, 1.0), std::out_of_range);
    EXPECT_THROW(PolynomialBuilder(0), std::invalid_argument);
    EXPECT_THROW(PolynomialBuilder(3, 1), std::invalid_argument);
}

TEST(Polynomial, evaluate_matches_literal_sum) {
    for (int arity : {2, 3, 5}) {
        const auto p = gen_higher_order(6, 4, arity, 9);
        Rng rng(1);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> x(6);
            for (int& v : x) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(arity)));
            EXPECT_NEAR(p.evaluate(x), vqoa::testing::literal_value(p, x), 1e-12);
        }
    }
}

TEST(Polynomial, relaxed_equals_exact_at_integer_points) {
    const auto p = gen_higher_order(7, 3, 4, 2);
    Rng rng(3);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> x(7);
        std::vector<double> mu(7);
        for (std::size_t i = 0; i < 7; ++i) mu[i] = x[i] = static_cast<int>(rng.below(4));
        EXPECT_NEAR(p.evaluate_relaxed(mu), p.evaluate(x), 1e-12);
    }
}

TEST(Polynomial, length_mismatch_is_rejected) {
    const auto p = gen_qubo(4, 1);
    std::vector<int> x(3);
    std::vector<double> mu(5);
    EXPECT_THROW(p.evaluate(x), std::invalid_argument);
    EXPECT_THROW(p.evaluate_relaxed(mu), std::invalid_argument);
}
