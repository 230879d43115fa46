#include "vqoa/problems.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "test_oracles.hpp"
#include "vqoa/rng.hpp"

using namespace vqoa;

TEST(Generators, term_counts) {
    EXPECT_EQ(gen_qubo(10, 1).term_count(), 55u);
    EXPECT_EQ(gen_higher_order(10, 3, 2, 1).term_count(), 175u);
    EXPECT_EQ(gen_qubo(12, 4).term_count(), 78u);
    for (int k = 1; k <= 5; ++k) EXPECT_EQ(gen_higher_order(12, k, 3, 2).term_count(), interaction_count(12, k));
}

TEST(Generators, coefficients_in_unit_interval) {
    const auto p = gen_higher_order(12, 4, 2, 5);
    for (double c : p.coeffs()) {
        EXPECT_GE(c, -1.0);
        EXPECT_LE(c, 1.0);
    }
    EXPECT_EQ(p.offset(), 0.0);
}

TEST(Generators, deterministic_and_seed_sensitive) {
    EXPECT_EQ(gen_qubo(12, 3), gen_qubo(12, 3));
    EXPECT_FALSE(gen_qubo(12, 3) == gen_qubo(12, 4));
    EXPECT_EQ(gen_qubo(8, 3), gen_higher_order(8, 2, 2, 3));
}

TEST(Generators, arity_is_recorded) {
    const auto p = gen_higher_order(5, 2, 4, 1);
    EXPECT_EQ(p.arity(), 4);
    EXPECT_EQ(p.n(), 5);
}

TEST(Generators, bad_orders) {
    EXPECT_THROW(gen_higher_order(3, 4, 2, 1), std::invalid_argument);
    EXPECT_THROW(gen_higher_order(3, 0, 2, 1), std::invalid_argument);
}

TEST(MaxCut, edge_counts) {
    EXPECT_EQ(maxcut_edge_count(10), 11u);
    EXPECT_EQ(maxcut_edge_count(20), 47u);
    const auto g = gen_maxcut_graph(20, 3);
    EXPECT_EQ(g.edges.size(), 47u);
    std::set<std::pair<int, int>> unique(g.edges.begin(), g.edges.end());
    EXPECT_EQ(unique.size(), g.edges.size());
    EXPECT_TRUE(std::is_sorted(g.edges.begin(), g.edges.end()));
    for (auto [a, b] : g.edges) {
        EXPECT_LT(a, b);
        EXPECT_GE(a, 0);
        EXPECT_LT(b, 20);
    }
}

TEST(MaxCut, polynomial_is_negative_cut) {
    const auto g = gen_maxcut_graph(10, 7);
    const auto p = maxcut_polynomial(g);
    vqoa::testing::for_each_assignment(10, 2, [&](const std::vector<int>& x) {
        int cut = 0;
        for (auto [a, b] : g.edges) cut += x[static_cast<std::size_t>(a)] != x[static_cast<std::size_t>(b)];
        ASSERT_EQ(cut_size(g, x), cut);
        ASSERT_NEAR(p.evaluate(x), -cut, 1e-12);
    });
}

TEST(Tsp, feasible_encoding_equals_tour_length) {
    const auto inst = gen_tsp(5, 2);
    const auto p = encode_tsp(inst);
    EXPECT_EQ(p.n(), 25);
    std::vector<int> route{0, 1, 2, 3, 4};
    do {
        std::vector<int> x(25, 0);
        for (int pos = 0; pos < 5; ++pos) x[static_cast<std::size_t>(tsp_var(route[static_cast<std::size_t>(pos)], pos, 5))] = 1;
        double len = 0;
        for (int pos = 0; pos < 5; ++pos)
            len += inst.distance(route[static_cast<std::size_t>(pos)], route[static_cast<std::size_t>((pos + 1) % 5)]);
        ASSERT_NEAR(p.evaluate(x), len, 1e-9);
        ASSERT_NEAR(route_length(inst, route), len, 1e-12);
    } while (std::next_permutation(route.begin(), route.end()));
}

TEST(Tsp, constraint_violations_cost_the_penalty) {
    const auto inst = gen_tsp(4, 1);
    const auto p = encode_tsp(inst);
    std::vector<int> zero(16, 0);
    // Every one of the 8 one-hot rows and columns is empty.
    EXPECT_NEAR(p.evaluate(zero), 8 * inst.penalty, 1e-9);
}

TEST(Tsp, coordinates_in_box) {
    const auto inst = gen_tsp(8, 3);
    for (const auto& c : inst.cities) {
        EXPECT_GE(c[0], 0.0);
        EXPECT_LE(c[0], 10.0);
        EXPECT_GE(c[1], 0.0);
        EXPECT_LE(c[1], 10.0);
    }
    EXPECT_EQ(inst.penalty, 100.0);
}

TEST(Tsp, decode_repairs_to_permutation) {
    Rng rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> x(25);
        for (int& b : x) b = static_cast<int>(rng.below(2));
        auto route = decode_tsp(x, 5);
        std::sort(route.begin(), route.end());
        std::vector<int> ident(5);
        std::iota(ident.begin(), ident.end(), 0);
        EXPECT_EQ(route, ident);
    }
}

TEST(Tsp, decode_of_valid_assignment_is_exact) {
    std::vector<int> route{2, 0, 4, 1, 3};
    std::vector<int> x(25, 0);
    for (int pos = 0; pos < 5; ++pos) x[static_cast<std::size_t>(tsp_var(route[static_cast<std::size_t>(pos)], pos, 5))] = 1;
    EXPECT_EQ(decode_tsp(x, 5), route);
}

TEST(Tsp, invalid_instances) {
    TspInstance t;
    t.cities = {{0, 0}, {1, 1}};
    EXPECT_THROW(t.validate(), std::invalid_argument);
    EXPECT_THROW(gen_tsp(2, 1), std::invalid_argument);
    std::vector<int> x(10);
    EXPECT_THROW(decode_tsp(x, 3), std::invalid_argument);
}
