#include "vqoa/evaluator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "test_oracles.hpp"
#include "vqoa/oracle.hpp"
#include "vqoa/problems.hpp"

using namespace vqoa;

namespace {

constexpr double pi = std::numbers::pi;

// Label distribution computed from half-angles: cos^2(beta_j - a/2)^power,
// normalized. Only valid for RY states.
std::vector<double> literal_label_dist(double effective_angle, int arity, double power) {
    std::vector<double> p(static_cast<std::size_t>(arity));
    double total = 0;
    for (int j = 0; j < arity; ++j) {
        const double f = std::pow(std::cos(pi * j / arity - effective_angle / 2), 2);
        total += p[static_cast<std::size_t>(j)] = std::pow(f, power);
    }
    for (double& x : p) x /= total;
    return p;
}

// E[f(X)] by summing over every assignment with product probabilities.
double enumerated_expectation(const Polynomial& poly, const std::vector<std::vector<double>>& dists) {
    double e = 0;
    vqoa::testing::for_each_assignment(poly.n(), poly.arity(), [&](const std::vector<int>& x) {
        double pr = 1;
        for (std::size_t i = 0; i < x.size(); ++i) pr *= dists[i][static_cast<std::size_t>(x[i])];
        e += pr * vqoa::testing::literal_value(poly, x);
    });
    return e;
}

std::vector<double> effective_angles(const AnsatzConfig& c, const std::vector<double>& p) {
    std::vector<double> a(static_cast<std::size_t>(c.n), 0.0);
    for (int q = 0; q < c.n; ++q)
        for (int l = 0; l < c.m; ++l) a[static_cast<std::size_t>(q)] += c.t * p[static_cast<std::size_t>(q * c.m + l)];
    return a;
}

}  // namespace

TEST(EvalMode, parse_and_names) {
    EXPECT_EQ(EvalMode::parse("expectation", 0).kind, EvalMode::Kind::Expectation);
    EXPECT_EQ(EvalMode::parse("decode", 0).name(), "decode");
    EXPECT_EQ(EvalMode::parse("shots", 64).shots, 64);
    EXPECT_THROW(EvalMode::parse("shots", 0), std::invalid_argument);
    EXPECT_THROW(EvalMode::parse("exact", 0), std::invalid_argument);
}

TEST(PolyCost, spec_examples) {
    AnsatzConfig c1{.n = 1, .m = 1, .t = 1};
    PolynomialBuilder b1(1);
    b1.add({0}, 1.0);
    std::vector<double> half{pi / 2};
    EXPECT_NEAR(poly_cost(b1.build(), c1, half, EvalMode::expectation()).cost, 0.5, 1e-15);

    AnsatzConfig c2{.n = 2, .m = 1, .t = 1};
    PolynomialBuilder b2(2);
    b2.add({0, 1}, 1.0);
    const auto p2 = b2.build();
    std::vector<double> halves{pi / 2, pi / 2};
    EXPECT_NEAR(poly_cost(p2, c2, halves, EvalMode::expectation()).cost, 0.25, 1e-15);
    const auto d = poly_cost(p2, c2, halves, EvalMode::decode());
    EXPECT_EQ(d.decoded, (std::vector<int>{0, 0}));
    EXPECT_EQ(d.cost, 0.0);
}

TEST(PolyCost, expectation_equals_enumeration_binary) {
    Rng rng(21);
    for (int k : {2, 3, 4}) {
        const auto poly = gen_higher_order(7, k, 2, static_cast<std::uint64_t>(k));
        AnsatzConfig c{.n = 7, .m = 3, .t = 3};
        const auto params = random_parameters(c, rng);
        std::vector<std::vector<double>> dists;
        for (double a : effective_angles(c, params)) {
            const double p1 = std::pow(std::sin(a / 2), 2);
            dists.push_back({1 - p1, p1});
        }
        EXPECT_NEAR(poly_cost(poly, c, params, EvalMode::expectation()).cost, enumerated_expectation(poly, dists),
                    1e-10);
    }
}

TEST(PolyCost, expectation_equals_enumeration_nary) {
    Rng rng(22);
    for (int arity : {3, 4, 5}) {
        for (double power : {1.0, 4.0}) {
            const auto poly = gen_higher_order(5, 3, arity, static_cast<std::uint64_t>(arity));
            AnsatzConfig c{.n = 5, .m = 2, .t = 3, .arity = arity};
            const auto params = random_parameters(c, rng);
            std::vector<std::vector<double>> dists;
            for (double a : effective_angles(c, params)) dists.push_back(literal_label_dist(a, arity, power));
            EvalMode mode = EvalMode::expectation();
            mode.label_power = power;
            EXPECT_NEAR(poly_cost(poly, c, params, mode).cost, enumerated_expectation(poly, dists), 1e-10)
                << arity << " " << power;
        }
    }
}

TEST(PolyCost, expectation_at_basis_states_is_exact) {
    const auto poly = gen_higher_order(8, 3, 2, 4);
    AnsatzConfig c{.n = 8, .m = 1, .t = 1};
    Rng rng(2);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> params(8);
        std::vector<int> x(8);
        for (std::size_t i = 0; i < 8; ++i) {
            x[i] = static_cast<int>(rng.below(2));
            params[i] = x[i] ? pi : 0.0;
        }
        const auto r = poly_cost(poly, c, params, EvalMode::expectation());
        EXPECT_NEAR(r.cost, poly.evaluate(x), 1e-12);
        EXPECT_EQ(r.decoded, x);
    }
}

TEST(PolyCost, decode_matches_state_decode) {
    const auto poly = gen_higher_order(6, 2, 3, 8);
    AnsatzConfig c{.n = 6, .m = 3, .t = 3, .arity = 3};
    Rng rng(9);
    const auto params = random_parameters(c, rng);
    const auto r = poly_cost(poly, c, params, EvalMode::decode());
    const auto states = all_states(c, params);
    EXPECT_EQ(r.decoded, decode_states(states, 3));
    EXPECT_EQ(r.cost, poly.evaluate(r.decoded));
    EXPECT_EQ(r.decoded_cost, r.cost);
}

TEST(PolyCost, shots_mean_within_three_standard_errors) {
    const auto poly = gen_qubo(8, 3);
    AnsatzConfig c{.n = 8, .m = 3, .t = 3};
    Rng prng(5);
    const auto params = random_parameters(c, prng);
    const double exact = poly_cost(poly, c, params, EvalMode::expectation()).cost;
    Rng rng(6);
    const auto r = poly_cost(poly, c, params, EvalMode::sampled(100000), &rng);
    EXPECT_LE(std::abs(r.cost - exact), 3 * r.cost_std / std::sqrt(100000.0));
    EXPECT_LE(r.best_sample_cost, r.cost);
    EXPECT_EQ(poly.evaluate(r.best_sample), r.best_sample_cost);
}

TEST(PolyCost, nary_shots_follow_label_distribution) {
    const auto poly = gen_higher_order(4, 2, 4, 3);
    AnsatzConfig c{.n = 4, .m = 3, .t = 3, .arity = 4};
    Rng prng(5);
    const auto params = random_parameters(c, prng);
    EvalMode e = EvalMode::expectation(), s = EvalMode::sampled(100000);
    e.label_power = s.label_power = 3.0;
    const double exact = poly_cost(poly, c, params, e).cost;
    Rng rng(8);
    const auto r = poly_cost(poly, c, params, s, &rng);
    EXPECT_LE(std::abs(r.cost - exact), 4 * r.cost_std / std::sqrt(100000.0));
}

TEST(PolyCost, shots_need_rng) {
    const auto poly = gen_qubo(3, 1);
    AnsatzConfig c{.n = 3, .m = 1, .t = 1};
    std::vector<double> p(3, 0.3);
    EXPECT_THROW(poly_cost(poly, c, p, EvalMode::sampled(10)), std::invalid_argument);
}

TEST(PolyCost, dimension_mismatch) {
    const auto poly = gen_qubo(3, 1);
    AnsatzConfig c{.n = 4, .m = 1, .t = 1};
    std::vector<double> p(4, 0.3);
    EXPECT_THROW(poly_cost(poly, c, p, EvalMode::expectation()), std::invalid_argument);
}

TEST(PartitionPlan, even_split) {
    EXPECT_EQ(PartitionPlan::even(12, 3).sizes, (std::vector<int>{4, 4, 4}));
    EXPECT_EQ(PartitionPlan::even(10, 3).sizes, (std::vector<int>{4, 3, 3}));
    EXPECT_THROW(PartitionPlan::even(3, 4), std::invalid_argument);
    EXPECT_THROW((PartitionPlan{{3, 3}}.validate(7)), std::invalid_argument);
}

TEST(GroupedState, probabilities_are_products) {
    AnsatzConfig c{.n = 6, .m = 2, .t = 2};
    Rng rng(4);
    const auto states = all_states(c, random_parameters(c, rng));
    const auto groups = grouped_state(states, PartitionPlan{{6}});
    ASSERT_EQ(groups.size(), 1u);
    for (std::size_t k = 0; k < 64; ++k) {
        double p = 1;
        for (int q = 0; q < 6; ++q) {
            const int bit = static_cast<int>((k >> (5 - q)) & 1u);
            p *= bit ? probability_one(states[static_cast<std::size_t>(q)])
                     : 1 - probability_one(states[static_cast<std::size_t>(q)]);
        }
        EXPECT_NEAR(std::norm(groups[0][k]), p, 1e-14);
    }
}

TEST(GroupedState, memory_guard) {
    AnsatzConfig c{.n = 12, .m = 1, .t = 1};
    std::vector<double> p(12, 0.1);
    const auto states = all_states(c, p);
    EXPECT_THROW(grouped_state(states, PartitionPlan{{12}}, 10), MemoryGuardError);
    EXPECT_NO_THROW(grouped_state(states, PartitionPlan{{6, 6}}, 10));
}

TEST(PauliExpectation, single_qubit_cases) {
    AnsatzConfig c{.n = 1, .m = 1, .t = 1};
    const auto z = parse_pauli_text("1.0 Z");
    const auto x = parse_pauli_text("-1.0 X");
    std::vector<double> zero{0.0}, quarter{pi / 2}, half{pi};
    EXPECT_NEAR(pauli_expectation(z, all_states(c, zero)), 1.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(z, all_states(c, half)), -1.0, 1e-15);
    EXPECT_NEAR(pauli_expectation(x, all_states(c, quarter)), -1.0, 1e-15);
    c.gates = GateSet::RX;
    const auto y = parse_pauli_text("1.0 Y");
    // RX(pi/2)|0> = (|0> - i|1>)/sqrt2 has <Y> = -1.
    EXPECT_NEAR(pauli_expectation(y, all_states(c, quarter)), -1.0, 1e-15);
}

TEST(PauliExpectation, linear_in_coefficients) {
    AnsatzConfig c{.n = 3, .m = 2, .t = 2, .gates = GateSet::RXRY};
    Rng rng(3);
    const auto states = all_states(c, random_parameters(c, rng));
    const auto a = parse_pauli_text("0.7 XYZ\n-0.2 ZZI");
    const auto b = parse_pauli_text("1.4 XYZ\n-0.4 ZZI");
    EXPECT_NEAR(2 * pauli_expectation(a, states), pauli_expectation(b, states), 1e-14);
}

TEST(BlackBox, hamming_weight_and_errors) {
    AnsatzConfig c{.n = 4, .m = 1, .t = 1};
    std::vector<double> zero(4, 0.0);
    BlackBoxFn weight = [](std::span<const int> x) {
        double w = 0;
        for (int b : x) w += b;
        return w;
    };
    const auto r = blackbox_cost(weight, c, zero);
    EXPECT_EQ(r.cost, 0.0);
    EXPECT_EQ(r.decoded, (std::vector<int>(4, 0)));

    BlackBoxFn boom = [](std::span<const int>) -> double { throw std::runtime_error("boom"); };
    try {
        blackbox_cost(boom, c, zero);
        FAIL();
    } catch (const std::runtime_error& e) {
        EXPECT_NE(std::string(e.what()).find("[0,0,0,0]"), std::string::npos);
        EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
    }
    BlackBoxFn bad = [](std::span<const int>) { return std::nan(""); };
    EXPECT_THROW(blackbox_cost(bad, c, zero), std::runtime_error);
}

TEST(TspCostModel, reports_repaired_tour_length) {
    const auto inst = gen_tsp(4, 2);
    TspCost cost(inst, EvalMode::expectation());
    AnsatzConfig c{.n = 16, .m = 3, .t = 3};
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto params = random_parameters(c, rng);
        const auto e = cost.evaluate(c, params, rng);
        EXPECT_NEAR(e.reported, cost.polynomial().evaluate(e.assignment), 1e-9);
        EXPECT_NEAR(e.objective, poly_cost(cost.polynomial(), c, params, EvalMode::expectation()).cost, 1e-12);
    }
}
