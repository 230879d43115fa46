#include "vqoa/oracle.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include <Eigen/Eigenvalues>

#include "test_oracles.hpp"

using namespace vqoa;
using vqoa::testing::cd;

TEST(GrayCounter, visits_every_word_once_with_unit_steps) {
    for (auto [digits, radix] : std::vector<std::pair<int, int>>{{1, 2}, {4, 2}, {3, 3}, {3, 5}, {5, 4}}) {
        GrayCounter g(digits, radix);
        std::set<std::vector<int>> seen;
        seen.insert({g.digits().begin(), g.digits().end()});
        std::uint64_t total = 1;
        for (int i = 0; i < digits; ++i) total *= static_cast<std::uint64_t>(radix);
        for (std::uint64_t r = 1; r < total; ++r) {
            const std::vector<int> before(g.digits().begin(), g.digits().end());
            const auto step = g.next();
            const std::vector<int> after(g.digits().begin(), g.digits().end());
            int changed = 0;
            for (int i = 0; i < digits; ++i) {
                if (before[static_cast<std::size_t>(i)] != after[static_cast<std::size_t>(i)]) {
                    ++changed;
                    EXPECT_EQ(i, step.digit);
                    EXPECT_EQ(std::abs(before[static_cast<std::size_t>(i)] - after[static_cast<std::size_t>(i)]), 1);
                }
            }
            EXPECT_EQ(changed, 1);
            EXPECT_EQ(step.from, before[static_cast<std::size_t>(step.digit)]);
            EXPECT_EQ(step.to, after[static_cast<std::size_t>(step.digit)]);
            EXPECT_EQ(g.rank(), r);
            seen.insert(after);
        }
        EXPECT_EQ(seen.size(), total);
    }
}

TEST(GrayCounter, start_at_rank_matches_stepping) {
    GrayCounter a(4, 3);
    for (int i = 0; i < 40; ++i) a.next();
    GrayCounter b(4, 3, 40);
    EXPECT_TRUE(std::equal(a.digits().begin(), a.digits().end(), b.digits().begin()));
}

TEST(BruteForce, matches_literal_enumeration) {
    for (int arity : {2, 3, 4}) {
        for (int k : {1, 2, 3}) {
            for (std::uint64_t seed = 1; seed <= 3; ++seed) {
                const int n = arity == 2 ? 10 : 6;
                const auto p = gen_higher_order(n, k, arity, seed);
                const auto [best, arg] = vqoa::testing::enumerate_min(p);
                const auto r = brute_force_poly(p);
                EXPECT_NEAR(r.optimum, best, 1e-9);
                EXPECT_EQ(r.optimizer, arg);
                EXPECT_EQ(r.enumerated, static_cast<std::uint64_t>(std::pow(arity, n)));
            }
        }
    }
}

TEST(BruteForce, worker_count_does_not_change_result) {
    const auto p = gen_higher_order(14, 3, 2, 5);
    const auto one = brute_force_poly(p, 1);
    for (int w : {2, 3, 8}) {
        const auto r = brute_force_poly(p, w);
        EXPECT_EQ(r.optimum, one.optimum);
        EXPECT_EQ(r.optimizer, one.optimizer);
        EXPECT_EQ(r.workers, w);
    }
    EXPECT_EQ(one.enumerated, 1u << 14);
}

TEST(BruteForce, ties_pick_lexicographically_smallest) {
    PolynomialBuilder b(4);
    b.add({0, 1}, -1.0).add({2, 3}, 0.0);
    const auto r = brute_force_poly(b.build(), 3);
    EXPECT_EQ(r.optimum, -1.0);
    EXPECT_EQ(r.optimizer, (std::vector<int>{1, 1, 0, 0}));
}

TEST(BruteForce, cap) {
    const auto p = gen_qubo(20, 1);
    EXPECT_THROW(brute_force_poly(p, 1, 1u << 19), CapExceeded);
    EXPECT_THROW(brute_force_poly(p, 0), std::invalid_argument);
}

TEST(BruteForce, core_time) {
    OracleResult r;
    r.wall_time_s = 2.0;
    r.workers = 4;
    EXPECT_EQ(r.total_core_time_s(), 8.0);
}

TEST(TspOracle, matches_all_permutations) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        for (int c : {4, 5, 6}) {
            const auto inst = gen_tsp(c, seed);
            std::vector<int> perm(static_cast<std::size_t>(c));
            std::iota(perm.begin(), perm.end(), 0);
            double best = INFINITY;
            do best = std::min(best, route_length(inst, perm));
            while (std::next_permutation(perm.begin(), perm.end()));
            const auto r = brute_force_tsp(inst);
            EXPECT_NEAR(r.optimum, best, 1e-9);
            EXPECT_NEAR(route_length(inst, r.optimizer), r.optimum, 1e-12);
            EXPECT_EQ(r.optimizer.front(), 0);
            const auto full = brute_force_tsp(inst, false);
            EXPECT_NEAR(full.optimum, best, 1e-9);
            EXPECT_EQ(full.enumerated, 2 * r.enumerated);
        }
    }
    EXPECT_THROW(brute_force_tsp(gen_tsp(13, 1)), CapExceeded);
}

TEST(DensePauli, matrix_matches_kronecker_products) {
    const auto h = parse_pauli_text("0.5 XYZ\n-1.2 ZIX\n0.3 YYI\n2 III\n");
    const auto m = dense_pauli_matrix(h);
    const auto ref = vqoa::testing::pauli_matrix_kron(h);
    for (Eigen::Index r = 0; r < 8; ++r)
        for (Eigen::Index c = 0; c < 8; ++c)
            EXPECT_NEAR(std::abs(m(r, c) - ref[static_cast<std::size_t>(r * 8 + c)]), 0.0, 1e-15);
}

TEST(DensePauli, apply_matches_matrix) {
    const auto h = parse_pauli_text("0.5 XYZX\n-1.2 ZIXY\n0.3 YYIZ\n");
    const auto m = dense_pauli_matrix(h);
    Rng rng(3);
    std::vector<cd> v(16);
    for (auto& x : v) x = cd(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto hv = apply_pauli_sum(h, v);
    const Eigen::VectorXcd ev = m * Eigen::Map<const Eigen::VectorXcd>(v.data(), 16);
    for (Eigen::Index i = 0; i < 16; ++i) EXPECT_NEAR(std::abs(hv[static_cast<std::size_t>(i)] - ev(i)), 0.0, 1e-13);
}

TEST(DensePauli, min_eigenvalue_simple) {
    EXPECT_NEAR(dense_min_eigenvalue(parse_pauli_text("1.0 Z")), -1.0, 1e-12);
    EXPECT_NEAR(dense_min_eigenvalue(parse_pauli_text("1.0 XX\n1.0 YY\n1.0 ZZ")), -3.0, 1e-12);
}

TEST(DensePauli, lanczos_agrees_with_full_decomposition) {
    // 9 qubits take the Lanczos path; the reference uses a full eigensolve.
    Rng rng(12);
    const char ops[] = "IXYZ";
    PauliSum h;
    h.n = 9;
    for (int t = 0; t < 25; ++t) {
        std::string s;
        for (int q = 0; q < 9; ++q) s += ops[rng.below(4)];
        h.terms.push_back({rng.uniform(-1, 1), s});
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_pauli_matrix(h));
    EXPECT_NEAR(dense_min_eigenvalue(h), es.eigenvalues()(0), 1e-9);
}

TEST(DensePauli, caps) {
    PauliSum h;
    h.n = 11;
    h.terms.push_back({1.0, std::string(11, 'Z')});
    EXPECT_THROW(dense_pauli_matrix(h), CapExceeded);
    h.n = 13;
    h.terms[0].ops = std::string(13, 'Z');
    EXPECT_THROW(dense_min_eigenvalue(h), CapExceeded);
}

TEST(DensePauli, product_state_expectation) {
    AnsatzConfig c{.n = 3, .m = 2, .t = 2, .gates = GateSet::RXRY};
    Rng rng(5);
    const auto states = all_states(c, random_parameters(c, rng));
    const auto v = product_state_vector(states);
    double norm = 0;
    for (auto x : v) norm += std::norm(x);
    EXPECT_NEAR(norm, 1.0, 1e-14);
    const auto kron = vqoa::testing::kron(
        vqoa::testing::kron({states[0].amp0, states[0].amp1}, {states[1].amp0, states[1].amp1}),
        {states[2].amp0, states[2].amp1});
    for (std::size_t i = 0; i < 8; ++i) EXPECT_NEAR(std::abs(v[i] - kron[i]), 0.0, 1e-15);
}
