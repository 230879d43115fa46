#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "vqoa/polynomial.hpp"

namespace vqoa {

/// Every subset of size 1..k gets an i.i.d. uniform [-1, 1] coefficient.
Polynomial gen_higher_order(int n, int k, int arity, std::uint64_t seed);

/// Fully connected QUBO: singletons and pairs, uniform [-1, 1].
Polynomial gen_qubo(int n, std::uint64_t seed);

struct MaxCutGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, sorted, no duplicates
};

std::size_t maxcut_edge_count(int n);

/// floor(n(n-1)/8) distinct edges sampled uniformly without replacement.
MaxCutGraph gen_maxcut_graph(int n, std::uint64_t seed);

/// -sum_{(i,j)} (x_i + x_j - 2 x_i x_j): minimizing maximizes the cut.
Polynomial maxcut_polynomial(const MaxCutGraph& g);

int cut_size(const MaxCutGraph& g, std::span<const int> x);

struct TspInstance {
    std::vector<std::array<double, 2>> cities;
    double penalty = 100.0;

    int size() const { return static_cast<int>(cities.size()); }
    double distance(int a, int b) const;
    void validate() const;
};

/// Cities uniform in [0, 10] x [0, 10].
TspInstance gen_tsp(int cities, std::uint64_t seed, double penalty = 100.0);

/// Closed tour length, including the edge back to the first city.
double route_length(const TspInstance& inst, std::span<const int> route);

/// Variable x_{c,p} = city c at position p, index c * n_c + p.
Polynomial encode_tsp(const TspInstance& inst);

inline int tsp_var(int city, int position, int cities) { return city * cities + position; }

/// Route from a (possibly infeasible) assignment. Each position takes the
/// city with the largest marginal (marginals default to the bits);
/// duplicate cities are then replaced by unused ones in index order.
std::vector<int> decode_tsp(std::span<const int> assignment, int cities,
                            std::optional<std::span<const double>> marginals = std::nullopt);

}  // namespace vqoa
