#include "vqoa/problems.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "vqoa/rng.hpp"

namespace vqoa {

Polynomial gen_higher_order(int n, int k, int arity, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_higher_order: n must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("gen_higher_order: need 1 <= k <= n");
    if (arity < 2) throw std::invalid_argument("gen_higher_order: arity must be >= 2");
    interaction_count(n, k);  // overflow guard

    Rng rng(seed, "poly");
    PolynomialBuilder b(n, arity);
    // Subsets are drawn by size, then in lexicographic order.
    for (int r = 1; r <= k; ++r) {
        std::vector<std::uint32_t> idx(static_cast<std::size_t>(r));
        std::iota(idx.begin(), idx.end(), 0u);
        while (true) {
            b.add(idx, rng.uniform(-1.0, 1.0));
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<std::uint32_t>(n - r + pos)) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int q = pos + 1; q < r; ++q)
                idx[static_cast<std::size_t>(q)] = idx[static_cast<std::size_t>(q - 1)] + 1;
        }
    }
    return b.build();
}

Polynomial gen_qubo(int n, std::uint64_t seed) { return gen_higher_order(n, std::min(n, 2), 2, seed); }

std::size_t maxcut_edge_count(int n) {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 8;
}

MaxCutGraph gen_maxcut_graph(int n, std::uint64_t seed) {
    const std::size_t m = maxcut_edge_count(n);
    if (m < 1) throw std::invalid_argument("gen_maxcut: n(n-1)/8 must be >= 1 (n >= 4)");

    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) all.emplace_back(i, j);

    // Partial Fisher-Yates.
    Rng rng(seed, "maxcut");
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + rng.below(all.size() - i);
        std::swap(all[i], all[j]);
    }
    MaxCutGraph g{n, {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m)}};
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

Polynomial maxcut_polynomial(const MaxCutGraph& g) {
    PolynomialBuilder b(g.n, 2);
    for (const auto& [i, j] : g.edges) {
        b.add({static_cast<std::uint32_t>(i)}, -1.0);
        b.add({static_cast<std::uint32_t>(j)}, -1.0);
        b.add({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)}, 2.0);
    }
    return b.build();
}

int cut_size(const MaxCutGraph& g, std::span<const int> x) {
    int cut = 0;
    for (const auto& [i, j] : g.edges) cut += (x[static_cast<std::size_t>(i)] != x[static_cast<std::size_t>(j)]);
    return cut;
}

double TspInstance::distance(int a, int b) const {
    const auto& p = cities[static_cast<std::size_t>(a)];
    const auto& q = cities[static_cast<std::size_t>(b)];
    return std::hypot(p[0] - q[0], p[1] - q[1]);
}

void TspInstance::validate() const {
    if (cities.size() < 3) throw std::invalid_argument("TSP instance needs at least 3 cities");
    for (const auto& c : cities)
        if (!std::isfinite(c[0]) || !std::isfinite(c[1]))
            throw std::invalid_argument("TSP city coordinates must be finite");
    if (!std::isfinite(penalty) || penalty <= 0) throw std::invalid_argument("TSP penalty must be positive");
}

TspInstance gen_tsp(int cities, std::uint64_t seed, double penalty) {
    if (cities < 3) throw std::invalid_argument("gen_tsp: need at least 3 cities");
    Rng rng(seed, "tsp");
    TspInstance inst;
    inst.penalty = penalty;
    for (int c = 0; c < cities; ++c) {
        const double x = rng.uniform(0.0, 10.0);
        const double y = rng.uniform(0.0, 10.0);
        inst.cities.push_back({x, y});
    }
    return inst;
}

double route_length(const TspInstance& inst, std::span<const int> route) {
    double total = 0.0;
    for (std::size_t p = 0; p < route.size(); ++p)
        total += inst.distance(route[p], route[(p + 1) % route.size()]);
    return total;
}

Polynomial encode_tsp(const TspInstance& inst) {
    inst.validate();
    const int nc = inst.size();
    const double A = inst.penalty;
    PolynomialBuilder b(nc * nc, 2);
    auto v = [nc](int c, int p) { return static_cast<std::uint32_t>(tsp_var(c, p, nc)); };

    for (int p = 0; p < nc; ++p) {
        const int next = (p + 1) % nc;
        for (int c = 0; c < nc; ++c)
            for (int c2 = 0; c2 < nc; ++c2)
                if (c != c2) b.add({v(c, p), v(c2, next)}, inst.distance(c, c2));
    }

    // A (sum_i y_i - 1)^2 with binary y: A - A sum y_i + 2A sum_{i<j} y_i y_j.
    auto one_hot = [&](auto var_of) {
        b.add_offset(A);
        for (int i = 0; i < nc; ++i) {
            b.add({var_of(i)}, -A);
            for (int j = i + 1; j < nc; ++j) b.add({var_of(i), var_of(j)}, 2 * A);
        }
    };
    for (int p = 0; p < nc; ++p) one_hot([&](int c) { return v(c, p); });
    for (int c = 0; c < nc; ++c) one_hot([&](int p) { return v(c, p); });
    return b.build();
}

std::vector<int> decode_tsp(std::span<const int> assignment, int cities,
                            std::optional<std::span<const double>> marginals) {
    const auto nvars = static_cast<std::size_t>(cities) * static_cast<std::size_t>(cities);
    if (assignment.size() != nvars)
        throw std::invalid_argument("decode_tsp: assignment length must be cities^2");
    if (marginals && marginals->size() != nvars)
        throw std::invalid_argument("decode_tsp: marginal length must be cities^2");

    auto weight = [&](int c, int p) {
        const auto idx = static_cast<std::size_t>(tsp_var(c, p, cities));
        return marginals ? (*marginals)[idx] : static_cast<double>(assignment[idx]);
    };

    std::vector<int> route(static_cast<std::size_t>(cities));
    for (int p = 0; p < cities; ++p) {
        int best = 0;
        for (int c = 1; c < cities; ++c)
            if (weight(c, p) > weight(best, p)) best = c;
        route[static_cast<std::size_t>(p)] = best;
    }

    std::vector<bool> used(static_cast<std::size_t>(cities), false);
    std::vector<std::size_t> duplicate_positions;
    for (std::size_t p = 0; p < route.size(); ++p) {
        auto c = static_cast<std::size_t>(route[p]);
        if (used[c]) duplicate_positions.push_back(p);
        used[c] = true;
    }
    std::size_t next_free = 0;
    for (std::size_t p : duplicate_positions) {
        while (used[next_free]) ++next_free;
        route[p] = static_cast<int>(next_free);
        used[next_free] = true;
    }
    return route;
}

}  // namespace vqoa
