#include "vqoa/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "vqoa/rng.hpp"

namespace vqoa {

using cplx = std::complex<double>;

GrayCounter::GrayCounter(int digits, int radix, std::uint64_t rank)
    : radix_(radix), rank_(rank), count_(static_cast<std::size_t>(digits)), gray_(count_.size()),
      reversed_(count_.size()) {
    std::uint64_t r = rank;
    for (auto& c : count_) {
        c = static_cast<int>(r % static_cast<std::uint64_t>(radix));
        r /= static_cast<std::uint64_t>(radix);
    }
    bool rev = false;
    for (std::size_t i = count_.size(); i-- > 0;) {
        reversed_[i] = rev;
        gray_[i] = rev ? radix_ - 1 - count_[i] : count_[i];
        rev = rev != (gray_[i] % 2 == 1);
    }
}

GrayCounter::Step GrayCounter::next() {
    std::size_t i = 0;
    while (count_[i] == radix_ - 1) {
        count_[i] = 0;
        ++i;
    }
    ++count_[i];
    const int from = gray_[i];
    gray_[i] = reversed_[i] ? radix_ - 1 - count_[i] : count_[i];
    for (std::size_t j = 0; j < i; ++j) reversed_[j] = !reversed_[j];
    ++rank_;
    return {static_cast<int>(i), from, gray_[i]};
}

namespace {

// For each variable v, the terms containing it with v removed, so that
// f(x) = g(x without v) + x_v * field(v, x).
struct Adjacency {
    std::vector<std::uint32_t> begin;  // per variable, into coeff
    std::vector<double> coeff;
    std::vector<std::uint32_t> others_begin;
    std::vector<std::uint32_t> others;

    explicit Adjacency(const Polynomial& p) {
        const auto n = static_cast<std::size_t>(p.n());
        std::vector<std::vector<std::size_t>> by_var(n);
        for (std::size_t t = 0; t < p.term_count(); ++t)
            for (auto v : p.term(t).vars) by_var[v].push_back(t);
        begin.push_back(0);
        others_begin.push_back(0);
        for (std::size_t v = 0; v < n; ++v) {
            for (std::size_t t : by_var[v]) {
                const auto term = p.term(t);
                coeff.push_back(term.coeff);
                for (auto u : term.vars)
                    if (u != v) others.push_back(u);
                others_begin.push_back(static_cast<std::uint32_t>(others.size()));
            }
            begin.push_back(static_cast<std::uint32_t>(coeff.size()));
        }
    }

    double field(std::size_t v, const std::vector<int>& x) const {
        double h = 0.0;
        for (std::uint32_t e = begin[v]; e < begin[v + 1]; ++e) {
            double prod = coeff[e];
            for (std::uint32_t k = others_begin[e]; k < others_begin[e + 1]; ++k) prod *= x[others[k]];
            h += prod;
        }
        return h;
    }
};

struct Candidate {
    double exact = std::numeric_limits<double>::infinity();
    std::vector<int> x;

    bool better_than(const Candidate& o) const { return exact < o.exact || (exact == o.exact && x < o.x); }
};

Candidate scan_range(const Polynomial& poly, const Adjacency& adj, std::uint64_t lo, std::uint64_t hi, double tol) {
    constexpr std::uint64_t kResync = 4096;
    GrayCounter gc(poly.n(), poly.arity(), lo);
    std::vector<int> x(gc.digits().begin(), gc.digits().end());
    double value = poly.evaluate(x);
    double best_running = value;
    Candidate best{value, x};

    double field0 = 0.0;
    bool field0_valid = false;
    for (std::uint64_t r = lo + 1; r < hi; ++r) {
        const auto step = gc.next();
        const auto v = static_cast<std::size_t>(step.digit);
        x[v] = step.to;
        const double dx = step.to - step.from;
        if (v == 0) {
            if (!field0_valid) {
                field0 = adj.field(0, x);
                field0_valid = true;
            }
            value += dx * field0;
        } else {
            value += dx * adj.field(v, x);
            field0_valid = false;
        }
        if ((r - lo) % kResync == 0) value = poly.evaluate(x);

        if (value < best_running - tol) {
            best_running = value;
            best.exact = poly.evaluate(x);
            best.x = x;
        } else if (value <= best_running + tol) {
            // Near-tie: decide on direct evaluation, which is path independent.
            Candidate c{poly.evaluate(x), x};
            if (c.better_than(best)) best = std::move(c);
            best_running = std::min(best_running, value);
        }
    }
    return best;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

OracleResult brute_force_poly(const Polynomial& poly, int workers, std::uint64_t cap) {
    if (workers < 1) throw std::invalid_argument("brute force needs workers >= 1");
    const auto radix = static_cast<std::uint64_t>(poly.arity());
    std::uint64_t total = 1;
    for (int i = 0; i < poly.n(); ++i) {
        if (total > cap / radix) {
            throw CapExceeded("brute force over " + std::to_string(radix) + "^" + std::to_string(poly.n()) +
                              " assignments exceeds the cap of " + std::to_string(cap) + " (estimated " +
                              std::to_string(std::pow(static_cast<double>(radix), poly.n())) + " work units)");
        }
        total *= radix;
    }

    const auto t0 = std::chrono::steady_clock::now();
    const Adjacency adj(poly);
    double scale = std::abs(poly.offset());
    for (std::size_t t = 0; t < poly.term_count(); ++t) {
        const auto term = poly.term(t);
        scale += std::abs(term.coeff) * std::pow(static_cast<double>(radix - 1), static_cast<double>(term.vars.size()));
    }
    const double tol = 1e-10 * std::max(1.0, scale);

    const auto w = static_cast<std::uint64_t>(std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), total));
    std::vector<Candidate> partial(w);
    {
        std::vector<std::jthread> threads;
        for (std::uint64_t k = 0; k < w; ++k) {
            const std::uint64_t lo = total / w * k + std::min(k, total % w);
            const std::uint64_t hi = lo + total / w + (k < total % w ? 1 : 0);
            threads.emplace_back([&, k, lo, hi] { partial[k] = scan_range(poly, adj, lo, hi, tol); });
        }
    }
    Candidate best = partial.front();
    for (const auto& c : partial)
        if (c.better_than(best)) best = c;

    OracleResult r;
    r.optimum = best.exact;
    r.optimizer = std::move(best.x);
    r.enumerated = total;
    r.wall_time_s = seconds_since(t0);
    r.workers = workers;
    return r;
}

OracleResult brute_force_tsp(const TspInstance& inst, bool use_symmetry, int max_cities) {
    inst.validate();
    const int nc = inst.size();
    if (nc > max_cities)
        throw CapExceeded("TSP brute force limited to " + std::to_string(max_cities) + " cities, got " +
                          std::to_string(nc));
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<int> route(static_cast<std::size_t>(nc));
    std::iota(route.begin(), route.end(), 0);

    OracleResult r;
    r.optimum = std::numeric_limits<double>::infinity();
    // Lexicographic order, strict improvement: the first optimum found is
    // the lexicographically smallest.
    do {
        if (use_symmetry && route[1] > route.back()) continue;
        ++r.enumerated;
        const double len = route_length(inst, route);
        if (len < r.optimum) {
            r.optimum = len;
            r.optimizer = route;
        }
    } while (std::next_permutation(route.begin() + 1, route.end()));
    r.wall_time_s = seconds_since(t0);
    return r;
}

namespace {

struct PauliMasks {
    std::uint64_t x = 0, z = 0;
    int y_count = 0;
};

PauliMasks masks_of(const std::string& ops) {
    PauliMasks m;
    const auto n = ops.size();
    for (std::size_t q = 0; q < n; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
        switch (ops[q]) {
            case 'X': m.x |= bit; break;
            case 'Y': m.x |= bit; m.z |= bit; ++m.y_count; break;
            case 'Z': m.z |= bit; break;
            default: break;
        }
    }
    return m;
}

// P|k> = phase * |k ^ x>, with Y = i X Z.
cplx phase_of(const PauliMasks& m, std::uint64_t k) {
    static constexpr cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const double sign = (std::popcount(k & m.z) % 2) ? -1.0 : 1.0;
    return sign * i_pow[m.y_count % 4];
}

void check_qubits(const PauliSum& h, int max_qubits) {
    if (h.n < 1) throw std::invalid_argument("empty Pauli operator");
    if (h.n > max_qubits)
        throw CapExceeded("dense Pauli methods limited to " + std::to_string(max_qubits) + " qubits, got " +
                          std::to_string(h.n));
}

}  // namespace

Eigen::MatrixXcd dense_pauli_matrix(const PauliSum& h, int max_qubits) {
    check_qubits(h, max_qubits);
    const std::uint64_t dim = std::uint64_t{1} << h.n;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& term : h.terms) {
        const auto masks = masks_of(term.ops);
        for (std::uint64_t k = 0; k < dim; ++k)
            m(static_cast<Eigen::Index>(k ^ masks.x), static_cast<Eigen::Index>(k)) += term.coeff * phase_of(masks, k);
    }
    return m;
}

std::vector<cplx> apply_pauli_sum(const PauliSum& h, std::span<const cplx> v) {
    const std::uint64_t dim = std::uint64_t{1} << h.n;
    if (v.size() != dim) throw std::invalid_argument("apply_pauli_sum: vector length must be 2^n");
    std::vector<cplx> out(dim);
    for (const auto& term : h.terms) {
        const auto masks = masks_of(term.ops);
        for (std::uint64_t k = 0; k < dim; ++k) out[k ^ masks.x] += term.coeff * phase_of(masks, k) * v[k];
    }
    return out;
}

namespace {

double lanczos_min(const PauliSum& h) {
    const std::size_t dim = std::size_t{1} << h.n;
    const std::size_t max_steps = std::min<std::size_t>(dim, 400);
    using Vec = Eigen::VectorXcd;

    Rng rng(0x5eed, "lanczos");
    Vec q(static_cast<Eigen::Index>(dim));
    for (Eigen::Index k = 0; k < q.size(); ++k) q(k) = cplx(rng.uniform(-1, 1), rng.uniform(-1, 1));
    q.normalize();

    std::vector<Vec> basis;
    std::vector<double> alpha, beta;
    double previous = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < max_steps; ++j) {
        basis.push_back(q);
        const auto hq = apply_pauli_sum(h, std::span<const cplx>(q.data(), dim));
        Vec w = Eigen::Map<const Vec>(hq.data(), static_cast<Eigen::Index>(dim));
        alpha.push_back(q.dot(w).real());
        // Full reorthogonalization, twice for stability.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) w -= b.dot(w) * b;

        const auto m = static_cast<Eigen::Index>(alpha.size());
        Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
        for (Eigen::Index i = 0; i < m; ++i) {
            T(i, i) = alpha[static_cast<std::size_t>(i)];
            if (i + 1 < m) T(i, i + 1) = T(i + 1, i) = beta[static_cast<std::size_t>(i)];
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);
        const double theta = es.eigenvalues()(0);
        const double b = w.norm();
        const double residual = std::abs(b * es.eigenvectors()(m - 1, 0));
        if (residual < 1e-11 || b < 1e-14 || (std::abs(theta - previous) < 1e-13 && residual < 1e-9))
            return theta;
        previous = theta;
        beta.push_back(b);
        q = w / b;
    }
    return previous;
}

}  // namespace

double dense_min_eigenvalue(const PauliSum& h, int max_qubits) {
    check_qubits(h, max_qubits);
    if (h.n <= 8) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense_pauli_matrix(h, 8), Eigen::EigenvaluesOnly);
        return es.eigenvalues()(0);
    }
    return lanczos_min(h);
}

std::vector<cplx> product_state_vector(std::span<const QubitState> states) {
    std::vector<cplx> v{1.0};
    for (const auto& s : states) {
        std::vector<cplx> next(v.size() * 2);
        for (std::size_t k = 0; k < v.size(); ++k) {
            next[2 * k] = v[k] * s.amp0;
            next[2 * k + 1] = v[k] * s.amp1;
        }
        v = std::move(next);
    }
    return v;
}

double dense_expectation(const PauliSum& h, std::span<const QubitState> states) {
    if (states.size() != static_cast<std::size_t>(h.n))
        throw std::invalid_argument("dense_expectation: state count does not match operator size");
    const auto psi = product_state_vector(states);
    const Eigen::MatrixXcd m = dense_pauli_matrix(h);
    const Eigen::Map<const Eigen::VectorXcd> v(psi.data(), static_cast<Eigen::Index>(psi.size()));
    return v.dot(m * v).real();
}

}  // namespace vqoa
