#include "vqoa/optimizer.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>


namespace vqoa {

void StopPolicy::validate() const {
    if (max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (plateau_window < 2) throw std::invalid_argument("plateau_window must be >= 2");
    if (!(plateau_rel_change >= 0)) throw std::invalid_argument("plateau_rel_change must be >= 0");
    if (!(abs_tol >= 0)) throw std::invalid_argument("abs_tol must be >= 0");
}

double relative_change(double prev_best, double new_best) {
    return std::abs(new_best - prev_best) / std::max(std::abs(prev_best), 1e-12);
}

void Trace::write_csv(std::ostream& os) const {
    const auto old = os.precision(17);
    os << "iter,cost,best_cost,decoded_cost\n";
    for (const auto& r : records) {
        os << r.iter << ',' << r.cost << ',' << r.best_cost << ',';
        if (!std::isnan(r.decoded_cost)) os << r.decoded_cost;
        os << '\n';
    }
    os.precision(old);
}

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::Converged: return "converged";
        case StopReason::Plateau: return "plateau";
        case StopReason::MaxIters: return "max_iters";
    }
    return "?";
}

std::string to_string(Method m) { return m == Method::NelderMead ? "nelder-mead" : "linear-trust-region"; }

Method parse_method(const std::string& s) {
    if (s == "nelder-mead" || s == "nm") return Method::NelderMead;
    if (s == "linear-trust-region" || s == "cobyla") return Method::LinearTrustRegion;
    throw std::invalid_argument("unknown optimizer '" + s + "' (expected nelder-mead or cobyla)");
}

namespace {

using Point = std::vector<double>;

// Owns the evaluation budget, stopping rules and trace. Methods call eval()
// and must return as soon as stopped() is true.
class Tracker {
public:
    Tracker(const Objective& f, const StopPolicy& policy, int warmup)
        : f_(f), policy_(policy), warmup_(warmup) {}

    double eval(const Point& x) {
        const ObjectiveValue v = f_(x);
        if (!std::isfinite(v.value)) {
            std::ostringstream os;
            os.precision(17);
            os << "objective returned " << v.value << " at x = [";
            for (std::size_t i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x[i];
            os << "]";
            throw NonFiniteObjective(os.str());
        }
        ++evals_;
        if (v.value < best_) {
            best_ = v.value;
            best_x_ = x;
        }
        if (!std::isnan(v.decoded) && (std::isnan(best_decoded_) || v.decoded < best_decoded_))
            best_decoded_ = v.decoded;
        trace_.records.push_back({evals_, v.value, best_, best_decoded_});
        history_.push_back(best_);

        if (evals_ >= policy_.max_iters && evals_ >= warmup_) {
            stop_ = StopReason::MaxIters;
        } else if (evals_ >= warmup_ + policy_.plateau_window) {
            const double then = history_[static_cast<std::size_t>(evals_ - policy_.plateau_window - 1)];
            if (relative_change(then, best_) < policy_.plateau_rel_change) stop_ = StopReason::Plateau;
        }
        return v.value;
    }

    bool stopped() const { return stop_.has_value(); }
    void converge() {
        if (!stop_) stop_ = StopReason::Converged;
    }

    MinimizeResult finish() && {
        return {std::move(best_x_), best_, std::move(trace_), stop_.value_or(StopReason::Converged), evals_};
    }

private:
    const Objective& f_;
    const StopPolicy& policy_;
    int warmup_;
    int evals_ = 0;
    double best_ = std::numeric_limits<double>::infinity();
    double best_decoded_ = std::numeric_limits<double>::quiet_NaN();
    Point best_x_;
    Trace trace_;
    std::vector<double> history_;
    std::optional<StopReason> stop_;
};

// Adaptive coefficients (Gao & Han) for d >= 2; the classic ones for d = 1.
void nelder_mead(Tracker& tr, Point x0, const StopPolicy& policy, double step) {
    const std::size_t d = x0.size();
    const double dd = static_cast<double>(d);
    const double alpha = 1.0;
    const double beta = d >= 2 ? 1.0 + 2.0 / dd : 2.0;
    const double gamma = d >= 2 ? 0.75 - 1.0 / (2.0 * dd) : 0.5;
    const double delta = d >= 2 ? 1.0 - 1.0 / dd : 0.5;

    std::vector<Point> xs(d + 1, x0);
    std::vector<double> fs(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        if (i > 0) xs[i][i - 1] += step;
        fs[i] = tr.eval(xs[i]);
        if (tr.stopped()) return;
    }

    std::vector<std::size_t> order(d + 1);
    Point centroid(d), xr(d), xe(d), xc(d);
    auto along = [&](Point& out, double coef, const Point& from) {
        for (std::size_t j = 0; j < d; ++j) out[j] = centroid[j] + coef * (from[j] - centroid[j]);
    };

    while (true) {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
        {
            std::vector<Point> xs2(d + 1);
            std::vector<double> fs2(d + 1);
            for (std::size_t i = 0; i <= d; ++i) {
                xs2[i] = std::move(xs[order[i]]);
                fs2[i] = fs[order[i]];
            }
            xs = std::move(xs2);
            fs = std::move(fs2);
        }

        double diameter = 0.0, spread = 0.0;
        for (std::size_t i = 1; i <= d; ++i) {
            spread = std::max(spread, std::abs(fs[i] - fs[0]));
            for (std::size_t j = 0; j < d; ++j) diameter = std::max(diameter, std::abs(xs[i][j] - xs[0][j]));
        }
        if (diameter <= policy.abs_tol && spread <= policy.abs_tol) {
            tr.converge();
            return;
        }

        std::fill(centroid.begin(), centroid.end(), 0.0);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) centroid[j] += xs[i][j];
        for (double& c : centroid) c /= dd;

        const Point& worst = xs[d];
        along(xr, -alpha, worst);
        const double fr = tr.eval(xr);
        if (tr.stopped()) return;

        if (fr < fs[0]) {
            along(xe, beta, xr);
            const double fe = tr.eval(xe);
            if (tr.stopped()) return;
            if (fe < fr) {
                xs[d] = xe;
                fs[d] = fe;
            } else {
                xs[d] = xr;
                fs[d] = fr;
            }
            continue;
        }
        // Ties with the second-worst vertex accept the reflection, so flat
        // regions are explored instead of collapsing the simplex.
        if (fr <= fs[d - 1]) {
            xs[d] = xr;
            fs[d] = fr;
            continue;
        }
        if (fr < fs[d]) {
            along(xc, gamma, xr);
            const double fc = tr.eval(xc);
            if (tr.stopped()) return;
            if (fc <= fr) {
                xs[d] = xc;
                fs[d] = fc;
                continue;
            }
        } else {
            along(xc, gamma, worst);
            const double fc = tr.eval(xc);
            if (tr.stopped()) return;
            if (fc < fs[d]) {
                xs[d] = xc;
                fs[d] = fc;
                continue;
            }
        }
        for (std::size_t i = 1; i <= d; ++i) {
            for (std::size_t j = 0; j < d; ++j) xs[i][j] = xs[0][j] + delta * (xs[i][j] - xs[0][j]);
            fs[i] = tr.eval(xs[i]);
            if (tr.stopped()) return;
        }
    }
}

// Unconstrained COBYLA-style method: a linear model interpolated on d+1
// points, minimized on a trust region of radius rho.
void linear_trust_region(Tracker& tr, Point x0, const StopPolicy& policy, double step) {
    const std::size_t d = x0.size();
    double rho = step;
    const double rho_end = std::max(policy.abs_tol, 1e-14);

    std::vector<Point> pts(d + 1, x0);
    std::vector<double> fs(d + 1);
    auto rebuild = [&](std::size_t keep) -> bool {
        const Point center = pts[keep];
        const double fc = fs[keep];
        pts.assign(d + 1, center);
        fs[0] = fc;
        for (std::size_t i = 1; i <= d; ++i) {
            pts[i][i - 1] += rho;
            fs[i] = tr.eval(pts[i]);
            if (tr.stopped()) return false;
        }
        return true;
    };

    fs[0] = tr.eval(pts[0]);
    if (tr.stopped()) return;
    if (!rebuild(0)) return;

    Eigen::MatrixXd Y(d, d);
    Eigen::VectorXd df(d);
    while (true) {
        const auto best = static_cast<std::size_t>(std::min_element(fs.begin(), fs.end()) - fs.begin());
        if (rho < rho_end) {
            tr.converge();
            return;
        }

        std::size_t row = 0;
        double far_from_best = 0.0;
        for (std::size_t i = 0; i <= d; ++i) {
            if (i == best) continue;
            double dist = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                const double dx = pts[i][j] - pts[best][j];
                Y(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(j)) = dx / rho;
                dist += dx * dx;
            }
            far_from_best = std::max(far_from_best, std::sqrt(dist));
            df(static_cast<Eigen::Index>(row)) = (fs[i] - fs[best]) / rho;
            ++row;
        }
        // Radius reductions are only justified by a well-poised model;
        // otherwise restore the geometry at the current radius.
        Eigen::FullPivLU<Eigen::MatrixXd> lu(Y);
        if (far_from_best > 2.0 * rho || lu.rcond() < 1e-2) {
            if (!rebuild(best)) return;
            continue;
        }
        const Eigen::VectorXd g = lu.solve(df);
        const double gnorm = g.norm();
        if (!(gnorm > 0) || !std::isfinite(gnorm)) {
            rho *= 0.5;
            if (rho < rho_end) continue;
            if (!rebuild(best)) return;
            continue;
        }

        Point trial = pts[best];
        for (std::size_t j = 0; j < d; ++j) trial[j] -= rho * g(static_cast<Eigen::Index>(j)) / gnorm;
        const double ft = tr.eval(trial);
        if (tr.stopped()) return;
        const double predicted = rho * gnorm;
        const double actual = fs[best] - ft;

        // Replace the interpolation point farthest from the new point.
        std::size_t far = best == 0 ? 1 : 0;
        double far_dist = -1.0;
        for (std::size_t i = 0; i <= d; ++i) {
            double dist = 0.0;
            for (std::size_t j = 0; j < d; ++j) dist += (pts[i][j] - trial[j]) * (pts[i][j] - trial[j]);
            if ((actual > 0 || i != best) && dist > far_dist) {
                far_dist = dist;
                far = i;
            }
        }
        pts[far] = trial;
        fs[far] = ft;

        if (actual <= 0.1 * predicted) {
            rho *= 0.5;
            if (rho < rho_end) continue;
            const auto b = static_cast<std::size_t>(std::min_element(fs.begin(), fs.end()) - fs.begin());
            if (!rebuild(b)) return;
        }
    }
}

}  // namespace

MinimizeResult minimize(const Objective& objective, std::vector<double> x0, const StopPolicy& policy,
                        std::uint64_t /*seed*/, const OptimizerOptions& options) {
    policy.validate();
    if (x0.empty()) throw std::invalid_argument("minimize needs at least one parameter");
    const int warmup = static_cast<int>(x0.size()) + 1;
    Tracker tr(objective, policy, warmup);
    if (options.method == Method::NelderMead)
        nelder_mead(tr, std::move(x0), policy, options.initial_step);
    else
        linear_trust_region(tr, std::move(x0), policy, options.initial_step);
    return std::move(tr).finish();
}

MinimizeResult minimize(const std::function<double(std::span<const double>)>& objective, std::vector<double> x0,
                        const StopPolicy& policy, std::uint64_t seed, const OptimizerOptions& options) {
    const Objective wrapped = [&](std::span<const double> x) { return ObjectiveValue{objective(x)}; };
    return minimize(wrapped, std::move(x0), policy, seed, options);
}

}  // namespace vqoa
