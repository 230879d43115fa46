#include "vqoa/io.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

namespace vqoa::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
    if (!j.contains(key)) throw FormatError(std::string("missing field '") + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw FormatError(std::string("field '") + key + "': " + e.what());
    }
}

json nullable(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

int Problem::n() const { return polynomial ? polynomial->n() : tsp->size() * tsp->size(); }
int Problem::arity() const { return polynomial ? polynomial->arity() : 2; }
int Problem::order() const { return polynomial ? polynomial->max_order() : 2; }

json polynomial_to_json(const Polynomial& p, const std::string& kind) {
    json terms = json::array();
    for (std::size_t i = 0; i < p.term_count(); ++i) {
        const auto t = p.term(i);
        terms.push_back({{"vars", std::vector<std::uint32_t>(t.vars.begin(), t.vars.end())}, {"coeff", t.coeff}});
    }
    return {{"kind", kind}, {"n", p.n()},          {"N", p.arity()},
            {"k", p.max_order()}, {"offset", p.offset()}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
    const int n = field<int>(j, "n");
    const int arity = j.contains("N") ? field<int>(j, "N") : 2;
    if (n < 1) throw FormatError("n must be >= 1");
    if (arity < 2) throw FormatError("N must be >= 2");
    PolynomialBuilder b(n, arity);
    if (j.contains("offset")) b.add_offset(field<double>(j, "offset"));
    const json& terms = j.at("terms");
    if (!terms.is_array()) throw FormatError("'terms' must be an array");
    for (std::size_t i = 0; i < terms.size(); ++i) {
        try {
            b.add(field<std::vector<std::uint32_t>>(terms[i], "vars"), field<double>(terms[i], "coeff"));
        } catch (const std::exception& e) {
            throw FormatError("term " + std::to_string(i) + ": " + e.what());
        }
    }
    return b.build();
}

json tsp_to_json(const TspInstance& inst) {
    json cities = json::array();
    for (const auto& c : inst.cities) cities.push_back({c[0], c[1]});
    return {{"kind", "tsp"}, {"cities", std::move(cities)}, {"penalty", inst.penalty}};
}

TspInstance tsp_from_json(const json& j) {
    TspInstance inst;
    for (const auto& c : field<std::vector<std::vector<double>>>(j, "cities")) {
        if (c.size() != 2) throw FormatError("each city needs two coordinates");
        inst.cities.push_back({c[0], c[1]});
    }
    if (j.contains("penalty")) inst.penalty = field<double>(j, "penalty");
    try {
        inst.validate();
    } catch (const std::exception& e) {
        throw FormatError(e.what());
    }
    return inst;
}

json problem_to_json(const Problem& p) {
    return p.tsp ? tsp_to_json(*p.tsp) : polynomial_to_json(*p.polynomial, p.kind);
}

Problem problem_from_json(const json& j) {
    if (!j.is_object()) throw FormatError("problem must be a JSON object");
    Problem p;
    if (j.contains("cities")) {
        p.kind = "tsp";
        p.tsp = tsp_from_json(j);
        return p;
    }
    p.polynomial = polynomial_from_json(j);
    p.kind = j.contains("kind") ? field<std::string>(j, "kind") : (p.polynomial->arity() > 2 ? "nary" : "qubo");
    return p;
}

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& path, const json& j) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

Problem load_problem(const std::filesystem::path& path) {
    try {
        return problem_from_json(read_json(path));
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

PauliSum load_pauli(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path.string());
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_pauli_text(ss.str());
}

json oracle_to_json(const OracleResult& r) {
    return {{"optimum", r.optimum},         {"optimizer", r.optimizer}, {"enumerated", r.enumerated},
            {"wall_time_s", r.wall_time_s}, {"workers", r.workers},     {"total_core_time_s", r.total_core_time_s()}};
}

json problem_summary(const Problem& p) {
    json j{{"kind", p.kind}, {"n", p.n()}, {"N", p.arity()}, {"k", p.order()}};
    if (p.polynomial) j["terms"] = p.polynomial->term_count();
    if (p.tsp) j["cities"] = p.tsp->size();
    return j;
}

json config_to_json(const RunConfig& c, const std::string& mode_name, int partitions, double label_power) {
    return {{"n", c.ansatz.n},
            {"N", c.ansatz.arity},
            {"m", c.ansatz.m},
            {"t", c.ansatz.t},
            {"gate_set", std::string(to_string(c.ansatz.gates))},
            {"mode", mode_name},
            {"partitions", partitions},
            {"label_power", label_power},
            {"replicas", c.replicas},
            {"seed", c.seed},
            {"optimizer", to_string(c.optimizer.method)},
            {"initial_step", c.optimizer.initial_step},
            {"max_iters", c.stop.max_iters},
            {"plateau_window", c.stop.plateau_window},
            {"plateau_rel_change", c.stop.plateau_rel_change},
            {"abs_tol", c.stop.abs_tol}};
}

json run_result_to_json(const RunResult& r, const RunConfig& config, const json& problem,
                        const std::string& mode_name, int partitions, const std::vector<std::string>& trace_files,
                        double label_power) {
    json cfg = config_to_json(config, mode_name, partitions, label_power);
    cfg["k"] = (problem.is_object() ? problem.value("k", 0) : 0);

    json reasons{{"converged", 0}, {"plateau", 0}, {"max_iters", 0}, {"failed", 0}};
    json replicas = json::array();
    for (const auto& rep : r.replicas) {
        json e{{"index", rep.index}, {"seed", rep.seed}, {"ok", rep.ok}};
        if (rep.ok) {
            reasons[to_string(rep.reason)] = reasons[to_string(rep.reason)].get<int>() + 1;
            e["best_cost"] = rep.best_cost;
            e["final_objective"] = rep.final_objective;
            e["evaluations"] = rep.evaluations;
            e["stop_reason"] = to_string(rep.reason);
        } else {
            reasons["failed"] = reasons["failed"].get<int>() + 1;
            e["error"] = rep.error;
        }
        replicas.push_back(std::move(e));
    }
    json out{{"problem", problem},
             {"config", std::move(cfg)},
             {"best_assignment", r.best_assignment},
             {"best_cost", r.best_cost},
             {"best_replica", r.best_replica},
             {"reference", nullable(r.reference)},
             {"reference_source", r.reference_source},
             {"approx_ratio", r.ratio ? nullable(r.ratio->value) : json(nullptr)},
             {"gap", r.ratio ? json(r.ratio->gap) : json(nullptr)},
             {"stop_reasons", std::move(reasons)},
             {"replicas", std::move(replicas)},
             {"wall_time_s", r.wall_time_s},
             {"trace_files", trace_files}};
    return out;
}

std::vector<std::string> write_traces(const RunResult& r, const std::filesystem::path& dir, const std::string& stem) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> paths;
    for (const auto& rep : r.replicas) {
        if (!rep.ok) continue;
        const auto path = dir / (stem + ".replica" + std::to_string(rep.index) + ".csv");
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        rep.trace.write_csv(out);
        paths.push_back(path.string());
    }
    return paths;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "suite,size,mode,partitions,workers,seconds,approx_ratio\n";
    os << std::setprecision(9);
    for (const auto& r : rows) {
        os << r.suite << ',' << r.size << ',' << r.mode << ',' << r.partitions << ',' << r.workers << ','
           << r.seconds << ',';
        if (r.approx_ratio) os << std::setprecision(17) << *r.approx_ratio << std::setprecision(9);
        os << '\n';
    }
    return os.str();
}

}  // namespace vqoa::io
