// vqoa command-line front end.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vqoa/evaluator.hpp"
#include "vqoa/io.hpp"
#include "vqoa/oracle.hpp"
#include "vqoa/pauli.hpp"
#include "vqoa/photonics.hpp"
#include "vqoa/problems.hpp"
#include "vqoa/runner.hpp"

namespace fs = std::filesystem;
using vqoa::io::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// "8,16,32", "8..16" or "64..1024:64".
std::vector<int> parse_sizes(const std::string& spec) {
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        try {
            if (dots == std::string::npos) {
                out.push_back(std::stoi(item));
                continue;
            }
            const int lo = std::stoi(item.substr(0, dots));
            std::string rest = item.substr(dots + 2);
            int step = 1;
            if (const auto colon = rest.find(':'); colon != std::string::npos) {
                step = std::stoi(rest.substr(colon + 1));
                rest = rest.substr(0, colon);
            }
            const int hi = std::stoi(rest);
            if (step < 1 || hi < lo) throw UsageError("bad size range '" + item + "'");
            for (int v = lo; v <= hi; v += step) out.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError("bad size list '" + spec + "'");
        }
    }
    if (out.empty()) throw UsageError("empty size list");
    return out;
}

void echo_config(const std::string& command, const json& config) {
    std::cerr << "effective config (" << command << "): " << config.dump() << '\n';
}

void emit_json(const std::string& out, const json& j) {
    if (out.empty())
        std::cout << j.dump(2) << '\n';
    else
        vqoa::io::write_json(out, j);
}

// Solver flags shared by solve, chem and photonic. Negative or empty values
// mean "derive from the problem".
struct SolverFlags {
    int m = 0;
    int t = 0;
    std::string gates = "RY";
    std::string mode = "expectation";
    int shots = 1024;
    int replicas = 50;
    int workers = vqoa::default_workers();
    int partitions = 1;
    std::uint64_t seed = 1;
    std::string optimizer;
    double step = 0.5;
    int max_iters = 5000;
    int plateau_window = 500;
    double plateau_rel = 5e-4;
    double abs_tol = 1e-8;
    double label_power = 0.0;
    std::string out;
    std::string traces;
    bool no_traces = false;

    void add_to(CLI::App* app, bool with_mode) {
        app->add_option("--m", m, "layers per repeat (default from problem size)");
        app->add_option("--t", t, "repeats (default from problem size)");
        app->add_option("--gates", gates, "RY, RX or RXRY")->capture_default_str();
        if (with_mode) {
            app->add_option("--mode", mode, "expectation, decode or shots")->capture_default_str();
            app->add_option("--shots", shots, "shots per evaluation in shots mode")->capture_default_str();
            app->add_option("--partitions", partitions, "qubit groups for grouped simulation")->capture_default_str();
            app->add_option("--label-power", label_power, "N-ary label sharpening (default from arity)");
        }
        app->add_option("--replicas", replicas)->capture_default_str();
        app->add_option("--workers", workers, "default VQOA_WORKERS or hardware threads")->capture_default_str();
        app->add_option("--seed", seed)->capture_default_str();
        app->add_option("--optimizer", optimizer, "nelder-mead or cobyla (default from arity)");
        app->add_option("--initial-step", step, "radians")->capture_default_str();
        app->add_option("--max-iters", max_iters)->capture_default_str();
        app->add_option("--plateau-window", plateau_window)->capture_default_str();
        app->add_option("--plateau-rel", plateau_rel)->capture_default_str();
        app->add_option("--abs-tol", abs_tol)->capture_default_str();
        app->add_option("-o,--out", out, "result JSON (stdout if omitted)");
        app->add_option("--traces", traces, "trace CSV directory (default <out>.traces)");
        app->add_flag("--no-traces", no_traces, "skip per-replica trace files");
    }

    vqoa::RunConfig config(int n, int arity) const {
        vqoa::RunConfig c;
        c.ansatz = vqoa::default_ansatz(n, arity);
        if (m > 0) c.ansatz.m = m;
        if (t > 0) c.ansatz.t = t;
        c.ansatz.gates = vqoa::parse_gate_set(gates);
        c.optimizer.method = optimizer.empty() ? vqoa::default_method(arity) : vqoa::parse_method(optimizer);
        c.optimizer.initial_step = step;
        c.stop.max_iters = max_iters;
        c.stop.plateau_window = plateau_window;
        c.stop.plateau_rel_change = plateau_rel;
        c.stop.abs_tol = abs_tol;
        c.replicas = replicas;
        c.workers = workers;
        c.seed = seed;
        c.keep_traces = !no_traces;
        c.validate(n);
        return c;
    }

    vqoa::EvalMode eval_mode(int arity) const {
        auto em = vqoa::EvalMode::parse(mode, mode == "shots" ? shots : 0);
        em.label_power = label_power > 0 ? label_power : vqoa::default_label_power(arity);
        return em;
    }

    fs::path trace_dir() const {
        if (!traces.empty()) return traces;
        return out.empty() ? fs::path("traces") : fs::path(out + ".traces");
    }
    std::string stem() const { return out.empty() ? std::string("run") : fs::path(out).stem().string(); }
};

json effective(const SolverFlags& f, const vqoa::RunConfig& c, const std::string& mode_name, double label_power) {
    json j = vqoa::io::config_to_json(c, mode_name, f.partitions, label_power);
    j["workers"] = c.workers;
    j["keep_traces"] = c.keep_traces;
    json seeds = json::array();
    for (int r = 0; r < c.replicas; ++r) seeds.push_back(vqoa::replica_seed(c.seed, r));
    j["replica_seeds"] = std::move(seeds);
    return j;
}

// Runs, writes traces and the result JSON, prints the summary line.
int finish_run(const vqoa::CostModel& cost, const SolverFlags& f, const vqoa::RunConfig& c, const json& problem,
               double label_power, const std::optional<std::pair<double, std::string>>& reference) {
    auto result = vqoa::run(cost, c);
    if (reference) result.set_reference(reference->first, reference->second, cost.family());
    std::vector<std::string> traces;
    if (c.keep_traces) traces = vqoa::io::write_traces(result, f.trace_dir(), f.stem());
    const json out = vqoa::io::run_result_to_json(result, c, problem, cost.mode_name(), f.partitions, traces,
                                                  label_power);
    if (!f.out.empty()) emit_json(f.out, out);
    std::printf("best_cost %.12g\n", result.best_cost);
    if (result.ratio) {
        if (result.ratio->value)
            std::printf("approx_ratio %.12g\n", *result.ratio->value);
        else
            std::printf("approx_ratio undefined (gap %.12g)\n", result.ratio->gap);
    }
    if (f.out.empty()) std::cout << out.dump(2) << '\n';
    return kExitOk;
}

double read_reference(const fs::path& path) {
    const json j = vqoa::io::read_json(path);
    if (j.is_number()) return j.get<double>();
    if (j.contains("optimum")) return j.at("optimum").get<double>();
    if (j.contains("best_cost")) return j.at("best_cost").get<double>();
    throw vqoa::io::FormatError(path.string() + ": no 'optimum' or 'best_cost' field");
}

std::string family_of(const vqoa::io::Problem& p) {
    if (p.kind == "tsp" || p.kind == "maxcut") return p.kind;
    return p.kind == "nary" || p.kind == "hobo" ? p.kind : "qubo";
}

int cmd_gen(const std::string& kind, int n, int k, int arity, int cities, std::uint64_t seed, const std::string& out) {
    echo_config("gen", {{"kind", kind}, {"n", n}, {"k", k}, {"N", arity}, {"cities", cities}, {"seed", seed}});
    json j;
    if (kind == "qubo") {
        j = vqoa::io::polynomial_to_json(vqoa::gen_qubo(n, seed), kind);
    } else if (kind == "hobo") {
        j = vqoa::io::polynomial_to_json(vqoa::gen_higher_order(n, k, 2, seed), kind);
    } else if (kind == "nary") {
        j = vqoa::io::polynomial_to_json(vqoa::gen_higher_order(n, k, arity, seed), kind);
    } else if (kind == "maxcut") {
        const auto g = vqoa::gen_maxcut_graph(n, seed);
        j = vqoa::io::polynomial_to_json(vqoa::maxcut_polynomial(g), kind);
        json edges = json::array();
        for (const auto& [a, b] : g.edges) edges.push_back({a, b});
        j["edges"] = std::move(edges);
        std::printf("edges %zu\n", g.edges.size());
    } else if (kind == "tsp") {
        j = vqoa::io::tsp_to_json(vqoa::gen_tsp(cities, seed));
    } else {
        throw UsageError("unknown problem kind '" + kind + "'");
    }
    if (j.contains("terms")) {
        const int order = kind == "qubo" || kind == "maxcut" ? 2 : k;
        std::printf("terms %zu\n", j.at("terms").size());
        if (kind != "maxcut")
            std::printf("T(%d, %d) = %llu\n", n, order,
                        static_cast<unsigned long long>(vqoa::interaction_count(n, order)));
    }
    emit_json(out, j);
    return kExitOk;
}

int cmd_solve(const std::string& problem_path, const std::string& reference_path, bool oracle, const SolverFlags& f) {
    const auto problem = vqoa::io::load_problem(problem_path);
    const int n = problem.n();
    const auto config = f.config(n, problem.arity());
    const auto mode = f.eval_mode(problem.arity());
    if (problem.tsp && f.partitions != 1) throw UsageError("--partitions is not supported for tsp problems");
    echo_config("solve", effective(f, config, mode.name(), mode.label_power));

    std::unique_ptr<vqoa::CostModel> cost;
    const std::string family = family_of(problem);
    if (problem.tsp)
        cost = std::make_unique<vqoa::TspCost>(*problem.tsp, mode);
    else
        cost = std::make_unique<vqoa::PolynomialCost>(*problem.polynomial, mode, family,
                                                      vqoa::PartitionPlan::even(n, f.partitions));

    std::optional<std::pair<double, std::string>> reference;
    if (!reference_path.empty()) {
        reference = {read_reference(reference_path), "external"};
    } else if (oracle) {
        const auto r = problem.tsp ? vqoa::brute_force_tsp(*problem.tsp)
                                   : vqoa::brute_force_poly(*problem.polynomial, f.workers);
        reference = {r.optimum, "oracle"};
    }
    return finish_run(*cost, f, config, vqoa::io::problem_summary(problem), mode.label_power, reference);
}

int cmd_brute(const std::string& problem_path, const std::string& tsp_path, const std::string& ham_path, int workers,
              const std::string& out) {
    const int given = !problem_path.empty() + !tsp_path.empty() + !ham_path.empty();
    if (given != 1) throw UsageError("brute needs exactly one of --problem, --tsp, --hamiltonian");
    echo_config("brute", {{"problem", problem_path}, {"tsp", tsp_path}, {"hamiltonian", ham_path},
                          {"workers", workers}});
    json j;
    if (!ham_path.empty()) {
        const auto h = vqoa::io::load_pauli(ham_path);
        j = {{"kind", "hamiltonian"}, {"n", h.n}, {"optimum", vqoa::dense_min_eigenvalue(h)}};
    } else {
        const auto problem = vqoa::io::load_problem(problem_path.empty() ? tsp_path : problem_path);
        if (!tsp_path.empty() && !problem.tsp) throw UsageError(tsp_path + " is not a tsp problem");
        const auto r = problem.tsp ? vqoa::brute_force_tsp(*problem.tsp)
                                   : vqoa::brute_force_poly(*problem.polynomial, workers);
        j = vqoa::io::oracle_to_json(r);
        j["kind"] = problem.kind;
        j["n"] = problem.n();
        std::printf("enumerated %llu\n", static_cast<unsigned long long>(r.enumerated));
    }
    std::printf("optimum %.12g\n", j.at("optimum").get<double>());
    emit_json(out, j);
    return kExitOk;
}

int cmd_chem(const std::string& ham_path, const SolverFlags& f) {
    const auto h = vqoa::io::load_pauli(ham_path);
    const auto config = f.config(h.n, 2);
    echo_config("chem", effective(f, config, "expectation", vqoa::kDefaultLabelPower));
    const vqoa::PauliCost cost(h);
    std::optional<std::pair<double, std::string>> reference;
    if (h.n <= 12) reference = {vqoa::dense_min_eigenvalue(h), "oracle"};
    const json problem{{"kind", "hamiltonian"}, {"n", h.n}, {"terms", h.terms.size()}, {"diagonal", h.diagonal()}};
    return finish_run(cost, f, config, problem, vqoa::kDefaultLabelPower, reference);
}

struct PhotonicFlags {
    int layers = 6;
    std::string materials = "data/materials";
    std::string palette = "SiO2,Si3N4,Al2O3,TiO2";
    std::string spectrum;
    std::string visible = "400:700";
    double total_thickness = 1200.0;
    double exit_index = 1.45;
    double cap_index = 0.0;
    double cap_thickness = 0.0;
    std::string stack_out;
    std::string transmission_out;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

int cmd_photonic(const PhotonicFlags& p, SolverFlags f) {
    namespace ph = vqoa::photonics;
    const auto colon = p.visible.find(':');
    if (colon == std::string::npos) throw UsageError("--visible expects lo:hi");
    ph::Band band;
    try {
        band = {std::stod(p.visible.substr(0, colon)), std::stod(p.visible.substr(colon + 1))};
    } catch (const std::logic_error&) {
        throw UsageError("--visible expects lo:hi in nm");
    }
    const auto db = ph::MaterialDb::load_dir(p.materials);
    auto design = ph::WindowDesign::with_palette(db, split_list(p.palette));
    design.layers = p.layers;
    design.total_thickness_nm = p.total_thickness;
    design.exit_index = p.exit_index;
    design.band = band;
    if (!p.spectrum.empty()) design.solar = ph::load_spectrum_csv(p.spectrum);
    std::optional<ph::MaterialTable> cap_material;
    if (p.cap_thickness > 0) {
        if (!(p.cap_index >= 1.0)) throw UsageError("--cap-thickness needs --cap-index >= 1");
        cap_material = ph::MaterialTable::constant("cap", p.cap_index);
        design.cap = ph::Layer{&*cap_material, p.cap_thickness};
    }
    design.validate();

    f.mode = "decode";
    const int n = design.bit_count();
    const auto config = f.config(n, 2);
    json effective_cfg = effective(f, config, "decode", vqoa::kDefaultLabelPower);
    effective_cfg["photonic"] = {{"layers", p.layers},          {"materials", p.materials},
                                 {"palette", split_list(p.palette)}, {"spectrum", p.spectrum},
                                 {"visible", {band.lo_nm, band.hi_nm}}, {"total_thickness_nm", p.total_thickness},
                                 {"exit_index", p.exit_index},
                                 {"cap_index", p.cap_index},           {"cap_thickness_nm", p.cap_thickness}};
    echo_config("photonic", effective_cfg);

    const vqoa::BlackBoxCost cost([&design](std::span<const int> bits) { return design.fom(bits); }, n, "photonic");
    auto result = vqoa::run(cost, config);
    std::vector<std::string> traces;
    if (config.keep_traces) traces = vqoa::io::write_traces(result, f.trace_dir(), f.stem());
    json problem{{"kind", "photonic"}, {"n", n}, {"layers", p.layers}};
    json out = vqoa::io::run_result_to_json(result, config, problem, "decode", 1, traces, vqoa::kDefaultLabelPower);

    const auto stack = design.stack_for(result.best_assignment);
    json layers = json::array();
    for (const auto& layer : stack.layers)
        layers.push_back({{"material", layer.material->name()}, {"thickness_nm", layer.thickness_nm}});
    const json stack_json{{"incidence_index", stack.incidence_index},
                          {"exit_index", stack.exit_index},
                          {"layers", std::move(layers)},
                          {"bits", result.best_assignment},
                          {"fom", result.best_cost}};
    out["stack"] = stack_json;
    const std::vector<int> zeros(static_cast<std::size_t>(n), 0);
    out["fom_all_zero"] = design.fom(zeros);
    if (!p.stack_out.empty()) vqoa::io::write_json(p.stack_out, stack_json);
    if (!p.transmission_out.empty()) {
        std::ofstream csv(p.transmission_out);
        if (!csv) throw std::runtime_error("cannot write " + p.transmission_out);
        const auto t = design.transmission(result.best_assignment);
        csv.precision(12);
        csv << "wavelength_nm,transmittance,solar\n";
        for (std::size_t i = 0; i < design.grid.size(); ++i)
            csv << design.grid[i] << ',' << t[i] << ',' << design.solar.at(design.grid[i]) << '\n';
    }
    if (!f.out.empty()) emit_json(f.out, out);
    std::printf("best_fom %.12g\n", result.best_cost);
    for (const auto& layer : stack.layers) std::printf("  %s %.3f nm\n", layer.material->name().c_str(), layer.thickness_nm);
    if (f.out.empty()) std::cout << out.dump(2) << '\n';
    return kExitOk;
}

int cmd_bench(const std::string& suite, const std::string& sizes, const vqoa::BenchOptions& options,
              const std::string& out) {
    const auto& suites = vqoa::bench_suites();
    if (std::find(suites.begin(), suites.end(), suite) == suites.end())
        throw UsageError("unknown bench suite '" + suite + "'");
    const auto ns = parse_sizes(sizes);
    echo_config("bench", {{"suite", suite},
                          {"sizes", ns},
                          {"repeats", options.repeats},
                          {"seed", options.seed},
                          {"replicas", options.replicas},
                          {"workers", options.workers}});
    const std::string csv = vqoa::io::bench_csv(vqoa::bench(suite, ns, options));
    if (out.empty()) {
        std::cout << csv;
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << csv;
    }
    return kExitOk;
}

int cmd_report(const std::string& in, const std::string& out) {
    echo_config("report", {{"in", in}, {"out", out}});
    const json j = vqoa::io::read_json(in);
    if (!j.is_object() || !j.contains("replicas") || !j.contains("trace_files"))
        throw vqoa::io::FormatError(in + ": not a result file");
    std::ostringstream csv;
    csv << "replica,iter,cost,best_cost,decoded_cost\n";
    for (const auto& path_j : j.at("trace_files")) {
        const auto path = path_j.get<std::string>();
        std::cout << path << '\n';
        const auto name = fs::path(path).stem().string();
        const auto pos = name.rfind(".replica");
        if (pos == std::string::npos) throw vqoa::io::FormatError(path + ": unexpected trace file name");
        const std::string replica = name.substr(pos + 8);
        std::ifstream f(path);
        if (!f) throw vqoa::io::FormatError("cannot read " + path);
        std::string line;
        std::getline(f, line);
        if (line != "iter,cost,best_cost,decoded_cost") throw vqoa::io::FormatError(path + ": bad trace header");
        while (std::getline(f, line))
            if (!line.empty()) csv << replica << ',' << line << '\n';
    }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(out);
        if (!f) throw std::runtime_error("cannot write " + out);
        f << csv.str();
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vqoa: entanglement-free variational optimizer"};
    app.require_subcommand(1);

    std::string kind, out, problem_path, reference_path, tsp_path, ham_path;
    int n = 12, k = 2, arity = 2, cities = 5;
    std::uint64_t seed = 1;
    bool oracle = false;

    auto* gen = app.add_subcommand("gen", "generate a problem instance");
    gen->add_option("kind", kind, "qubo, maxcut, tsp, hobo or nary")->required();
    gen->add_option("--n", n)->capture_default_str();
    gen->add_option("--k", k, "interaction order")->capture_default_str();
    gen->add_option("--N", arity, "labels per variable")->capture_default_str();
    gen->add_option("--cities", cities)->capture_default_str();
    gen->add_option("--seed", seed)->capture_default_str();
    gen->add_option("-o,--out", out, "problem JSON (stdout if omitted)");

    SolverFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "run best-of-R replicas on a problem");
    solve->add_option("--problem", problem_path)->required();
    solve->add_option("--reference", reference_path, "JSON with 'optimum' (e.g. brute output)");
    solve->add_flag("--oracle", oracle, "compute the reference by exhaustive search");
    solve_flags.add_to(solve, true);

    int brute_workers = vqoa::default_workers();
    auto* brute = app.add_subcommand("brute", "exhaustive reference solution");
    brute->add_option("--problem", problem_path);
    brute->add_option("--tsp", tsp_path);
    brute->add_option("--hamiltonian", ham_path);
    brute->add_option("--workers", brute_workers)->capture_default_str();
    brute->add_option("-o,--out", out);

    SolverFlags chem_flags;
    auto* chem = app.add_subcommand("chem", "minimize a Pauli-sum energy");
    chem->add_option("--hamiltonian", ham_path)->required();
    chem_flags.add_to(chem, false);

    SolverFlags photonic_flags;
    PhotonicFlags pf;
    auto* photonic = app.add_subcommand("photonic", "design a layered window stack");
    photonic->add_option("--layers", pf.layers)->capture_default_str();
    photonic->add_option("--materials", pf.materials, "directory of <name>.csv tables")->capture_default_str();
    photonic->add_option("--palette", pf.palette, "four material names, code order")->capture_default_str();
    photonic->add_option("--spectrum", pf.spectrum, "solar irradiance CSV (flat if omitted)");
    photonic->add_option("--visible", pf.visible, "lo:hi in nm")->capture_default_str();
    photonic->add_option("--total-thickness", pf.total_thickness, "nm")->capture_default_str();
    photonic->add_option("--exit-index", pf.exit_index)->capture_default_str();
    photonic->add_option("--cap-index", pf.cap_index, "constant index of an incidence-side cap layer");
    photonic->add_option("--cap-thickness", pf.cap_thickness, "cap thickness in nm (0 = no cap)");
    photonic->add_option("--stack-out", pf.stack_out, "decoded stack JSON");
    photonic->add_option("--transmission-out", pf.transmission_out, "per-wavelength transmission CSV");
    photonic_flags.add_to(photonic, false);

    std::string suite, sizes = "8,16,32,64";
    vqoa::BenchOptions bench_options;
    bench_options.workers = vqoa::default_workers();
    auto* bench = app.add_subcommand("bench", "timing suites");
    bench->add_option("suite", suite, "eval_scaling, partition_scaling, worker_scaling or brute_vs_dvqoa")->required();
    bench->add_option("--n", sizes, "sizes: 8,16 or 8..16 or 64..1024:64")->capture_default_str();
    bench->add_option("--repeats", bench_options.repeats)->capture_default_str();
    bench->add_option("--seed", bench_options.seed)->capture_default_str();
    bench->add_option("--replicas", bench_options.replicas)->capture_default_str();
    bench->add_option("--workers", bench_options.workers)->capture_default_str();
    bench->add_option("-o,--out", out, "CSV (stdout if omitted)");

    std::string report_in;
    auto* report = app.add_subcommand("report", "merge a result's traces into one CSV");
    report->add_option("--in", report_in)->required();
    report->add_option("-o,--out", out, "CSV (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_gen(kind, n, k, arity, cities, seed, out);
        if (solve->parsed()) return cmd_solve(problem_path, reference_path, oracle, solve_flags);
        if (brute->parsed()) return cmd_brute(problem_path, tsp_path, ham_path, brute_workers, out);
        if (chem->parsed()) return cmd_chem(ham_path, chem_flags);
        if (photonic->parsed()) return cmd_photonic(pf, photonic_flags);
        if (bench->parsed()) return cmd_bench(suite, sizes, bench_options, out);
        if (report->parsed()) return cmd_report(report_in, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid argument: " << e.what() << '\n';
        return kExitUsage;
    } catch (const vqoa::io::FormatError& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const vqoa::ParseError& e) {
        std::cerr << "bad input: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
