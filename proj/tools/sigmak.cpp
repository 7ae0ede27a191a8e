// Command-line front end: distances, double distances, the SAT reduction,
// structural checks and random instance generation.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "sigmak/abg.hpp"
#include "sigmak/bp_graph.hpp"
#include "sigmak/error.hpp"
#include "sigmak/genome.hpp"
#include "sigmak/reduction.hpp"
#include "sigmak/sat.hpp"
#include "sigmak/solver.hpp"

namespace fs = std::filesystem;
using namespace sigmak;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error("cannot write " + path.string());
}

Genome load_genome(const std::string& path) {
    try {
        return parse_genome(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

SatInstance load_cnf(const std::string& path) {
    try {
        return parse_cnf(read_file(path));
    } catch (const ParseError& e) {
        throw Error(path + ": " + e.what());
    }
}

Shape parse_shape(const std::string& text) {
    if (text == "circular") return Shape::Circular;
    if (text == "linear") return Shape::Linear;
    throw InvalidInput("unknown shape '" + text + "' (expected circular or linear)");
}

int parse_reduction_k(const std::string& text) {
    const SigmaIndex k = SigmaIndex::parse(text);
    if (k.is_infinite()) throw InvalidInput("the reduction needs a finite k");
    return k.k();
}

std::vector<bool> parse_values(const std::string& text) {
    std::vector<bool> values;
    std::istringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item == "T" || item == "t" || item == "1" || item == "true") values.push_back(true);
        else if (item == "F" || item == "f" || item == "0" || item == "false") values.push_back(false);
        else throw InvalidInput("assignment entries must be T or F, got '" + item + "'");
    }
    return values;
}

std::string format_values(const std::vector<bool>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) out += std::string(i ? "," : "") + (values[i] ? "T" : "F");
    return out;
}

// Original-variable values to normalized-variable values.
std::vector<bool> to_normalized(const Normalization& norm, const std::vector<bool>& original) {
    if (original.size() != norm.renamed.size())
        throw InvalidInput("assignment has " + std::to_string(original.size()) + " values for " +
                           std::to_string(norm.renamed.size()) + " variables");
    std::vector<bool> values(norm.instance.variable_count);
    for (std::size_t v = 0; v < original.size(); ++v)
        if (norm.renamed[v] > 0) values[norm.renamed[v] - 1] = original[v] != norm.flipped[v];
    return values;
}

nlohmann::json reduction_meta(const Reduction& r, const Normalization& norm) {
    using nlohmann::json;
    json gadgets = json::object();
    json variables = json::array();
    for (const VariableGadget& v : r.variables)
        variables.push_back({{"variable", v.variable}, {"three_occurrences", v.three_occurrences}, {"squares", v.squares}});
    json clauses = json::array();
    for (const ClauseGadget& c : r.clauses)
        clauses.push_back({{"clause", c.clause + 1}, {"size", c.theta.size()}, {"squares", c.squares}});
    json connectors = json::array();
    for (const ConnectorGadget& w : r.connectors)
        connectors.push_back(
            {{"clause", w.clause + 1}, {"position", w.position + 1}, {"literal", w.literal}, {"squares", w.squares}});
    json cycles = json::array();
    for (const ExpectedCycle& e : r.expected_cycles()) cycles.push_back(e.name);
    return {
        {"k", r.k},
        {"shape", r.shape == Shape::Circular ? "circular" : "linear"},
        {"p", r.p},
        {"ell", r.ell},
        {"m", r.extensions.size()},
        {"nu", r.graph.vertex_count()},
        {"isolated", r.graph.isolated_count()},
        {"a_star", r.graph.square_count()},
        {"bound", r.bound.twice() / 2},
        {"instance",
         {{"variables", r.stats.variables},
          {"ttf_variables", r.stats.ttf_variables},
          {"tf_variables", r.stats.tf_variables},
          {"clauses", r.stats.clauses},
          {"two_clauses", r.stats.two_clauses},
          {"three_clauses", r.stats.three_clauses},
          {"occurrences", r.stats.occurrences}}},
        {"normalization", {{"renamed", norm.renamed}, {"flipped", norm.flipped}}},
        {"gadgets",
         {{"variables", variables},
          {"clauses", clauses},
          {"connectors", connectors},
          {"flowers", r.flowers.size()},
          {"extensions", r.extensions.size()}}},
        {"expected_cycles", cycles},
    };
}

struct Options {
    std::string k = "2";
    std::string engine = "naive";
    std::string shape = "circular";
    std::string assignment;
    std::string out;
    std::string tau;
    std::uint64_t seed = 1;
    std::uint64_t budget_nodes = 0;
    std::uint64_t budget_ms = 0;
    unsigned threads = 1;
    int n = 5;
    int linear = 1;
    int circular = 0;
    int ops = 3;
    int variables = 6;
    int p = 0;
    bool wgd = false;
    std::vector<std::string> files;
};

int run_dist(const Options& o) {
    const Genome a = load_genome(o.files.at(0));
    const Genome b = load_genome(o.files.at(1));
    std::cout << distance(a, b, SigmaIndex::parse(o.k)) << '\n';
    return 0;
}

int run_dd(const Options& o) {
    const Genome s = load_genome(o.files.at(0));
    const Genome d = load_genome(o.files.at(1));
    SolveBudget budget;
    budget.max_nodes = o.budget_nodes;
    budget.max_ms = o.budget_ms;
    budget.threads = o.threads;
    const SolveResult r = dd(s, d, SigmaIndex::parse(o.k), parse_engine(o.engine), budget);
    std::cout << r.dd << '\n';
    std::cout << "tau " << (r.engine == Engine::Oracle ? "-" : format_resolution(r.tau)) << '\n';
    std::cout << "optimal " << (r.optimal ? "yes" : "no") << '\n';
    return 0;
}

int run_reduce(const Options& o) {
    const Normalization norm = normalize(load_cnf(o.files.at(0)));
    const Reduction r = build_reduction(norm.instance, parse_reduction_k(o.k), parse_shape(o.shape));
    std::cout << "variables " << r.stats.variables << '\n';
    std::cout << "clauses " << r.stats.clauses << '\n';
    std::cout << "occurrences " << r.stats.occurrences << '\n';
    std::cout << "vertices " << r.graph.vertex_count() << '\n';
    std::cout << "squares " << r.graph.square_count() << '\n';
    std::cout << "isolated " << r.graph.isolated_count() << '\n';
    std::cout << "bound " << r.bound << '\n';
    const SigmaIndex k = SigmaIndex::finite(r.k);
    if (!o.assignment.empty()) {
        Assignment a;
        a.values = to_normalized(norm, parse_values(o.assignment));
        std::cout << "assignment-score " << score(r.graph, assignment_to_solution(r, a), k) << '\n';
    }
    if (!o.engine.empty() && o.engine != "none") {
        if (parse_engine(o.engine) != Engine::Mis) throw InvalidInput("reduce only runs the mis engine");
        const SolveResult m = ss_mis(r.graph, r.k, {o.budget_nodes, o.budget_ms});
        std::cout << "mis-score " << m.score << '\n';
        std::cout << "optimal " << (m.optimal ? "yes" : "no") << '\n';
        const std::optional<Assignment> a = solution_to_assignment(r, m.tau);
        std::cout << "assignment " << (a ? format_values(norm.to_original(a->values)) : "none") << '\n';
    }
    if (!o.out.empty()) {
        const fs::path dir(o.out);
        fs::create_directories(dir);
        const ExtractedGenomes g = extract_genomes(r);
        write_file(dir / "S.genome", format_genome(g.s) + "\n");
        write_file(dir / "D.genome", format_genome(g.d) + "\n");
        write_file(dir / "abg.dot", to_dot(r.graph));
        write_file(dir / "meta.json", reduction_meta(r, norm).dump(2) + "\n");
    }
    return 0;
}

int run_verify_flower(const Options& o) {
    int failures = 0;
    const int lo = o.p ? o.p : 3;
    const int hi = o.p ? o.p : 10;
    for (int p = lo; p <= hi; ++p) {
        const FlowerReport r = verify_flower(p);
        std::cout << "p " << p << ": " << r.resolutions << " resolutions, " << r.violations.size() << " violations\n";
        for (const std::string& v : r.violations) std::cout << "violation: " << v << '\n';
        failures += !r.ok();
    }
    return failures ? 1 : 0;
}

int run_verify_reduction(const Options& o) {
    const Normalization norm = normalize(load_cnf(o.files.at(0)));
    const Reduction r = build_reduction(norm.instance, parse_reduction_k(o.k), parse_shape(o.shape));
    const StructureReport rep = verify_structure(r);
    std::cout << "short-candidates " << rep.short_candidates << '\n';
    std::cout << "k-cycles " << rep.k_cycles << '\n';
    std::cout << "unexpected " << rep.unexpected_k_cycles << '\n';
    std::cout << "missing " << rep.missing_k_cycles << '\n';
    std::cout << "degree-violations " << rep.degree_violations << '\n';
    std::cout << "violations " << rep.violations.size() << '\n';
    for (const std::string& v : rep.violations) std::cout << "violation: " << v << '\n';
    return rep.ok() ? 0 : 1;
}

void emit(const Options& o, const std::string& name, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    const fs::path dir(o.out);
    fs::create_directories(dir);
    write_file(dir / name, text);
}

int run_gen_genome(const Options& o) {
    emit(o, "genome.genome", format_genome(random_genome(o.n, o.linear, o.circular, o.seed)) + "\n");
    return 0;
}

int run_gen_pair(const Options& o) {
    const GenomePair pair = random_cognate_pair(o.n, o.wgd, o.ops, o.seed);
    if (o.out.empty()) {
        std::cout << "# first\n" << format_genome(pair.first) << "\n# second\n" << format_genome(pair.second) << '\n';
    } else {
        emit(o, "S.genome", format_genome(pair.first) + "\n");
        emit(o, "D.genome", format_genome(pair.second) + "\n");
    }
    return 0;
}

int run_gen_cnf(const Options& o) {
    emit(o, "formula.cnf", format_cnf(random_23sat(o.variables, o.seed)));
    return 0;
}

int run_export_dot(const Options& o) {
    const Genome a = load_genome(o.files.at(0));
    const Genome b = load_genome(o.files.at(1));
    const PairClassification cls = classify_pair(a, b);
    std::string text;
    if (cls.kind == PairClass::Canonical) {
        text = to_dot(build_breakpoint_graph(a, b));
    } else if (cls.kind == PairClass::OneTwoCognate) {
        const Genome& s = cls.first_is_singular ? a : b;
        const Genome& d = cls.first_is_singular ? b : a;
        const AmbiguousBreakpointGraph g = build_abg(s, singularize(d));
        std::optional<Resolution> tau;
        if (!o.tau.empty()) {
            tau = parse_resolution(o.tau);
            if (tau->size() != g.square_count())
                throw InvalidInput("resolution has " + std::to_string(tau->size()) + " bits for " +
                                   std::to_string(g.square_count()) + " squares");
        }
        text = to_dot(g, tau);
    } else {
        throw InvalidInput("export-dot needs a canonical or a [1.2]-cognate pair");
    }
    emit(o, "graph.dot", text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Genome rearrangement distances with bounded cycle length"};
    app.require_subcommand(1);
    Options o;
    std::function<int()> action;

    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "cycle length bound: even integer or inf")->capture_default_str(); };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget-nodes", o.budget_nodes, "search node limit (0: none)");
        sub->add_option("--budget-ms", o.budget_ms, "wall-clock limit in ms (0: none)");
    };

    CLI::App* dist = app.add_subcommand("dist", "distance d_k of two singular genomes");
    add_k(dist);
    dist->add_option("genomes", o.files, "two genome files")->required()->expected(2);
    dist->callback([&] { action = [&] { return run_dist(o); }; });

    CLI::App* ddc = app.add_subcommand("dd", "double distance of a singular and a duplicated genome");
    add_k(ddc);
    ddc->add_option("--engine", o.engine, "naive, mis, greedy2 or oracle")->capture_default_str();
    ddc->add_option("--threads", o.threads, "worker threads for the naive engine")->capture_default_str();
    add_budget(ddc);
    ddc->add_option("genomes", o.files, "S and D genome files")->required()->expected(2);
    ddc->callback([&] { action = [&] { return run_dd(o); }; });

    CLI::App* reduce = app.add_subcommand("reduce", "build the reduction graph of a (2,3)-SAT formula");
    reduce->add_option("--k", o.k, "even k >= 8")->required();
    reduce->add_option("--shape", o.shape, "circular or linear")->capture_default_str();
    reduce->add_option("--assignment", o.assignment, "comma list of T/F per original variable");
    reduce->add_option("--engine", o.engine, "mis to solve the reduction graph");
    reduce->add_option("--out", o.out, "directory for S.genome, D.genome, abg.dot and meta.json");
    add_budget(reduce);
    reduce->add_option("formula", o.files, "DIMACS CNF file")->required()->expected(1);
    reduce->callback([&] {
        if (reduce->count("--engine") == 0) o.engine = "none";
        action = [&] { return run_reduce(o); };
    });

    CLI::App* verify = app.add_subcommand("verify", "structural checks");
    verify->require_subcommand(1);
    CLI::App* vflower = verify->add_subcommand("flower", "parity law of closed p-flowers");
    vflower->add_option("--p", o.p, "flower size (default: every p from 3 to 10)")->check(CLI::Range(3, 10));
    vflower->callback([&] { action = [&] { return run_verify_flower(o); }; });
    CLI::App* vreduction = verify->add_subcommand("reduction", "cycle inventory of a reduction graph");
    vreduction->add_option("--k", o.k, "even k >= 8")->required();
    vreduction->add_option("--shape", o.shape, "circular or linear")->capture_default_str();
    vreduction->add_option("formula", o.files, "DIMACS CNF file")->required()->expected(1);
    vreduction->callback([&] { action = [&] { return run_verify_reduction(o); }; });

    CLI::App* gen = app.add_subcommand("gen", "random instances");
    gen->require_subcommand(1);
    auto add_gen_common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
        sub->add_option("--out", o.out, "output directory");
    };
    CLI::App* ggenome = gen->add_subcommand("genome", "random singular genome");
    add_gen_common(ggenome);
    ggenome->add_option("--n", o.n, "gene count")->capture_default_str();
    ggenome->add_option("--linear", o.linear, "linear chromosomes")->capture_default_str();
    ggenome->add_option("--circular", o.circular, "circular chromosomes")->capture_default_str();
    ggenome->callback([&] { action = [&] { return run_gen_genome(o); }; });
    CLI::App* gpair = gen->add_subcommand("pair", "random genome pair: canonical, or [1.2]-cognate with --wgd");
    add_gen_common(gpair);
    gpair->add_option("--n", o.n, "gene count")->capture_default_str();
    gpair->add_option("--ops", o.ops, "random DCJ operations applied to D")->capture_default_str();
    gpair->add_flag("--wgd", o.wgd, "start D from a doubling of S");
    gpair->callback([&] { action = [&] { return run_gen_pair(o); }; });
    CLI::App* gcnf = gen->add_subcommand("cnf", "random normalized (2,3)-SAT formula");
    add_gen_common(gcnf);
    gcnf->add_option("--variables", o.variables, "variable count")->capture_default_str();
    gcnf->callback([&] { action = [&] { return run_gen_cnf(o); }; });

    CLI::App* dot = app.add_subcommand("export-dot", "Graphviz text of a breakpoint or ambiguous breakpoint graph");
    dot->add_option("--tau", o.tau, "resolution bits; only the selected square edges are drawn");
    dot->add_option("--out", o.out, "output directory (writes graph.dot)");
    dot->add_option("genomes", o.files, "two genome files")->required()->expected(2);
    dot->callback([&] { action = [&] { return run_export_dot(o); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
