// symcol: generators, automorphism queries, distinguishing colourings and
// corpus scans over graph6 input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gen_spec.hpp"
#include "symcol/aut_search.hpp"
#include "symcol/distinguishing.hpp"
#include "symcol/errors.hpp"
#include "symcol/graph6.hpp"
#include "symcol/layered.hpp"
#include "symcol/report.hpp"

using namespace symcol;

namespace {

enum Exit : int {
    kOk = 0,
    kInput = 2,
    kNotColourable = 3,
    kBudget = 4,
    kVerification = 5,
};

struct InputSource {
    std::string graph6;
    std::string file;
    std::string gen;
};

struct RunConfig {
    InputSource input;
    std::optional<int> root;
    std::uint64_t budget = SearchBudget{}.max_assignments;
    bool verify = false;
    std::uint64_t seed = 0;
    std::string format = "json";
    int max_colours = 4;
    int jobs = 1;
    int max_n = 10;
    int max_order = 16;
    std::string report_in;
};

void add_input(CLI::App* cmd, InputSource& in) {
    auto* g6 = cmd->add_option("--graph6", in.graph6, "Inline graph6 string");
    auto* file = cmd->add_option("--input,-i", in.file, "File of graph6 lines (default: stdin)");
    auto* gen = cmd->add_option("--gen", in.gen, "Generator spec, e.g. \"cycle 5\"");
    g6->excludes(file)->excludes(gen);
    file->excludes(gen);
}

void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
}

SearchBudget budget_of(const RunConfig& cfg) {
    SearchBudget b;
    b.max_assignments = cfg.budget;
    b.seed = cfg.seed ^ SearchBudget{}.seed;
    return b;
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> out;
    for (std::string line; std::getline(in, line);) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.starts_with(">>graph6<<")) continue;
        out.push_back(line);
    }
    return out;
}

std::vector<std::string> lines_from(const std::string& file) {
    if (file.empty() || file == "-") return read_lines(std::cin);
    std::ifstream in(file);
    if (!in) throw InputError("cannot open " + file);
    return read_lines(in);
}

std::vector<Graph> load_graphs(const RunConfig& cfg) {
    if (!cfg.input.graph6.empty()) return {parse_graph6(cfg.input.graph6)};
    if (!cfg.input.gen.empty()) return cli::generate(cli::split_spec(cfg.input.gen), cfg.seed);
    std::vector<Graph> out;
    for (const auto& line : lines_from(cfg.input.file)) out.push_back(parse_graph6(line));
    return out;
}

Graph load_one(const RunConfig& cfg) {
    auto graphs = load_graphs(cfg);
    if (graphs.size() != 1)
        throw InputError("expected exactly one graph, got " + std::to_string(graphs.size()));
    return std::move(graphs.front());
}

int cmd_gen(const std::vector<std::string>& spec, const RunConfig& cfg) {
    for (const auto& g : cli::generate(spec, cfg.seed)) std::cout << serialize_graph6(g) << '\n';
    return kOk;
}

int cmd_colour(const RunConfig& cfg) {
    const Graph g = load_one(cfg);
    ColourOptions options;
    options.root = cfg.root;
    options.verify = cfg.verify;
    options.budget = budget_of(cfg);
    const auto result = colour_regular(g, options);

    if (cfg.format == "dot") {
        std::cout << to_dot(g, &result.colouring);
        return kOk;
    }
    const bool star = satisfies_star(g, result.colouring);
    const bool distinguishing = is_distinguishing(g, result.colouring);
    if (cfg.format == "text") {
        std::cout << "method: " << result.method << '\n'
                  << "colours_used: " << result.colouring.colours_used() << '\n'
                  << "star: " << (star ? "true" : "false") << '\n'
                  << "distinguishing: " << (distinguishing ? "true" : "false") << '\n'
                  << "fallback_layers: " << result.stats.fallback_layers << '/' << result.stats.layers << '\n'
                  << colouring_to_text(g, result.colouring);
        return kOk;
    }
    json out = {{"graph6", serialize_graph6(g)},
                {"n", g.order()},
                {"degree", *regularity(g)},
                {"method", result.method},
                {"colours_used", result.colouring.colours_used()},
                {"star", star},
                {"distinguishing", distinguishing},
                {"colouring", colouring_to_json(g, result.colouring)},
                {"audit", audit_to_json(g, result.audit)},
                {"stats", stats_to_json(result.stats)}};
    if (cfg.verify) {
        out["root"] = result.layering.layers.empty() ? json(nullptr) : json(result.layering.root);
        out["verified"] = distinguishing && star && result.colouring.colours_used() <= kColourCount &&
                          result.stats.violations == 0;
    }
    std::cout << out.dump() << '\n';
    if (cfg.verify && !out["verified"].get<bool>()) return kVerification;
    return kOk;
}

int cmd_dprime(const RunConfig& cfg) {
    const Graph g = load_one(cfg);
    const auto result = distinguishing_index(g, cfg.max_colours, budget_of(cfg));
    if (cfg.format == "text") {
        if (result.not_distinguishable) std::cout << "NotDistinguishable\n";
        else std::cout << result.value << '\n';
    } else if (cfg.format == "dot") {
        const auto c = result.witness_colouring();
        std::cout << to_dot(g, c ? &*c : nullptr);
    } else {
        json out = {{"graph6", serialize_graph6(g)}, {"n", g.order()}};
        if (result.not_distinguishable) {
            out["dprime"] = "NotDistinguishable";
        } else {
            out["dprime"] = result.value;
            out["witness_colouring"] = labels_to_json(g, result.witness);
        }
        std::cout << out.dump() << '\n';
    }
    return result.not_distinguishable ? kNotColourable : kOk;
}

// Re-derives every status from the recorded D' values, so a report can be
// audited without repeating the searches. Witnesses are re-verified.
int reevaluate(const RunConfig& cfg) {
    bool unexpected = false;
    for (const auto& line : lines_from(cfg.report_in)) {
        ScanEntry e = scan_entry_from_jsonl(line);
        const Graph g = parse_graph6(e.graph6);
        if (!e.dprime) {
            if (e.status != ScanStatus::BudgetExceeded && e.status != ScanStatus::InputError) unexpected = true;
        } else {
            e.status = classify_scan_result(g, *e.dprime);
            const auto& d = *e.dprime;
            if (!d.not_distinguishable && !d.witness.empty() && !is_distinguishing_labels(g, d.witness)) {
                e.status = ScanStatus::UnexpectedException;
                e.note = "witness is not distinguishing";
            } else if (e.status != ScanStatus::Ok) {
                e.note = known_exception_name(g).value_or("");
            }
        }
        if (e.status == ScanStatus::UnexpectedException) unexpected = true;
        std::cout << scan_entry_to_jsonl(e) << '\n';
    }
    return unexpected ? kVerification : kOk;
}

int cmd_scan(const RunConfig& cfg) {
    if (!cfg.report_in.empty()) return reevaluate(cfg);
    const auto corpus = load_graphs(cfg);
    ScanOptions options;
    options.max_n = cfg.max_n;
    options.max_colours = cfg.max_colours;
    options.jobs = cfg.jobs;
    options.budget = budget_of(cfg);
    const auto report = scan_conjecture(corpus, options, [](const ScanEntry& e) {
        std::cout << scan_entry_to_jsonl(e) << '\n' << std::flush;
    });
    std::size_t budget = 0;
    for (const auto& e : report.entries) budget += e.status == ScanStatus::BudgetExceeded;
    std::cerr << "scanned " << report.entries.size() << " graphs; D' > 2:";
    for (const auto& name : report.exception_names()) std::cerr << ' ' << name;
    std::cerr << '\n';
    if (report.has_unexpected()) {
        std::cerr << "unexpected exception found\n";
        return kVerification;
    }
    return budget > 0 ? kBudget : kOk;
}

int cmd_aut(const RunConfig& cfg) {
    const Graph g = load_one(cfg);
    if (g.order() > cfg.max_order)
        throw InputError("order " + std::to_string(g.order()) + " exceeds --max-order " +
                         std::to_string(cfg.max_order));
    VertexSet all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all[v] = v;
    const auto chain = subgroup_chain(g, {});
    json out = {{"graph6", serialize_graph6(g)}, {"n", g.order()}, {"order", chain.order()}};
    json gens = json::array();
    for (const auto& p : chain.generators) gens.push_back(permutation_to_json(p));
    out["generators"] = gens;
    out["orbits"] = vertex_orbits(g, chain.generators, all);
    if (cfg.root) {
        const auto stab = stabiliser_generators(g, *cfg.root);
        AutConstraint fix;
        fix.pointwise_fixed = {*cfg.root};
        json sg = json::array();
        for (const auto& p : stab) sg.push_back(permutation_to_json(p));
        out["root"] = *cfg.root;
        out["stabiliser_order"] = subgroup_chain(g, fix).order();
        out["stabiliser_generators"] = sg;
        out["stabiliser_orbits"] = vertex_orbits(g, stab, all);
    }
    if (cfg.format == "text") {
        std::cout << "order: " << out["order"] << '\n';
        for (const auto& key : {"orbits", "stabiliser_orbits"}) {
            if (!out.contains(key)) continue;
            std::cout << key << ':';
            for (const auto& orbit : out[key]) std::cout << ' ' << orbit.dump();
            std::cout << '\n';
        }
    } else if (cfg.format == "dot") {
        std::cout << to_dot(g);
    } else {
        std::cout << out.dump() << '\n';
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distinguishing edge colourings of regular graphs"};
    app.require_subcommand(1);
    RunConfig cfg;
    std::vector<std::string> gen_spec;

    auto* gen = app.add_subcommand("gen", "Print graph6 for a generator spec");
    gen->add_option("spec", gen_spec, "Generator and parameters")->required();
    gen->add_option("--seed", cfg.seed, "Seed for random generators");

    auto* colour = app.add_subcommand("colour", "Distinguishing 3-colouring of a connected regular graph");
    add_input(colour, cfg.input);
    colour->add_option("--root", cfg.root, "Root vertex of the layering")->check(CLI::NonNegativeNumber);
    colour->add_flag("--verify", cfg.verify, "Check step properties after every layer");
    colour->add_option("--budget", cfg.budget, "Assignment budget for fallback searches")->check(CLI::PositiveNumber);
    colour->add_option("--seed", cfg.seed, "Seed for random generators and probes");
    add_format(colour, cfg.format);

    auto* dprime = app.add_subcommand("dprime", "Exact distinguishing index");
    add_input(dprime, cfg.input);
    dprime->add_option("--max-colours", cfg.max_colours, "Largest colour count tried")->check(CLI::Range(1, 64));
    dprime->add_option("--budget", cfg.budget, "Assignment budget per colour count")->check(CLI::PositiveNumber);
    dprime->add_option("--seed", cfg.seed, "Seed for random generators and probes");
    add_format(dprime, cfg.format);

    auto* scan = app.add_subcommand("scan", "JSONL D' report over a graph6 corpus");
    add_input(scan, cfg.input);
    scan->add_option("--report-in", cfg.report_in, "Re-evaluate an existing report instead of searching");
    scan->add_option("--max-n", cfg.max_n, "Largest order accepted")->check(CLI::PositiveNumber);
    scan->add_option("--max-colours", cfg.max_colours, "Largest colour count tried")->check(CLI::Range(1, 64));
    scan->add_option("--jobs,-j", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    scan->add_option("--budget", cfg.budget, "Assignment budget per graph")->check(CLI::PositiveNumber);
    scan->add_option("--seed", cfg.seed, "Seed for random generators and probes");

    auto* aut = app.add_subcommand("aut", "Automorphism group order, generators and orbits");
    add_input(aut, cfg.input);
    aut->add_option("--root", cfg.root, "Also report Aut(G, root)")->check(CLI::NonNegativeNumber);
    aut->add_option("--max-order", cfg.max_order, "Refuse graphs with more vertices")->check(CLI::PositiveNumber);
    add_format(aut, cfg.format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*gen) return cmd_gen(gen_spec, cfg);
        if (*colour) return cmd_colour(cfg);
        if (*dprime) return cmd_dprime(cfg);
        if (*scan) return cmd_scan(cfg);
        if (*aut) return cmd_aut(cfg);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    } catch (const NotColourable& e) {
        std::cerr << "not colourable: " << e.what() << '\n';
        return kNotColourable;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const ColourLimitExceeded& e) {
        std::cerr << "colour limit exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return kVerification;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInput;
    }
    return kOk;
}
