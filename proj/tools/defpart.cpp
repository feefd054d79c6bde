#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "defpart/coloring.hpp"
#include "defpart/engine.hpp"
#include "defpart/generate.hpp"
#include "defpart/io.hpp"
#include "defpart/report.hpp"
#include "defpart/verify.hpp"

namespace {

using defpart::json;

struct InputOpts {
    std::string gen;
    std::string input;
    std::string format = "dimacs";
    std::uint64_t seed = 0;
};

void add_input_opts(CLI::App* cmd, InputOpts& in) {
    cmd->add_option("--gen", in.gen,
                    "generator spec: gnp:n,p cycle:n path:n complete:n petersen regular:n,r "
                    "trifree:n,p");
    cmd->add_option("--input,-i", in.input, "graph file path");
    cmd->add_option("--format", in.format, "input format: dimacs|edgelist")
        ->check(CLI::IsMember({"dimacs", "edgelist"}));
    cmd->add_option("--seed", in.seed, "generator seed (default 0)");
}

defpart::Graph load_input(const InputOpts& in) {
    if (in.gen.empty() == in.input.empty())
        throw defpart::BadParameter("exactly one of --gen and --input is required");
    if (!in.gen.empty()) return defpart::generate_from_spec(in.gen, in.seed);
    auto fmt = in.format == "dimacs" ? defpart::GraphFormat::dimacs
                                     : defpart::GraphFormat::edgelist;
    return defpart::load_graph_file(in.input, fmt);
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string tok;
    std::istringstream in(text);
    while (std::getline(in, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoi(tok, &pos));
            if (pos != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw defpart::BadParameter("bad integer list: " + text);
        }
    }
    if (out.empty()) throw defpart::BadParameter("empty integer list");
    return out;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw defpart::BadParameter("cannot write file: " + path);
    out << text;
}

void dump_trace(const defpart::MoveTrace& trace) {
    for (const auto& e : trace.entries) std::cerr << defpart::trace_entry_json(e).dump() << "\n";
}

// Exit contract: 0 ok, 1 parse/usage, 2 hypothesis, 3 internal
// invariant, 4 verification failure, 5 size guard.
int guarded(const std::function<int()>& body, bool trace_on_error = false) {
    try {
        return body();
    } catch (const defpart::ChainOverflow& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (trace_on_error) dump_trace(e.trace);
        return 3;
    } catch (const defpart::InvariantViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (trace_on_error) dump_trace(e.trace);
        return 3;
    } catch (const defpart::HypothesisNotMet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const defpart::NotCliqueFree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const defpart::NotTriangleFree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const defpart::SizeGuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 5;
    } catch (const defpart::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const defpart::BadParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const defpart::GenerationFailed& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const defpart::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

struct PartitionOpts {
    InputOpts in;
    int k = 0;
    std::string r;
    std::string mode = "main";
    bool trace = false;
    long long chain_cap = 0;
    std::string output_format = "json";
    std::string out_path;
};

std::string partition_text(const defpart::Instance& inst, const defpart::SolveResult& res,
                           bool valid) {
    std::ostringstream out;
    auto pot = defpart::potential(inst, res.partition);
    out << "n=" << inst.graph().n() << " m=" << inst.graph().m() << " k=" << inst.k()
        << " mode=" << (inst.mode() == defpart::Mode::main ? "main" : "lovasz")
        << " f=" << pot.f << " c=" << pot.c << " p=" << pot.p << " moves=" << res.trace.moves
        << " valid=" << (valid ? "true" : "false") << "\n";
    for (int i = 0; i < inst.k(); ++i) {
        out << "part " << i << ":";
        for (int v : res.partition.part_vertices(i)) out << " " << v;
        out << "\n";
    }
    return out.str();
}

int cmd_partition(const PartitionOpts& opt) {
    auto g = load_input(opt.in);
    auto r = parse_int_list(opt.r);
    if (opt.k != 0 && opt.k != static_cast<int>(r.size()))
        throw defpart::BadParameter("--k disagrees with the length of --r");
    auto mode = opt.mode == "lovasz" ? defpart::Mode::lovasz : defpart::Mode::main;
    auto inst = defpart::Instance::with_default_families(std::move(g), r, mode);

    defpart::SolveConfig cfg;
    cfg.record_trace = opt.trace;
    cfg.chain_cap = opt.chain_cap;
    auto res = defpart::solve(inst, opt.in.seed, cfg);

    auto report = defpart::verify_partition(inst, res.partition);
    if (!report.ok) {
        std::cerr << "error: solve output failed re-verification\n";
        std::cerr << defpart::validity_report_json(report).dump() << "\n";
        return 3;
    }
    if (opt.trace) dump_trace(res.trace);
    if (opt.output_format == "json")
        write_output(defpart::partition_report(inst, res, true).dump() + "\n", opt.out_path);
    else
        write_output(partition_text(inst, res, true), opt.out_path);
    return 0;
}

struct ColorOpts {
    InputOpts in;
    std::string plan = "kostochka";
    bool economical = true;
    std::string output_format = "json";
    std::string out_path;
};

int cmd_color(const ColorOpts& opt) {
    auto g = load_input(opt.in);
    defpart::ColoringResult result;
    if (opt.plan == "kostochka") {
        result = defpart::triangle_free_color(g, opt.economical);
    } else if (opt.plan.rfind("cliquefree:", 0) == 0) {
        int r = 0;
        try {
            r = std::stoi(opt.plan.substr(11));
        } catch (const std::exception&) {
            throw defpart::BadParameter("bad plan spec: " + opt.plan);
        }
        result = defpart::clique_free_color(g, r, opt.economical);
    } else {
        throw defpart::BadParameter("unknown plan: " + opt.plan);
    }
    bool proper = defpart::verify_coloring(g, result.colors);
    if (!proper) {
        std::cerr << "error: coloring failed re-verification\n";
        return 3;
    }
    if (opt.output_format == "json") {
        write_output(defpart::color_report(result, true).dump() + "\n", opt.out_path);
    } else {
        std::ostringstream out;
        out << "used=" << result.used << " bound=" << result.bound << " proper=true\n";
        write_output(out.str(), opt.out_path);
    }
    return 0;
}

struct VerifyOpts {
    InputOpts in;
    std::string partition_file;
};

int cmd_verify(const VerifyOpts& opt) {
    auto g = load_input(opt.in);
    std::ifstream f(opt.partition_file);
    if (!f) throw defpart::ParseError("cannot open file: " + opt.partition_file);
    json doc;
    try {
        doc = json::parse(f);
    } catch (const json::exception& e) {
        throw defpart::ParseError(std::string("partition file: ") + e.what());
    }

    try {
        if (doc.at("n").get<int>() != g.n() || doc.at("m").get<long long>() != g.m())
            throw defpart::ParseError("partition file does not match the graph");
        auto r = doc.at("r").get<std::vector<int>>();
        const int k = doc.at("k").get<int>();
        if (k != static_cast<int>(r.size()))
            throw defpart::ParseError("partition file: k disagrees with r");
        auto mode_s = doc.at("mode").get<std::string>();
        auto mode = mode_s == "lovasz" ? defpart::Mode::lovasz : defpart::Mode::main;
        auto parts = doc.at("parts").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(parts.size()) != k)
            throw defpart::ParseError("partition file: wrong number of parts");
        std::vector<int> assignment(g.n(), -1);
        for (int i = 0; i < k; ++i)
            for (int v : parts[i]) {
                if (v < 0 || v >= g.n() || assignment[v] != -1)
                    throw defpart::ParseError("partition file: not a partition of the vertices");
                assignment[v] = i;
            }
        for (int v = 0; v < g.n(); ++v)
            if (assignment[v] == -1)
                throw defpart::ParseError("partition file: vertex " + std::to_string(v) +
                                          " unassigned");

        auto inst = defpart::Instance::unchecked(std::move(g), r, mode);
        defpart::Partition p(inst.graph(), k, std::move(assignment));
        auto report = defpart::verify_partition(inst, p);
        std::cout << defpart::validity_report_json(report).dump() << "\n";
        return report.ok ? 0 : 4;
    } catch (const json::exception& e) {
        throw defpart::ParseError(std::string("partition file: ") + e.what());
    }
}

struct OracleOpts {
    InputOpts in;
    int k = 0;
    std::string r;
    std::string mode = "main";
};

int cmd_oracle(const OracleOpts& opt) {
    auto g = load_input(opt.in);
    auto r = parse_int_list(opt.r);
    if (opt.k != 0 && opt.k != static_cast<int>(r.size()))
        throw defpart::BadParameter("--k disagrees with the length of --r");
    auto mode = opt.mode == "lovasz" ? defpart::Mode::lovasz : defpart::Mode::main;
    auto inst = defpart::Instance::unchecked(std::move(g), r, mode);
    bool exists = defpart::oracle_partition_exists(inst);
    json out;
    out["n"] = inst.graph().n();
    out["k"] = inst.k();
    out["r"] = inst.targets();
    out["exists"] = exists;
    std::cout << out.dump() << "\n";
    return 0;
}

struct GenOpts {
    InputOpts in;
    std::string out_path;
};

int cmd_gen(const GenOpts& opt) {
    if (opt.in.gen.empty()) throw defpart::BadParameter("gen: --gen is required");
    auto g = defpart::generate_from_spec(opt.in.gen, opt.in.seed);
    write_output(defpart::emit_graph(g, defpart::GraphFormat::dimacs), opt.out_path);
    return 0;
}

struct BenchOpts {
    InputOpts in;
    std::string suite;
    std::string r;
};

void bench_row(std::ostream& out, const std::string& label, const defpart::Graph& g,
               const std::vector<int>& r) {
    auto inst = defpart::Instance::with_default_families(g, r, defpart::Mode::main);
    auto start = std::chrono::steady_clock::now();
    auto res = defpart::solve(inst, 0);
    auto end = std::chrono::steady_clock::now();
    auto report = defpart::verify_partition(inst, res.partition);
    if (!report.ok) throw defpart::InvariantViolation("bench: invalid output on " + label);
    double ms = std::chrono::duration<double, std::milli>(end - start).count();
    const std::string field =
        label.find(',') == std::string::npos ? label : "\"" + label + "\"";
    out << field << "," << g.n() << "," << g.m() << "," << defpart::max_degree(g) << ","
        << inst.k() << "," << res.trace.moves << "," << res.trace.chains << ","
        << res.trace.max_chain_len << "," << ms << "\n";
}

std::vector<int> kostochka_targets(const defpart::Graph& g) {
    return defpart::kostochka_plan(defpart::max_degree(g), false).targets;
}

int cmd_bench(const BenchOpts& opt) {
    std::ostringstream out;
    out << "instance,n,m,delta,k,moves,chains,max_chain_len,wall_ms\n";
    if (!opt.suite.empty()) {
        if (opt.suite != "smoke") throw defpart::BadParameter("unknown suite: " + opt.suite);
        struct Item {
            std::string spec;
            std::uint64_t seed;
        };
        const std::vector<Item> items = {
            {"petersen", 0},      {"cycle:60", 0},       {"path:80", 0},
            {"gnp:40,0.15", 1},   {"gnp:60,0.1", 2},     {"trifree:40,0.15", 3},
            {"regular:30,4", 4},  {"complete:12", 0},
        };
        for (const auto& item : items) {
            auto g = defpart::generate_from_spec(item.spec, item.seed);
            bench_row(out, item.spec, g, kostochka_targets(g));
        }
    } else {
        auto g = load_input(opt.in);
        auto r = opt.r.empty() ? kostochka_targets(g) : parse_int_list(opt.r);
        bench_row(out, opt.in.gen.empty() ? opt.in.input : opt.in.gen, g, r);
    }
    std::cout << out.str();
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"degree-constrained vertex partitioning and defective coloring"};
    app.require_subcommand(1);

    PartitionOpts popt;
    auto* partition = app.add_subcommand("partition", "partition V(G) under per-part degree caps");
    add_input_opts(partition, popt.in);
    partition->add_option("--k", popt.k, "number of parts (must match --r)");
    partition->add_option("--r", popt.r, "comma-separated degree targets")->required();
    partition->add_option("--mode", popt.mode, "main|lovasz")
        ->check(CLI::IsMember({"main", "lovasz"}));
    partition->add_flag("--trace", popt.trace, "dump the move trace as JSON lines on stderr");
    partition->add_option("--chain-cap", popt.chain_cap, "override the chain step cap");
    partition->add_option("--output-format", popt.output_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    partition->add_option("-o,--out", popt.out_path, "output path (default stdout)");

    ColorOpts copt;
    auto* color = app.add_subcommand("color", "proper coloring via the partition drivers");
    add_input_opts(color, copt.in);
    color->add_option("--plan", copt.plan, "kostochka | cliquefree:<r>");
    color->add_flag("--economical,!--no-economical", copt.economical,
                    "split off independent sets when profitable (default on)");
    color->add_option("--output-format", copt.output_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));
    color->add_option("-o,--out", copt.out_path, "output path (default stdout)");

    VerifyOpts vopt;
    auto* verify = app.add_subcommand("verify", "re-check a partition file");
    add_input_opts(verify, vopt.in);
    verify->add_option("partition_file", vopt.partition_file, "JSON file from `partition`")
        ->required();

    OracleOpts oopt;
    auto* oracle = app.add_subcommand("oracle", "exhaustive existence check");
    add_input_opts(oracle, oopt.in);
    oracle->add_option("--k", oopt.k, "number of parts (must match --r)");
    oracle->add_option("--r", oopt.r, "comma-separated degree targets")->required();
    oracle->add_option("--mode", oopt.mode, "main|lovasz")
        ->check(CLI::IsMember({"main", "lovasz"}));

    GenOpts gopt;
    auto* gen = app.add_subcommand("gen", "write a generated graph as DIMACS");
    add_input_opts(gen, gopt.in);
    gen->add_option("-o,--out", gopt.out_path, "output path (default stdout)");

    BenchOpts bopt;
    auto* bench = app.add_subcommand("bench", "CSV timing rows");
    add_input_opts(bench, bopt.in);
    bench->add_option("--suite", bopt.suite, "named suite: smoke");
    bench->add_option("--r", bopt.r, "degree targets (default: kostochka parameters)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    if (partition->parsed()) return guarded([&] { return cmd_partition(popt); }, popt.trace);
    if (color->parsed()) return guarded([&] { return cmd_color(copt); });
    if (verify->parsed()) return guarded([&] { return cmd_verify(vopt); });
    if (oracle->parsed()) return guarded([&] { return cmd_oracle(oopt); });
    if (gen->parsed()) return guarded([&] { return cmd_gen(gopt); });
    if (bench->parsed()) return guarded([&] { return cmd_bench(bopt); });
    return 1;
}
