#include "twowalk/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "twowalk/enumerate.hpp"
#include "twowalk/families.hpp"
#include "twowalk/graph6.hpp"
#include "twowalk/linearity.hpp"
#include "twowalk/reduced.hpp"
#include "twowalk/spectral.hpp"

namespace twowalk {

namespace {

using nlohmann::json;

// Reads graphs from a stream; format "auto" sniffs the first byte: graph6
// headers start at '?' (63), edge-list headers start with a digit.
std::vector<Graph> read_graphs(std::istream& in, const std::string& format) {
    if (format == "graph6") return read_graph6_lines(in);
    if (format == "edgelist") return {parse_edge_list(in)};
    std::stringstream buffered;
    buffered << in.rdbuf();
    std::string content = buffered.str();
    size_t first = content.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return {};
    if (content[first] >= 63 && content[first] <= 126) {
        std::istringstream is(content);
        return read_graph6_lines(is);
    }
    std::istringstream is(content);
    return {parse_edge_list(is)};
}

std::vector<Graph> read_inputs(const std::vector<std::string>& files, std::istream& in,
                               const std::string& format) {
    if (files.empty()) return read_graphs(in, format);
    std::vector<Graph> out;
    for (const auto& path : files) {
        std::ifstream f(path);
        if (!f) throw graph6_error("cannot open " + path);
        auto batch = read_graphs(f, format);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

json check_one(const Graph& g) {
    json e;
    e["n"] = g.vertex_count();
    e["m"] = g.edge_count();
    auto verdict = check_two_walk_linear(g);
    auto rep = analyze_main_eigenvalues(g);
    if (is_regular(verdict)) {
        e["verdict"] = "regular";
    } else if (const auto* lin = std::get_if<Linear>(&verdict)) {
        e["verdict"] = "linear";
        e["a"] = lin->a.str();
        e["b"] = lin->b.str();
        e["integral"] = is_integral(verdict);
    } else {
        const auto& nl = std::get<NotLinear>(verdict);
        e["verdict"] = "not-linear";
        e["witness"] = nl.witness;
        e["expected_sum"] = nl.expected_sum.str();
        e["actual_sum"] = nl.actual_sum;
    }
    e["main_exact"] = rep.exact_count;
    e["main_float"] = rep.float_count;
    return e;
}

void print_check_line(std::ostream& out, const json& e) {
    out << "n=" << e["n"].get<int>() << " m=" << e["m"].get<int>()
        << " verdict=" << e["verdict"].get<std::string>();
    if (e.contains("a")) out << " a=" << e["a"].get<std::string>() << " b=" << e["b"].get<std::string>();
    if (e.contains("witness"))
        out << " witness=" << e["witness"].get<int>()
            << " expected_S=" << e["expected_sum"].get<std::string>()
            << " actual_S=" << e["actual_sum"].get<long>();
    out << " main_exact=" << e["main_exact"].get<int>()
        << " main_float=" << e["main_float"].get<int>() << '\n';
}

int cmd_check(const std::vector<std::string>& files, const std::string& format, bool as_json,
              std::istream& in, std::ostream& out) {
    auto graphs = read_inputs(files, in, format);
    json all = json::array();
    for (const auto& g : graphs) all.push_back(check_one(g));
    if (as_json) {
        out << all.dump(2) << '\n';
    } else {
        for (const auto& e : all) print_check_line(out, e);
    }
    return 0;
}

int cmd_classify(const std::vector<std::string>& files, const std::string& format, bool as_json,
                 std::istream& in, std::ostream& out) {
    auto graphs = read_inputs(files, in, format);
    json all = json::array();
    for (const auto& g : graphs) {
        auto id = classify(g);
        all.push_back(id ? json(id->str()) : json(nullptr));
    }
    if (as_json) {
        out << all.dump(2) << '\n';
    } else {
        for (const auto& e : all) out << (e.is_null() ? "none" : e.get<std::string>()) << '\n';
    }
    return 0;
}

void emit_graph(std::ostream& out, const Graph& g, const std::string& format) {
    if (format == "edgelist")
        out << to_edge_list(g);
    else
        out << to_graph6(g) << '\n';
}

int cmd_generate(const std::string& family, const std::vector<long>& params,
                 const std::string& format, std::ostream& out, std::ostream& err) {
    if (family == "H" || family == "h") {
        if (params.size() != 1) {
            err << "generate H takes exactly one index (1..30)\n";
            return 1;
        }
        emit_graph(out, build_h(static_cast<int>(params[0])), format);
        return 0;
    }
    if (family == "G" || family == "g") {
        if (params.empty()) {
            err << "generate G takes a family index and its parameters\n";
            return 1;
        }
        std::vector<long> rest(params.begin() + 1, params.end());
        emit_graph(out, build_g(static_cast<int>(params[0]), rest), format);
        return 0;
    }
    if (family == "T" || family == "t") {
        if (params.empty()) {
            err << "generate T takes a base index and its segment lengths\n";
            return 1;
        }
        int idx = static_cast<int>(params[0]);
        if (idx < 1 || idx > 8) {
            err << "base index must be 1..8\n";
            return 1;
        }
        std::vector<int> lengths;
        for (size_t i = 1; i < params.size(); ++i) lengths.push_back(static_cast<int>(params[i]));
        emit_graph(out, build_base(static_cast<BaseType>(idx), lengths), format);
        return 0;
    }
    err << "unknown family '" << family << "' (expected H, G or T)\n";
    return 1;
}

int cmd_enumerate(int order, const std::string& strategy, int threads, std::ostream& out) {
    auto strat = strategy == "naive" ? EnumStrategy::Naive : EnumStrategy::Structured;
    auto emit = [&](const Graph& g) { out << to_graph6(g) << '\n'; };
    if (strat == EnumStrategy::Naive)
        enumerate_tricyclic_naive(order, emit, threads);
    else
        enumerate_tricyclic_structured(order, emit, threads);
    return 0;
}

int cmd_verify(int max_order, const std::string& strategy, int threads, bool as_json,
               bool dump_positives, std::ostream& out) {
    auto strat = strategy == "naive" ? EnumStrategy::Naive : EnumStrategy::Structured;
    auto reports = verify_catalog(max_order, strat, threads, dump_positives);
    bool ok = true;
    for (const auto& r : reports)
        ok = ok && r.counterexamples.empty() && r.equivalence_failures.empty();
    if (as_json) {
        out << report_json(reports, strat) << '\n';
    } else {
        out << report_table(reports);
        if (dump_positives) {
            for (const auto& r : reports)
                for (const auto& g6 : r.positives_g6) out << g6 << '\n';
        }
        out << (ok ? "OK: no counterexamples\n" : "FAILED: counterexamples found\n");
    }
    return ok ? 0 : 2;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"two-walk linearity, main-eigenvalue counting and the tricyclic catalog"};
    app.require_subcommand(1);

    std::vector<std::string> files;
    std::string format = "auto";
    std::string gen_format = "graph6";
    std::string strategy = "structured";
    std::string family;
    std::vector<long> params;
    int order = 0;
    int max_order = 8;
    int threads = 1;
    bool as_json = false;
    bool dump_positives = false;

    auto* check = app.add_subcommand("check", "linearity verdict and main-eigenvalue counts");
    check->add_option("files", files, "input files (stdin when absent)");
    check->add_option("--format", format, "auto|graph6|edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    check->add_flag("--json", as_json, "JSON output");

    auto* cls = app.add_subcommand("classify", "catalog member isomorphic to the input, if any");
    cls->add_option("files", files, "input files (stdin when absent)");
    cls->add_option("--format", format, "auto|graph6|edgelist")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    cls->add_flag("--json", as_json, "JSON output");

    auto* gen = app.add_subcommand("generate", "emit a catalog member or base: H i | G j params | T i lengths");
    gen->add_option("family", family, "H, G or T")->required();
    gen->add_option("params", params, "index and parameters");
    gen->add_option("--format", gen_format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    auto* enu = app.add_subcommand("enumerate", "stream all connected tricyclic graphs of one order");
    enu->add_option("--order", order, "vertex count")->required();
    enu->add_option("--strategy", strategy, "structured|naive")
        ->check(CLI::IsMember({"structured", "naive"}));
    enu->add_option("--threads", threads, "enumeration parallelism");

    auto* ver = app.add_subcommand("verify", "exhaustive census against the catalog");
    ver->add_option("--max-order", max_order, "largest order to verify (default 8)");
    ver->add_option("--strategy", strategy, "structured|naive")
        ->check(CLI::IsMember({"structured", "naive"}));
    ver->add_option("--threads", threads, "enumeration parallelism");
    ver->add_flag("--json", as_json, "JSON report");
    ver->add_flag("--dump-positives", dump_positives, "emit positives as graph6");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return 1;
    }

    try {
        if (check->parsed()) return cmd_check(files, format, as_json, in, out);
        if (cls->parsed()) return cmd_classify(files, format, as_json, in, out);
        if (gen->parsed()) return cmd_generate(family, params, gen_format, out, err);
        if (enu->parsed()) return cmd_enumerate(order, strategy, threads, out);
        if (ver->parsed()) return cmd_verify(max_order, strategy, threads, as_json, dump_positives, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    err << "no command\n";
    return 1;
}

}  // namespace twowalk
