// domcrit: build the paper families, solve domination variants exactly,
// check vertex criticality, and verify the theorem claims.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "domcrit/constructions.hpp"
#include "domcrit/criticality.hpp"
#include "domcrit/graph_io.hpp"
#include "domcrit/verify.hpp"

namespace {

using namespace domcrit;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_all(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

// graph6 bytes never contain a space, the edge-list header always does
Graph read_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string body = line.substr(start, end - start + 1);
        if (body.find(' ') != std::string::npos || body.find('\t') != std::string::npos)
            return edge_list_decode(text);
        return graph6_decode(body);
    }
    throw std::invalid_argument("empty graph file");
}

Graph load_graph(const std::string& path) { return read_graph_text(read_all(path)); }

Variant parse_variant(const std::string& name) {
    if (auto v = variant_from_name(name)) return *v;
    throw std::invalid_argument("unknown variant: " + name +
                                " (expected plain, total, independent or connected)");
}

json solve_json(const SolveResult& result, bool with_certificate) {
    json out;
    out["variant"] = std::string(variant_name(result.variant));
    out["value"] = result.value ? json(*result.value) : json("infeasible");
    if (with_certificate && result.certificate) {
        json cert = json::array();
        for (int v : *result.certificate) cert.push_back(v);
        out["certificate"] = cert;
    }
    out["nodes_explored"] = result.stats.nodes_explored;
    out["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(result.stats.elapsed).count();
    return out;
}

int emit_report(const VerifyReport& report, bool as_json) {
    if (as_json)
        std::cout << report.to_json().dump(2) << '\n';
    else
        std::cout << report.to_text();
    return report.pass ? kExitPass : kExitFail;
}

int run(int argc, char** argv) {
    CLI::App app{"exact domination-criticality toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // app-level flags like --json may trail the subcommand
    bool as_json = false;
    app.add_flag("--json", as_json, "emit a JSON report on stdout");

    // ---- build ----
    auto* build_cmd = app.add_subcommand("build", "construct a family graph and print it");
    std::string build_spec, build_out, build_format = "graph6";
    build_cmd->add_option("spec", build_spec, "family spec (e.g. R:m=2) or named graph (e.g. C6)")
        ->required();
    build_cmd->add_option("--out", build_out, "write to a file instead of stdout");
    build_cmd->add_option("--format", build_format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));

    // ---- solve ----
    auto* solve_cmd = app.add_subcommand("solve", "exact minimum for one variant");
    std::string solve_file, solve_variant;
    bool want_certificate = false;
    solve_cmd->add_option("file", solve_file, "graph file (graph6 or edge list; - for stdin)")
        ->required();
    solve_cmd->add_option("--variant", solve_variant, "plain|total|independent|connected")
        ->required();
    solve_cmd->add_flag("--certificate", want_certificate, "also print one optimum set");

    // ---- check ----
    auto* check_cmd = app.add_subcommand("check", "vertex-criticality check");
    std::string check_file, check_variant;
    check_cmd->add_option("file", check_file, "graph file (graph6 or edge list; - for stdin)")
        ->required();
    check_cmd->add_option("--variant", check_variant, "plain|total|independent|connected")
        ->required();

    // ---- verify ----
    auto* verify_cmd = app.add_subcommand("verify", "verify paper claims");
    verify_cmd->require_subcommand(1);
    bool deep = false;
    verify_cmd->add_flag("--deep", deep,
                         "allow the slow chain instances (thm15 at n >= 1, thm12/cor13 at n >= 2)");

    auto* family_cmd = verify_cmd->add_subcommand("family", "verify one family's claims");
    std::string family_spec;
    family_cmd->add_option("spec", family_spec, "family spec, e.g. R:m=2 or B:k=3,t=2")
        ->required();

    auto* theorem_cmd = verify_cmd->add_subcommand("theorem", "verify one theorem/remark");
    theorem_cmd->set_help_flag("--help", "print help");  // frees -h for the h parameter
    std::string theorem_id;
    theorem_cmd
        ->add_option("id", theorem_id,
                     "thm1 thm8 thm10 thm12 cor13 thm14 thm15 thm16 lemma4 lemma5 "
                     "remark_c6c6 remark_b remark_h tdiam goddard idiam cdiam")
        ->required();
    std::map<std::string, std::string> theorem_params;
    for (const char* key : {"n", "m", "t", "k", "h", "g", "g1", "g2", "x", "y"})
        theorem_cmd->add_option_function<std::string>(
            std::string("--") + key,
            [&theorem_params, key](const std::string& value) { theorem_params[key] = value; });

    auto* sweep_cmd = verify_cmd->add_subcommand("sweep", "random-graph bound sweep");
    SweepConfig sweep_config;
    std::vector<std::string> sweep_variants;
    sweep_cmd->add_option("--nmin", sweep_config.n_min, "minimum vertex count");
    sweep_cmd->add_option("--nmax", sweep_config.n_max, "maximum vertex count");
    sweep_cmd->add_option("--samples", sweep_config.samples, "number of sampled graphs");
    sweep_cmd->add_option("--seed", sweep_config.seed, "RNG seed");
    sweep_cmd->add_option("--p", sweep_config.edge_probability, "edge probability in (0,1)");
    sweep_cmd->add_option("--variant", sweep_variants, "restrict to these variants (repeatable)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        // usage errors are exit code 2; --help stays 0
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    if (*build_cmd) {
        Graph g;
        try {
            g = build_family(FamilySpec::parse(build_spec)).graph;
        } catch (const std::invalid_argument&) {
            g = named_graph(build_spec);
        }
        std::string text =
            build_format == "graph6" ? graph6_encode(g) + "\n" : edge_list_encode(g);
        if (build_out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(build_out, std::ios::binary);
            if (!out) throw std::invalid_argument("cannot write file: " + build_out);
            out << text;
        }
        return kExitPass;
    }

    if (*solve_cmd) {
        SolveResult result = solve(load_graph(solve_file), parse_variant(solve_variant));
        if (as_json) {
            std::cout << solve_json(result, want_certificate).dump(2) << '\n';
        } else {
            if (result.value)
                std::cout << *result.value << '\n';
            else
                std::cout << "infeasible\n";
            if (want_certificate && result.certificate) {
                for (int v : *result.certificate) std::cout << v << ' ';
                std::cout << '\n';
            }
        }
        return kExitPass;
    }

    if (*check_cmd) {
        Graph g = load_graph(check_file);
        CriticalityReport report = check_critical(g, parse_variant(check_variant));
        if (as_json) {
            json out;
            out["variant"] = std::string(variant_name(report.variant));
            out["base_value"] = report.base_value;
            out["critical"] = report.verdict;
            json tested = json::array(), witnesses = json::array(), per_vertex = json::object();
            for (int v : report.tested_vertices) {
                tested.push_back(v);
                const auto& value = report.per_vertex[static_cast<std::size_t>(v)];
                per_vertex[std::to_string(v)] = value ? json(*value) : json("infeasible");
            }
            for (int v : report.failing_witnesses) witnesses.push_back(v);
            out["tested_vertices"] = tested;
            out["per_vertex"] = per_vertex;
            out["failing_witnesses"] = witnesses;
            out["nodes_explored"] = report.nodes_explored;
            std::cout << out.dump(2) << '\n';
        } else {
            std::cout << (report.verdict ? "critical" : "not critical") << " (variant "
                      << variant_name(report.variant) << ", k = " << report.base_value << ")\n";
            if (!report.verdict) {
                std::cout << "failing vertices:";
                for (int v : report.failing_witnesses) std::cout << ' ' << v;
                std::cout << '\n';
            }
        }
        return report.verdict ? kExitPass : kExitFail;
    }

    if (*family_cmd) return emit_report(verify_family(FamilySpec::parse(family_spec)), as_json);
    if (*theorem_cmd) {
        if (!deep) {
            auto n_it = theorem_params.find("n");
            const int n = n_it == theorem_params.end() ? 0 : std::atoi(n_it->second.c_str());
            if ((theorem_id == "thm15" && n >= 1) ||
                ((theorem_id == "thm12" || theorem_id == "cor13") && n >= 2))
                throw std::invalid_argument(theorem_id + " at n = " + std::to_string(n) +
                                            " grows by 17+ vertices per link; pass --deep to run it");
        }
        return emit_report(verify_theorem(theorem_id, theorem_params), as_json);
    }
    if (*sweep_cmd) {
        if (!sweep_variants.empty()) {
            sweep_config.variants.clear();
            for (const std::string& name : sweep_variants)
                sweep_config.variants.push_back(parse_variant(name));
        }
        return emit_report(sweep(sweep_config), as_json);
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "domcrit: " << e.what() << '\n';
        return kExitUsage;
    }
}
