// Command-line front end: bounds tables, cycle censuses, transition-graph
// exports, universal-word constructions, word/matrix verification and the
// classical-superpermutation toolbox. JSON is the canonical machine format;
// csv/md/dot/text are projections. All output on stdout is deterministic for
// fixed arguments; progress and timing go to stderr.
//
// Exit codes: 0 success, 1 verification/acceptance failure, 2 usage error,
// 3 budget exhausted (partial result emitted).

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "superperm/acceptance.hpp"
#include "superperm/bounds.hpp"
#include "superperm/classic.hpp"
#include "superperm/cycle_census.hpp"
#include "superperm/pathfinder.hpp"
#include "superperm/toric_matrix.hpp"
#include "superperm/transition_graph.hpp"

namespace {

using nlohmann::ordered_json;

constexpr const char* kVersion = "superperm 1.0.0 (census formula r1, bounds formulas r1)";

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string bigint_str(const spm::BigInt& v) { return v.str(); }

// ---------------------------------------------------------------- bounds --

int run_bounds(int n_max, const std::string& format, bool ratios) {
    if (ratios) {
        const auto rows = spm::ratio_report(n_max);
        if (format == "json") {
            ordered_json out;
            out["n_max"] = n_max;
            out["rows"] = ordered_json::array();
            for (const auto& r : rows) {
                ordered_json row;
                row["n"] = r.n;
                row["B_ratio"] = spm::format_rational(r.B_ratio);
                row["Bprime_ratio"] = spm::format_rational(r.Bprime_ratio);
                row["L_ratio"] = spm::format_rational(r.L_ratio);
                row["B_ratio_approx"] =
                    boost::multiprecision::numerator(r.B_ratio).convert_to<double>() /
                    boost::multiprecision::denominator(r.B_ratio).convert_to<double>();
                out["rows"].push_back(row);
            }
            std::cout << out.dump(2) << "\n";
        } else {
            std::cout << "n,B_ratio,Bprime_ratio,L_ratio,B_ratio_approx\n";
            for (const auto& r : rows) {
                const double approx =
                    boost::multiprecision::numerator(r.B_ratio).convert_to<double>() /
                    boost::multiprecision::denominator(r.B_ratio).convert_to<double>();
                std::cout << r.n << "," << spm::format_rational(r.B_ratio) << ","
                          << spm::format_rational(r.Bprime_ratio) << ","
                          << spm::format_rational(r.L_ratio) << "," << approx << "\n";
            }
        }
        return kExitOk;
    }

    const auto rows = spm::bounds_table(n_max);
    const auto deviations = spm::published_table_deviations(n_max);

    if (format == "json") {
        ordered_json out;
        out["n_max"] = n_max;
        out["rows"] = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["n"] = r.n;
            row["I"] = bigint_str(r.I);
            row["C"] = bigint_str(r.C);
            row["best"] = r.best_found ? ordered_json(bigint_str(*r.best_found))
                                       : ordered_json(nullptr);
            row["B"] = bigint_str(r.B);
            row["Bprime"] = spm::format_rational(r.Bprime);
            row["S"] = bigint_str(r.S);
            out["rows"].push_back(row);
        }
        out["annotations"] = ordered_json::array();
        for (const auto& d : deviations) {
            ordered_json a;
            a["n"] = d.n;
            a["column"] = std::string(1, d.column);
            a["computed"] = bigint_str(d.computed);
            a["published"] = bigint_str(d.published);
            a["note"] = "formula value differs from the previously published table";
            out["annotations"].push_back(a);
        }
        std::cout << out.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "n,I,C,best,B,Bprime,S\n";
        for (const auto& r : rows)
            std::cout << r.n << "," << bigint_str(r.I) << "," << bigint_str(r.C) << ","
                      << (r.best_found ? bigint_str(*r.best_found) : "") << ","
                      << bigint_str(r.B) << "," << spm::format_rational(r.Bprime) << ","
                      << bigint_str(r.S) << "\n";
        for (const auto& d : deviations)
            std::cout << "# note: " << d.column << "(" << d.n << ") = "
                      << bigint_str(d.computed) << " by formula; a published table prints "
                      << bigint_str(d.published) << "\n";
    } else {  // md
        std::cout << "| n | I | C | best | B | B' | S |\n";
        std::cout << "|---|---|---|------|---|----|---|\n";
        for (const auto& r : rows)
            std::cout << "| " << r.n << " | " << bigint_str(r.I) << " | " << bigint_str(r.C)
                      << " | " << (r.best_found ? bigint_str(*r.best_found) : "")
                      << " | " << bigint_str(r.B) << " | " << spm::format_rational(r.Bprime)
                      << " | " << bigint_str(r.S) << " |\n";
        for (const auto& d : deviations)
            std::cout << "\n> note: " << d.column << "(" << d.n << ") = "
                      << bigint_str(d.computed) << " by formula; a published table prints "
                      << bigint_str(d.published) << ".";
        if (!deviations.empty()) std::cout << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------- census --

int run_census(int n, const std::string& format) {
    const spm::CycleCensus census = spm::census_formula(n);
    const spm::BigInt phi = spm::euler_phi(static_cast<std::uint64_t>(n));
    const spm::BigInt weighted = census.weighted_total();
    const spm::BigInt expected = spm::factorial_big(static_cast<unsigned>(n - 1));

    if (format == "json") {
        ordered_json out;
        out["n"] = n;
        out["counts"] = ordered_json::object();
        for (const auto& [d, c] : census.counts)
            out["counts"][std::to_string(d)] = bigint_str(c);
        out["total_cycles"] = bigint_str(census.total_cycles());
        out["phi"] = bigint_str(phi);
        out["counts_1_equals_phi"] = census.counts.at(1) == phi;
        out["weighted_total"] = bigint_str(weighted);
        out["weighted_total_equals_factorial"] = weighted == expected;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "1-cycle census for n = " << n << "\n";
        for (const auto& [d, c] : census.counts)
            std::cout << "  length " << d << ": " << bigint_str(c) << "\n";
        std::cout << "total cycles L(n) = " << bigint_str(census.total_cycles()) << "\n";
        std::cout << "check counts[1] = phi(n) = " << bigint_str(phi) << ": "
                  << (census.counts.at(1) == phi ? "ok" : "MISMATCH") << "\n";
        std::cout << "check sum d*counts[d] = (n-1)! = " << bigint_str(expected) << ": "
                  << (weighted == expected ? "ok" : "MISMATCH") << "\n";
    }
    return kExitOk;
}

// ----------------------------------------------------------------- graph --

int run_graph(int n, const std::string& kind, const std::string& emit, int cutoff,
              int materialize_max_n) {
    spm::GraphBuildOptions opts;
    opts.materialize_max_n = materialize_max_n;
    const spm::TransitionGraph g =
        spm::build_graph(n, kind == "K" ? spm::GraphKind::K : spm::GraphKind::H, opts);
    if (emit == "dot")
        std::cout << g.to_dot(cutoff);
    else
        std::cout << g.to_csv();
    return kExitOk;
}

// ------------------------------------------------------------- construct --

void print_incumbent(const spm::SearchResult& r, void*) {
    std::cerr << "incumbent: length " << r.length << " (weight " << r.weight << ", "
              << r.nodes_expanded << " nodes, " << r.elapsed.count() << " s)\n";
}

int run_construct(int n, const std::string& method, const std::string& emit,
                  const std::string& format, std::optional<double> time_limit,
                  std::uint64_t node_limit, int threads, const std::string& start) {
    spm::SearchResult result;
    if (method == "greedy") {
        result = spm::greedy_cycle_path(n);
    } else if (method == "nn") {
        if (start.empty()) {
            result = spm::nearest_neighbor_path(n);
        } else {
            result = spm::nearest_neighbor_path(
                n, spm::IncClass(spm::Permutation::parse(start)));
        }
    } else {
        spm::SearchBudget budget;
        budget.time_limit_seconds = time_limit;
        budget.node_limit = node_limit;
        budget.threads = threads;
        result = spm::exact_min_word(n, budget, {}, print_incumbent, nullptr);
    }

    if (format == "json") {
        ordered_json out;
        out["n"] = n;
        out["method"] = spm::method_name(result.method);
        out["word"] = result.word.str();
        out["length"] = result.length;
        out["weight"] = result.weight;
        out["optimal"] = result.optimal;
        if (result.method == spm::SearchMethod::Exact)
            out["nodes_expanded"] = result.nodes_expanded;
        if (emit == "path" || emit == "word") {
            ordered_json path = ordered_json::array();
            for (std::uint64_t v : result.path.vertices)
                path.push_back(spm::canonical_rep_unrank(n, v).str());
            out["path"] = path;
        }
        std::cout << out.dump(2) << "\n";
    } else if (emit == "matrix") {
        std::cout << spm::word_to_matrix(result.word).to_text(n);
    } else if (emit == "path") {
        for (std::size_t i = 0; i < result.path.vertices.size(); ++i) {
            if (i) std::cout << " -" << result.path.step_weights[i - 1] << "-> ";
            std::cout << spm::canonical_rep_unrank(n, result.path.vertices[i]).str();
        }
        std::cout << "\n";
    } else {
        std::cout << result.word.str() << "\n";
    }
    std::cerr << spm::method_name(result.method) << ": length " << result.length
              << ", weight " << result.weight << (result.optimal ? ", optimal" : "")
              << ", " << result.elapsed.count() << " s\n";

    if (result.method == spm::SearchMethod::Exact && !result.optimal) return kExitBudget;
    return kExitOk;
}

// ---------------------------------------------------------------- verify --

int run_verify_word(int n, const std::string& word, const std::string& format) {
    const spm::UniversalWord u = spm::UniversalWord::parse(word, n);
    const spm::WordCheckReport report = spm::verify_universal_word(u);
    if (format == "json") {
        ordered_json out;
        out["n"] = n;
        out["word"] = u.str();
        out["universal"] = report.ok;
        out["missing_classes"] = ordered_json::array();
        for (const auto& m : report.missing) out["missing_classes"].push_back(m.str());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (report.ok ? "PASS" : "FAIL") << "\n";
        for (const auto& m : report.missing)
            std::cout << "missing class: " << m.str() << "\n";
    }
    return report.ok ? kExitOk : kExitVerifyFail;
}

int run_verify_matrix(const std::string& file, std::optional<int> n_override,
                      const std::string& format) {
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("--file", "cannot open " + file);
    std::stringstream buffer;
    buffer << in.rdbuf();
    int n_from_file = 0;
    const spm::ToricBinaryMatrix t =
        spm::ToricBinaryMatrix::from_text(buffer.str(), n_from_file);
    const int n = n_override.value_or(n_from_file);
    const spm::MatrixCheckReport report = spm::is_superpermutation_matrix(t, n);
    if (format == "json") {
        ordered_json out;
        out["file"] = file;
        out["rows"] = t.rows();
        out["cols"] = t.cols();
        out["n"] = n;
        out["pass"] = report.ok;
        out["missing"] = ordered_json::array();
        for (const auto& m : report.missing) out["missing"].push_back(m.str());
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (report.ok ? "PASS" : "FAIL") << "\n";
        for (const auto& m : report.missing)
            std::cout << "missing permutation: " << m.str() << "\n";
    }
    return report.ok ? kExitOk : kExitVerifyFail;
}

// --------------------------------------------------------------- classic --

int run_classic(int n, bool construct, bool verify, bool bounds, const std::string& word_arg) {
    int exit_code = kExitOk;
    std::vector<spm::Letter> word;
    if (!word_arg.empty()) {
        const spm::UniversalWord parsed = spm::UniversalWord::parse(word_arg, n);
        word = parsed.letters();
    }
    if (construct) {
        word = spm::ashlock_tillotson(n);
        std::cout << "construction: " << spm::UniversalWord(word, n).str() << "\n";
        std::cout << "length: " << word.size() << "\n";
    }
    if (verify) {
        if (word.empty())
            throw CLI::ValidationError("--verify", "needs --construct or --word");
        const auto report = spm::is_superpermutation(word, n);
        std::cout << "verify: " << (report.ok ? "PASS" : "FAIL") << "\n";
        if (!report.ok) {
            std::cout << "missing " << report.missing.size() << " permutations";
            if (!report.missing.empty())
                std::cout << ", first: " << report.missing.front().str();
            std::cout << "\n";
            exit_code = kExitVerifyFail;
        }
    }
    if (bounds) {
        if (n >= 3)
            std::cout << "lower bound: " << spm::classic_lower_bound(n).str() << "\n";
        if (n >= 4)
            std::cout << "upper bound: " << spm::classic_upper_bound(n).str() << "\n";
        if (n < 3) std::cout << "bounds need n >= 3\n";
    }
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"superpermutation matrices, universal words and their bounds"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "closed-form bound table I/C/B/B'/S");
    int bounds_max = 8;
    std::string bounds_format = "md";
    bool bounds_ratios = false;
    bounds_cmd->add_option("--max", bounds_max, "largest n")->check(CLI::Range(1, 24));
    bounds_cmd->add_option("--format", bounds_format)
        ->check(CLI::IsMember({"csv", "md", "json"}));
    bounds_cmd->add_flag("--ratios", bounds_ratios,
                         "emit B/B'/L convergence ratios instead of the table");

    // census
    auto* census_cmd = app.add_subcommand("census", "1-cycle census per divisor");
    int census_n = 4;
    std::string census_format = "table";
    census_cmd->add_option("--n", census_n)->required()->check(CLI::Range(1, 24));
    census_cmd->add_option("--format", census_format)
        ->check(CLI::IsMember({"json", "table"}));

    // graph
    auto* graph_cmd = app.add_subcommand("graph", "transition graph export");
    int graph_n = 4;
    std::string graph_kind = "H";
    std::string graph_emit = "csv";
    int graph_cutoff = 1;
    int graph_materialize = 7;
    graph_cmd->add_option("--n", graph_n)->required()->check(CLI::Range(1, 9));
    graph_cmd->add_option("--kind", graph_kind)->check(CLI::IsMember({"H", "K"}));
    graph_cmd->add_option("--emit", graph_emit)->check(CLI::IsMember({"dot", "csv"}));
    graph_cmd->add_option("--cutoff", graph_cutoff,
                          "largest edge weight included in dot output");
    graph_cmd->add_option("--max-materialize", graph_materialize,
                          "materialize the weight table up to this n");

    // construct
    auto* construct_cmd = app.add_subcommand("construct", "universal word construction");
    int construct_n = 4;
    std::string construct_method = "greedy";
    std::string construct_emit = "word";
    std::string construct_format = "text";
    std::string construct_start;
    double construct_time_limit = 0.0;
    std::uint64_t construct_node_limit = 50'000'000;
    int construct_threads = 1;
    construct_cmd->add_option("--n", construct_n)->required()->check(CLI::Range(1, 9));
    construct_cmd->add_option("--method", construct_method)
        ->check(CLI::IsMember({"greedy", "nn", "exact"}));
    construct_cmd->add_option("--emit", construct_emit)
        ->check(CLI::IsMember({"word", "matrix", "path"}));
    construct_cmd->add_option("--format", construct_format)
        ->check(CLI::IsMember({"text", "json"}));
    construct_cmd->add_option("--start", construct_start,
                              "start permutation for nn (default identity)");
    construct_cmd->add_option("--time-limit", construct_time_limit,
                              "seconds, exact method only (0 = none)");
    construct_cmd->add_option("--node-limit", construct_node_limit,
                              "node budget, exact method only");
    construct_cmd->add_option("--threads", construct_threads,
                              "exact search workers (default 1, deterministic)")
        ->check(CLI::Range(1, 64));

    // verify-word
    auto* vw_cmd = app.add_subcommand("verify-word", "universal word check");
    int vw_n = 4;
    std::string vw_word;
    std::string vw_format = "text";
    vw_cmd->add_option("--n", vw_n)->required()->check(CLI::Range(1, 12));
    vw_cmd->add_option("--word", vw_word)->required();
    vw_cmd->add_option("--format", vw_format)->check(CLI::IsMember({"text", "json"}));

    // verify-matrix
    auto* vm_cmd = app.add_subcommand("verify-matrix", "superpermutation matrix check");
    std::string vm_file;
    int vm_n = 0;
    std::string vm_format = "text";
    vm_cmd->add_option("--file", vm_file, "text file: header 'm p n', then '0'/'1' rows")
        ->required();
    vm_cmd->add_option("--n", vm_n, "override the order from the file header");
    vm_cmd->add_option("--format", vm_format)->check(CLI::IsMember({"text", "json"}));

    // classic
    auto* classic_cmd = app.add_subcommand("classic", "classical superpermutations");
    int classic_n = 4;
    bool classic_construct = false;
    bool classic_verify = false;
    bool classic_bounds_flag = false;
    std::string classic_word;
    classic_cmd->add_option("--n", classic_n)->required()->check(CLI::Range(1, 12));
    classic_cmd->add_flag("--construct", classic_construct);
    classic_cmd->add_flag("--verify", classic_verify);
    classic_cmd->add_flag("--bounds", classic_bounds_flag);
    classic_cmd->add_option("--word", classic_word, "word for --verify");

    // acceptance
    auto* acceptance_cmd =
        app.add_subcommand("acceptance", "run the full acceptance battery");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp" ||
            e.get_name() == "CallForVersion")
            return app.exit(e);
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (bounds_cmd->parsed()) return run_bounds(bounds_max, bounds_format, bounds_ratios);
        if (census_cmd->parsed()) return run_census(census_n, census_format);
        if (graph_cmd->parsed())
            return run_graph(graph_n, graph_kind, graph_emit, graph_cutoff,
                             graph_materialize);
        if (construct_cmd->parsed()) {
            std::optional<double> tl;
            if (construct_time_limit > 0) tl = construct_time_limit;
            return run_construct(construct_n, construct_method, construct_emit,
                                 construct_format, tl, construct_node_limit,
                                 construct_threads, construct_start);
        }
        if (vw_cmd->parsed()) return run_verify_word(vw_n, vw_word, vw_format);
        if (vm_cmd->parsed()) {
            std::optional<int> n_override;
            if (vm_n > 0) n_override = vm_n;
            return run_verify_matrix(vm_file, n_override, vm_format);
        }
        if (classic_cmd->parsed())
            return run_classic(classic_n, classic_construct, classic_verify,
                               classic_bounds_flag, classic_word);
        if (acceptance_cmd->parsed()) {
            const auto results = spm::acceptance::run_all(std::cout);
            return spm::acceptance::all_passed(results) ? kExitOk : kExitVerifyFail;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerifyFail;
    }
    return kExitUsage;
}
