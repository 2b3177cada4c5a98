// Command-line front end: generate graphs, run censuses, classify single
// triples or sweep parameter ranges, and persist machine-readable reports.
//
// Exit codes: 0 agreement with the predicted classification, 1 usage or
// validation error, 2 disagreement, 3 undecided.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bouwer/io.hpp"
#include "bouwer/report.hpp"
#include "bouwer/six_cycle_forms.hpp"
#include "bouwer/three_arc_cases.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDisagree = 2;
constexpr int kExitUndecided = 3;

struct TripleArgs {
    int k = 0, m = 0, n = 0;
};

void add_triple(CLI::App* cmd, TripleArgs& t) {
    cmd->add_option("k", t.k, "half-valency")->required();
    cmd->add_option("m", t.m, "leading-coordinate modulus")->required();
    cmd->add_option("n", t.n, "trailing-coordinate modulus")->required();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    os << content;
}

int cmd_generate(const TripleArgs& t, const std::string& format, const std::string& out) {
    const bouwer::GraphParams p = bouwer::validate_params(t.k, t.m, t.n);
    const bouwer::BouwerGraph g = bouwer::BouwerGraph::build(p);
    const bool want_edges = format.empty() || format == "edgelist";
    const bool want_labels = format.empty() || format == "labels";
    if (out.empty()) {
        if (want_edges) bouwer::write_edge_list(std::cout, g);
        if (want_labels && !want_edges) bouwer::write_vertex_labels(std::cout, p);
        return kExitOk;
    }
    if (want_edges) write_file(out + ".edges", bouwer::edge_list_string(g));
    if (want_labels) write_file(out + ".labels", bouwer::vertex_labels_string(p));
    std::cout << "wrote B(" << t.k << "," << t.m << "," << t.n << "): " << g.order()
              << " vertices, " << g.edge_count() << " edges\n";
    return kExitOk;
}

int cmd_classify(const TripleArgs& t, bool use_oracle, std::uint64_t budget,
                 const std::string& out) {
    const bouwer::GraphParams p = bouwer::validate_params(t.k, t.m, t.n);
    const bouwer::BouwerGraph g = bouwer::BouwerGraph::build(p);
    bouwer::ReportOptions opts;
    opts.use_oracle = use_oracle;
    opts.oracle_budget = budget;
    const bouwer::Report r = bouwer::build_report(g, opts);
    const std::string doc = bouwer::serialize_report(r);
    std::cout << doc;
    if (!out.empty()) write_file(out, doc);
    if (r.verdict == "Undecided") return kExitUndecided;
    return r.agree ? kExitOk : kExitDisagree;
}

int cmd_profile(const TripleArgs& t) {
    const bouwer::GraphParams p = bouwer::validate_params(t.k, t.m, t.n);
    const bouwer::BouwerGraph g = bouwer::BouwerGraph::build(p);
    std::cout << "B(" << t.k << "," << t.m << "," << t.n << "): order " << g.order()
              << ", valency " << g.valency() << ", girth " << bouwer::girth(g) << ", bipartite "
              << (bouwer::is_bipartite(g) ? "true" : "false") << "\n";
    if (g.degenerate()) std::cout << "note: neighbor formula collapsed; valency is k\n";

    const bouwer::ThreeArcClassifier cls(p);
    const auto census = bouwer::three_arc_census(g, cls);
    long long total = 0;
    for (const auto& [id, count] : census) total += count;
    std::cout << "\nthree-arcs rooted at the zero vertex: " << total << "\n";
    for (const auto& [id, count] : census) {
        if (id == 0)
            std::cout << "  unclassified: " << count << "\n";
        else
            std::cout << "  case " << id << ": " << count << "\n";
    }

    const auto [pv, pw] = bouwer::extension_profiles(g);
    auto print_profile = [](const char* label, const bouwer::ExtensionProfile& prof) {
        std::cout << label;
        for (const auto& [count, verts] : prof.buckets)
            if (!verts.empty()) std::cout << " " << count << ":" << verts.size();
        std::cout << "\n";
    };
    std::cout << "\n2-arc 6-cycle buckets (count:extensions)\n";
    print_profile("  from v:", pv);
    print_profile("  from w:", pw);

    const bouwer::SixCycleMatcher matcher(p);
    const auto forms = bouwer::six_cycle_form_census(g, matcher);
    long long cycles = 0;
    for (const auto& [id, count] : forms) cycles += count;
    std::cout << "\n6-cycles through the zero vertex: " << cycles << "\n";
    for (const auto& [id, count] : forms) {
        if (id == 0)
            std::cout << "  unmatched: " << count << "\n";
        else
            std::cout << "  form " << id << ": " << count << "\n";
    }
    return kExitOk;
}

int cmd_oracle(const TripleArgs& t, std::uint64_t budget, const std::string& out) {
    const bouwer::GraphParams p = bouwer::validate_params(t.k, t.m, t.n);
    const bouwer::BouwerGraph g = bouwer::BouwerGraph::build(p);
    const bouwer::OracleResult r = bouwer::oracle_arc_reversal(g, budget);
    switch (r.status) {
        case bouwer::OracleResult::Status::Reversible:
            std::cout << "reversible: true\n";
            break;
        case bouwer::OracleResult::Status::NotReversible:
            std::cout << "reversible: false\n";
            break;
        case bouwer::OracleResult::Status::BudgetExhausted:
            std::cout << "reversible: unknown (budget exhausted)\n";
            break;
    }
    std::cout << "nodes_explored: " << r.nodes_explored << "\n";
    if (r.witness && !out.empty()) write_file(out, bouwer::permutation_string(*r.witness));
    if (r.status == bouwer::OracleResult::Status::BudgetExhausted) return kExitUndecided;
    return kExitOk;
}

int cmd_sweep(const bouwer::SweepSpec& spec, const std::string& csv_path,
              const std::string& out_dir) {
    const std::vector<bouwer::SweepRow> rows = bouwer::run_sweep(spec);
    if (csv_path.empty()) {
        bouwer::write_sweep_csv(std::cout, rows);
    } else {
        std::ofstream os(csv_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + csv_path);
        bouwer::write_sweep_csv(os, rows);
    }
    if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const bouwer::SweepRow& row : rows) {
            if (row.failed()) continue;
            const std::string name = "B_" + std::to_string(row.k) + "_" + std::to_string(row.m) +
                                     "_" + std::to_string(row.n) + ".report";
            write_file(out_dir + "/" + name, bouwer::serialize_report(row.report));
        }
    }
    int disagreements = 0, undecided = 0, failures = 0;
    for (const bouwer::SweepRow& row : rows) {
        if (row.failed()) {
            ++failures;
        } else if (row.report.verdict == "Undecided") {
            ++undecided;
        } else if (!row.report.agree) {
            ++disagreements;
        }
    }
    std::cerr << rows.size() << " triples, " << disagreements << " disagreements, " << undecided
              << " undecided, " << failures << " failures\n";
    if (disagreements > 0 || failures > 0) return kExitDisagree;
    if (undecided > 0) return kExitUndecided;
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bouwer graph construction, cycle census and transitivity classification"};
    app.require_subcommand(1);

    TripleArgs t;
    std::string format, out, csv;
    bool use_oracle = false;
    std::uint64_t budget = bouwer::kDefaultOracleBudget;
    bouwer::SweepSpec spec;

    CLI::App* generate = app.add_subcommand("generate", "write edge list and vertex labels");
    add_triple(generate, t);
    generate->add_option("--format", format, "edgelist|labels (default: both)")
        ->check(CLI::IsMember({"edgelist", "labels"}));
    generate->add_option("--out", out, "output path stem");

    CLI::App* classify = app.add_subcommand("classify", "classify one triple");
    add_triple(classify, t);
    classify->add_flag("--oracle", use_oracle, "run the exhaustive arc-reversal search");
    classify->add_option("--oracle-budget", budget, "backtracking node limit");
    classify->add_option("--out", out, "write the report document here");

    CLI::App* profile = app.add_subcommand("profile", "print cycle censuses");
    add_triple(profile, t);

    CLI::App* oracle = app.add_subcommand("oracle", "run only the arc-reversal search");
    add_triple(oracle, t);
    oracle->add_option("--oracle-budget", budget, "backtracking node limit");
    oracle->add_option("--out", out, "write the witness permutation here");

    CLI::App* sweep = app.add_subcommand("sweep", "classify every valid triple in a range");
    sweep->add_option("--k-min", spec.k_min);
    sweep->add_option("--k-max", spec.k_max);
    sweep->add_option("--m-min", spec.m_min);
    sweep->add_option("--m-max", spec.m_max);
    sweep->add_option("--n-min", spec.n_min);
    sweep->add_option("--n-max", spec.n_max);
    sweep->add_option("--max-order", spec.max_order, "skip triples above this order");
    sweep->add_flag("--oracle", spec.use_oracle, "cross-check small graphs with the oracle");
    sweep->add_option("--oracle-max-order", spec.oracle_max_order);
    sweep->add_option("--oracle-budget", spec.oracle_budget);
    sweep->add_option("--csv", csv, "write the summary CSV here (default: stdout)");
    sweep->add_option("--out", out, "directory for per-triple report documents");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(t, format, out);
        if (classify->parsed()) return cmd_classify(t, use_oracle, budget, out);
        if (profile->parsed()) return cmd_profile(t);
        if (oracle->parsed()) return cmd_oracle(t, budget, out);
        if (sweep->parsed()) return cmd_sweep(spec, csv, out);
    } catch (const bouwer::BouwerError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
