#include "bouwer/report.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bouwer {

namespace {

std::vector<std::pair<int, int>> bucket_sizes(const ExtensionProfile& p) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [count, verts] : p.buckets)
        if (!verts.empty()) out.emplace_back(count, static_cast<int>(verts.size()));
    return out;
}

}  // namespace

Report build_report(const BouwerGraph& g, const ReportOptions& opts) {
    const auto start = std::chrono::steady_clock::now();
    const GraphParams& p = g.params();

    Report r;
    r.k = p.k;
    r.m = p.m;
    r.n = p.n;
    r.order = p.order();
    r.valency = g.valency();
    r.degenerate = g.degenerate();
    r.girth = girth(g);
    r.bipartite = is_bipartite(g);

    const auto [pv, pw] = extension_profiles(g);
    r.buckets_v = bucket_sizes(pv);
    r.buckets_w = bucket_sizes(pw);

    const TSetTable table = t_set_table(g);
    for (const auto& [key, cell] : table.cells)
        r.tcells.emplace_back(key, static_cast<int>(cell.v_arcs.size()),
                              static_cast<int>(cell.w_arcs.size()));
    r.mismatches = mismatch_cells(table);

    r.predicted = to_string(predicted_verdict(p));

    // Stages 1 and 2 from the already-built table; the oracle result also
    // serves as an independent cross-check when enabled.
    std::optional<OracleResult> oracle;
    if (opts.use_oracle) {
        oracle = oracle_arc_reversal(g, opts.oracle_budget);
        switch (oracle->status) {
            case OracleResult::Status::Reversible: r.oracle = "reversible"; break;
            case OracleResult::Status::NotReversible: r.oracle = "not_reversible"; break;
            case OracleResult::Status::BudgetExhausted: r.oracle = "budget_exhausted"; break;
        }
        r.oracle_nodes = oracle->nodes_explored;
    }

    std::optional<Verdict> verdict;
    if (std::optional<VertexMap> map = explicit_reversal_map(p)) {
        const VertexIndex v = vertex_index(p, origin_vertex(p));
        Vertex wv = origin_vertex(p);
        wv.a = 1 % p.m;
        const VertexIndex w = vertex_index(p, wv);
        if (!verify_automorphism(g, *map) || map->apply(v) != w || map->apply(w) != v)
            throw BouwerError(ErrorCode::IntegrityViolation,
                              "explicit reversal map failed verification");
        Evidence e;
        e.type = Evidence::Type::ExplicitMap;
        e.map_name = map->name;
        verdict = Verdict{VerdictKind::ArcTransitive, e};
    } else if (std::optional<Verdict> cv = certificate_verdict(table)) {
        verdict = cv;
    } else if (oracle) {
        if (oracle->status == OracleResult::Status::Reversible)
            verdict = Verdict{VerdictKind::ArcTransitive, Evidence::of(Evidence::Type::OracleWitness)};
        else if (oracle->status == OracleResult::Status::NotReversible)
            verdict =
                Verdict{VerdictKind::HalfArcTransitive, Evidence::of(Evidence::Type::OracleExhaustive)};
    } else {
        verdict = Verdict{predicted_verdict(p), Evidence::of(Evidence::Type::PredictionOnly)};
    }

    if (verdict) {
        r.verdict = to_string(verdict->kind);
        r.evidence = verdict->evidence.to_string();
        r.agree = r.verdict == r.predicted;
    } else {
        r.verdict = "Undecided";
        r.evidence = "OracleBudgetExhausted";
        r.agree = false;
    }

    r.ms_elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

std::string serialize_report(const Report& r) {
    std::ostringstream os;
    os << "format: bouwer-report/1\n";
    os << "k: " << r.k << "\nm: " << r.m << "\nn: " << r.n << "\n";
    os << "order: " << r.order << "\nvalency: " << r.valency << "\n";
    os << "degenerate: " << (r.degenerate ? "true" : "false") << "\n";
    os << "girth: " << r.girth << "\n";
    os << "bipartite: " << (r.bipartite ? "true" : "false") << "\n";
    auto buckets = [&](const char* key, const std::vector<std::pair<int, int>>& b) {
        os << key << ":";
        for (const auto& [count, size] : b) os << " " << count << ":" << size;
        os << "\n";
    };
    buckets("buckets_v", r.buckets_v);
    buckets("buckets_w", r.buckets_w);
    for (const auto& [key, tv, tw] : r.tcells)
        os << "tcell: i1=" << key.i1 << " i2=" << key.i2 << " j=" << key.j << " tv=" << tv
           << " tw=" << tw << "\n";
    os << "mismatch_cells:";
    for (const TSetKey& key : r.mismatches) os << " " << key.i1 << "," << key.i2 << "," << key.j;
    os << "\n";
    os << "verdict: " << r.verdict << "\n";
    os << "evidence: " << r.evidence << "\n";
    os << "predicted: " << r.predicted << "\n";
    os << "agree: " << (r.agree ? "true" : "false") << "\n";
    os << "oracle: " << r.oracle << "\n";
    os << "oracle_nodes: " << r.oracle_nodes << "\n";
    os << "ms_elapsed: " << r.ms_elapsed << "\n";
    return os.str();
}

namespace {

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw std::invalid_argument("bad boolean: " + s);
}

}  // namespace

Report parse_report(const std::string& text) {
    Report r;
    std::istringstream is(text);
    std::string line;
    bool saw_format = false;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const size_t colon = line.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("bad report line: " + line);
        const std::string key = line.substr(0, colon);
        std::string value = line.substr(colon + 1);
        if (!value.empty() && value.front() == ' ') value.erase(0, 1);

        if (key == "format") {
            if (value != "bouwer-report/1") throw std::invalid_argument("unknown format: " + value);
            saw_format = true;
        } else if (key == "k") {
            r.k = std::stoi(value);
        } else if (key == "m") {
            r.m = std::stoi(value);
        } else if (key == "n") {
            r.n = std::stoi(value);
        } else if (key == "order") {
            r.order = std::stoll(value);
        } else if (key == "valency") {
            r.valency = std::stoi(value);
        } else if (key == "degenerate") {
            r.degenerate = parse_bool(value);
        } else if (key == "girth") {
            r.girth = std::stoi(value);
        } else if (key == "bipartite") {
            r.bipartite = parse_bool(value);
        } else if (key == "buckets_v" || key == "buckets_w") {
            std::vector<std::pair<int, int>> b;
            std::istringstream vs(value);
            std::string item;
            while (vs >> item) {
                const size_t sep = item.find(':');
                if (sep == std::string::npos) throw std::invalid_argument("bad bucket: " + item);
                b.emplace_back(std::stoi(item.substr(0, sep)), std::stoi(item.substr(sep + 1)));
            }
            (key == "buckets_v" ? r.buckets_v : r.buckets_w) = std::move(b);
        } else if (key == "tcell") {
            TSetKey cell;
            int tv = 0, tw = 0;
            if (std::sscanf(value.c_str(), "i1=%d i2=%d j=%d tv=%d tw=%d", &cell.i1, &cell.i2,
                            &cell.j, &tv, &tw) != 5)
                throw std::invalid_argument("bad tcell: " + value);
            r.tcells.emplace_back(cell, tv, tw);
        } else if (key == "mismatch_cells") {
            std::istringstream vs(value);
            std::string item;
            while (vs >> item) {
                TSetKey cell;
                if (std::sscanf(item.c_str(), "%d,%d,%d", &cell.i1, &cell.i2, &cell.j) != 3)
                    throw std::invalid_argument("bad mismatch cell: " + item);
                r.mismatches.push_back(cell);
            }
        } else if (key == "verdict") {
            r.verdict = value;
        } else if (key == "evidence") {
            r.evidence = value;
        } else if (key == "predicted") {
            r.predicted = value;
        } else if (key == "agree") {
            r.agree = parse_bool(value);
        } else if (key == "oracle") {
            r.oracle = value;
        } else if (key == "oracle_nodes") {
            r.oracle_nodes = std::stoull(value);
        } else if (key == "ms_elapsed") {
            r.ms_elapsed = std::stoll(value);
        } else {
            throw std::invalid_argument("unknown report key: " + key);
        }
    }
    if (!saw_format) throw std::invalid_argument("missing format line");
    return r;
}

std::string csv_header() {
    return "k,m,n,order,girth,bipartite,verdict,evidence,predicted,agree,mismatch_cells,oracle,"
           "oracle_nodes,ms_elapsed";
}

namespace {

std::string cells_field(const std::vector<TSetKey>& cells) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(cells[i].i1) + "." + std::to_string(cells[i].i2) + "." +
               std::to_string(cells[i].j);
    }
    return out;
}

}  // namespace

std::string csv_row(const Report& r) {
    std::ostringstream os;
    os << r.k << ',' << r.m << ',' << r.n << ',' << r.order << ',' << r.girth << ','
       << (r.bipartite ? "true" : "false") << ',' << r.verdict << ',' << r.evidence << ','
       << r.predicted << ',' << (r.agree ? "true" : "false") << ',' << cells_field(r.mismatches)
       << ',' << r.oracle << ',' << r.oracle_nodes << ',' << r.ms_elapsed;
    return os.str();
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    std::vector<std::tuple<int, int, int>> triples;
    for (int k = spec.k_min; k <= spec.k_max; ++k)
        for (int m = spec.m_min; m <= spec.m_max; ++m)
            for (int n = spec.n_min; n <= spec.n_max; ++n) {
                if (k < 2 || m < 2 || n < 2) continue;
                if (mod_pow(2, m, n) != 1) continue;
                double approx = static_cast<double>(m);
                for (int i = 1; i < k; ++i) approx *= n;
                if (approx > static_cast<double>(spec.max_order)) continue;
                triples.emplace_back(k, m, n);
            }

    std::vector<SweepRow> rows(triples.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(triples.size()); ++i) {
        const auto [k, m, n] = triples[static_cast<size_t>(i)];
        SweepRow& row = rows[static_cast<size_t>(i)];
        row.k = k;
        row.m = m;
        row.n = n;
        try {
            const GraphParams p = validate_params(k, m, n);
            const BouwerGraph g = BouwerGraph::build(p);
            ReportOptions opts;
            opts.use_oracle = spec.use_oracle && p.order() <= spec.oracle_max_order;
            opts.oracle_budget = spec.oracle_budget;
            row.report = build_report(g, opts);
        } catch (const std::exception& e) {
            row.error = e.what();
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << csv_header() << '\n';
    for (const SweepRow& row : rows) {
        if (row.failed()) {
            os << row.k << ',' << row.m << ',' << row.n << ",,,,"
               << "Error," << row.error << ",,false,,,,\n";
        } else {
            os << csv_row(row.report) << '\n';
        }
    }
}

}  // namespace bouwer
