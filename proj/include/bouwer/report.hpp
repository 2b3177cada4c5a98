#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "bouwer/certify.hpp"

namespace bouwer {

// Everything the harness records about one triple. Self-contained; the
// serialized form is a line-oriented key-value document that parses back to
// an equal Report.
struct Report {
    int k = 0, m = 0, n = 0;
    long long order = 0;
    int valency = 0;
    bool degenerate = false;
    int girth = 0;
    bool bipartite = false;
    std::vector<std::pair<int, int>> buckets_v;  // (6-cycle count, bucket size)
    std::vector<std::pair<int, int>> buckets_w;
    std::vector<std::tuple<TSetKey, int, int>> tcells;  // (cell, |T_v|, |T_w|)
    std::vector<TSetKey> mismatches;
    std::string verdict;    // ArcTransitive | HalfArcTransitive | Undecided
    std::string evidence;
    std::string predicted;  // ArcTransitive | HalfArcTransitive
    bool agree = false;
    std::string oracle = "not_run";  // not_run | reversible | not_reversible | budget_exhausted
    std::uint64_t oracle_nodes = 0;
    std::int64_t ms_elapsed = 0;

    bool operator==(const Report&) const = default;
};

struct ReportOptions {
    bool use_oracle = false;  // stage-3 fallback and independent cross-check
    std::uint64_t oracle_budget = kDefaultOracleBudget;
};

Report build_report(const BouwerGraph& g, const ReportOptions& opts = {});

std::string serialize_report(const Report& r);
Report parse_report(const std::string& text);  // throws std::invalid_argument

std::string csv_header();
std::string csv_row(const Report& r);

// Inclusive parameter ranges swept in (k,m,n) lexicographic order; only
// triples accepted by validation and within max_order become rows.
struct SweepSpec {
    int k_min = 2, k_max = 4;
    int m_min = 2, m_max = 12;
    int n_min = 3, n_max = 63;
    long long max_order = 2000;
    bool use_oracle = false;
    long long oracle_max_order = 200;
    std::uint64_t oracle_budget = kDefaultOracleBudget;
};

struct SweepRow {
    int k = 0, m = 0, n = 0;
    Report report;
    std::string error;  // nonempty if the row failed; report is then partial

    bool failed() const { return !error.empty(); }
};

// Rows computed independently (in parallel when OpenMP is available) and
// returned in deterministic (k,m,n) order.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace bouwer
