#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bouwer/cycles.hpp"
#include "bouwer/oracle.hpp"

namespace bouwer {

enum class ArcDirection { FromV, FromW };

// For one direction of the arc between the zero vertex v and w = (1,0):
// every proper extension x of the 2-arc, bucketed by the number of 6-cycles
// the 2-arc lies in.
struct ExtensionProfile {
    ArcDirection direction = ArcDirection::FromV;
    std::map<int, std::vector<VertexIndex>> buckets;  // count -> sorted extensions

    std::vector<int> occurring_counts() const;
    int total_extensions() const;
};

std::pair<ExtensionProfile, ExtensionProfile> extension_profiles(const BouwerGraph& g);

// Cell key of the generalized two-sided table: a 6-cycle through the edge
// {v,w}, read as v~w~x~y~z~u~v, falls in (i1,i2) = (bucket of x, bucket of
// u); the harvested 2-arc v~u~z is then filed under its own 6-cycle count j.
// The w side is built from the reversed reading w~v~x'~y'~z'~u'~w.
struct TSetKey {
    int i1 = 0, i2 = 0, j = 0;
    auto operator<=>(const TSetKey&) const = default;
};

struct TSetCell {
    std::vector<std::pair<VertexIndex, VertexIndex>> v_arcs;  // (u,z), sorted unique
    std::vector<std::pair<VertexIndex, VertexIndex>> w_arcs;  // (u',z'), sorted unique
};

struct TSetTable {
    std::map<TSetKey, TSetCell> cells;

    std::pair<int, int> cell_sizes(const TSetKey& key) const;
};

TSetTable t_set_table(const BouwerGraph& g);

// Keys whose two sides have different cardinality, in key order.
std::vector<TSetKey> mismatch_cells(const TSetTable& t);

enum class VerdictKind { ArcTransitive, HalfArcTransitive };

struct Evidence {
    enum class Type {
        ExplicitMap,          // a verified closed-form arc reversal
        CertificateMismatch,  // unbalanced T-set cell
        OracleWitness,
        OracleExhaustive,
        PredictionOnly,  // no certificate fired and the oracle was not run
    };

    Type type = Type::PredictionOnly;
    std::string map_name;  // ExplicitMap
    TSetKey cell;          // CertificateMismatch
    int tv = 0, tw = 0;    // CertificateMismatch

    static Evidence of(Type t) {
        Evidence e;
        e.type = t;
        return e;
    }

    std::string to_string() const;
};

struct Verdict {
    VerdictKind kind = VerdictKind::HalfArcTransitive;
    Evidence evidence;
};

// HalfArcTransitive with the first unbalanced cell, or nullopt when the
// table is balanced. Balance decides nothing: the certificate is
// one-directional.
std::optional<Verdict> certificate_verdict(const TSetTable& t);
std::optional<Verdict> certificate_verdict(const BouwerGraph& g);

// The classification the headline theorem predicts from the parameters
// alone.
VerdictKind predicted_verdict(const GraphParams& p);

struct ClassifyOptions {
    bool use_oracle = false;
    std::uint64_t oracle_budget = kDefaultOracleBudget;
};

// Pipeline: (1) explicit reversal map for the parameter family, verified on
// the graph; (2) certificate mismatch; (3) with use_oracle, the exhaustive
// search; otherwise the prediction, flagged as such. nullopt means the
// oracle ran out of budget with everything else inconclusive.
std::optional<Verdict> classify(const BouwerGraph& g, const ClassifyOptions& opts = {});

std::string to_string(VerdictKind k);
std::string to_string(const TSetKey& key);

}  // namespace bouwer
