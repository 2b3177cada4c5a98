#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bouwer/cycles.hpp"

namespace bouwer {

// One of the 28 shapes a 3-arc rooted at the zero vertex can take, together
// with the free coordinate indices that instantiate it. Indices are
// 1-based (1..k-1); 0 means the slot is unused. with_d records whether the
// optional final displacement was taken, so (case_id, with_d, r, s, t)
// reconstructs the 3-arc exactly.
struct ThreeArcCase {
    int case_id = 0;
    bool with_d = false;
    int r = 0, s = 0, t = 0;
    bool ambiguous = false;  // several shapes matched (exceptional parameters only)

    bool operator==(const ThreeArcCase&) const = default;
};

class ThreeArcClassifier {
public:
    explicit ThreeArcClassifier(const GraphParams& p);

    // arc must be a 3-arc with first vertex (0,0). Returns nullopt when no
    // shape matches (possible only for exceptional parameters).
    std::optional<ThreeArcCase> classify(const SArc& arc) const;

    // Inverse of classify for unambiguous results.
    SArc reconstruct(const ThreeArcCase& c) const;

    // True if distinct shape instantiations collided on the same walk while
    // building the table (residue collisions for small m or n).
    bool had_collisions() const { return collisions_; }

    // Per-case 3-arc counts for generic parameters (m > 6, n > 7).
    static long long expected_case_count(int k, int case_id);

private:
    GraphParams params_;
    bool collisions_ = false;
    std::map<std::vector<VertexIndex>, std::vector<ThreeArcCase>> table_;
};

// Counts per case_id (key 0 collects unclassifiable arcs) over all 3-arcs
// rooted at the zero vertex.
std::map<int, long long> three_arc_census(const BouwerGraph& g, const ThreeArcClassifier& cls);

}  // namespace bouwer
