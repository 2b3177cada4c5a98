#pragma once

#include <map>
#include <optional>

#include "bouwer/cycles.hpp"

namespace bouwer {

// One of the 16 shapes a 6-cycle through the zero vertex can take, up to
// reversal, with its free coordinate indices (1-based, 0 = unused).
struct SixCycleForm {
    int form_id = 0;
    int r = 0, s = 0, t = 0;
    bool ambiguous = false;  // matched under more than one form_id

    bool operator==(const SixCycleForm&) const = default;
};

class SixCycleMatcher {
public:
    explicit SixCycleMatcher(const GraphParams& p);

    // cycle must pass through the zero vertex. Matching is up to
    // rotation/reversal; returns nullopt when no form fits (possible only
    // for exceptional parameters).
    std::optional<SixCycleForm> match(const Cycle& cycle) const;

    // A canonical cycle realizing the form.
    Cycle reconstruct(const SixCycleForm& f) const;

    bool had_collisions() const { return collisions_; }

    // Distinct 6-cycles contributed by a form for generic parameters.
    // Forms whose reversal is the same form with permuted indices
    // contribute half of their index instantiations.
    static long long expected_form_count(int k, int form_id);

private:
    GraphParams params_;
    bool collisions_ = false;
    std::map<Cycle, std::vector<SixCycleForm>> table_;
};

// form_id -> number of enumerated cycles through the zero vertex matching
// it; key 0 collects unmatched cycles.
std::map<int, long long> six_cycle_form_census(const BouwerGraph& g, const SixCycleMatcher& m);

}  // namespace bouwer
