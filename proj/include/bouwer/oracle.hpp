#pragma once

#include <cstdint>
#include <optional>

#include "bouwer/symmetry.hpp"

namespace bouwer {

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

struct OracleResult {
    enum class Status { Reversible, NotReversible, BudgetExhausted };

    Status status = Status::BudgetExhausted;
    std::optional<VertexMap> witness;  // a full arc-reversing automorphism when found
    std::uint64_t nodes_explored = 0;

    bool reversible() const { return status == Status::Reversible; }
};

// Decides by exhaustive backtracking whether some automorphism swaps the
// zero vertex with (1,0). Images are assigned most-constrained-first over a
// BFS order from the seed edge, with exact adjacency consistency against
// the mapped region. Deterministic; the budget counts assignment attempts.
OracleResult oracle_arc_reversal(const BouwerGraph& g,
                                 std::uint64_t budget = kDefaultOracleBudget);

}  // namespace bouwer
