#pragma once

#include <iosfwd>
#include <string>

#include "bouwer/graph.hpp"

namespace bouwer {

// One edge per line, "i j" with i < j, rows sorted lexicographically.
void write_edge_list(std::ostream& os, const BouwerGraph& g);

// One vertex per line, "index: (a; b_1,...,b_{k-1})", ascending index.
void write_vertex_labels(std::ostream& os, const GraphParams& p);

std::string edge_list_string(const BouwerGraph& g);
std::string vertex_labels_string(const GraphParams& p);

}  // namespace bouwer
