#include "bouwer/io.hpp"

#include <ostream>
#include <sstream>

namespace bouwer {

void write_edge_list(std::ostream& os, const BouwerGraph& g) {
    for (VertexIndex v = 0; v < g.order(); ++v)
        for (VertexIndex u : g.neighbors_of(v))
            if (v < u) os << v << ' ' << u << '\n';
}

void write_vertex_labels(std::ostream& os, const GraphParams& p) {
    const long long order = p.order();
    for (long long i = 0; i < order; ++i)
        os << i << ": " << format_vertex(vertex_at(p, static_cast<VertexIndex>(i))) << '\n';
}

std::string edge_list_string(const BouwerGraph& g) {
    std::ostringstream os;
    write_edge_list(os, g);
    return os.str();
}

std::string vertex_labels_string(const GraphParams& p) {
    std::ostringstream os;
    write_vertex_labels(os, p);
    return os.str();
}

}  // namespace bouwer
