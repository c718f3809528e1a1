#ifndef QPG_HYPERGRAPH_HPP
#define QPG_HYPERGRAPH_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qpg/errors.hpp"

namespace qpg {

/// Board of every positional game: vertices 1..num_vertices plus a
/// multiset of hyperedges with stable order. Edge members are distinct
/// and stored ascending. Empty hyperedges are representable.
struct Hypergraph {
    int num_vertices = 0;
    std::vector<std::vector<int>> edges;
    std::map<int, std::string> labels; // optional vertex labels

    /// Sorts, checks for duplicates/range, appends. Returns the edge index.
    int add_edge(std::vector<int> vertices);

    int rank() const;       // max edge size (0 for no edges)
    int max_degree() const; // max incident-edge count
    std::vector<int> degrees() const; // 1-based

    void validate() const;
    bool operator==(const Hypergraph&) const = default;
};

// Text format: header "p pos <n> <m>", then m lines of space-separated
// vertex ids terminated by 0; optional "c label <id> <text>" lines carry
// labels, other comment lines are ignored.
Hypergraph parse_hypergraph(std::string_view text);
std::string emit_hypergraph(const Hypergraph& h);

} // namespace qpg

#endif
