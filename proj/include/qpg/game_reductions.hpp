#ifndef QPG_GAME_REDUCTIONS_HPP
#define QPG_GAME_REDUCTIONS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "qpg/formula.hpp"
#include "qpg/game.hpp"
#include "qpg/hypergraph.hpp"

#include "json.hpp"

namespace qpg {

// Gadget-level constructions behind the bounded-degree hardness results,
// with full provenance so verifiers and strategy extractors can reason
// about individual gadgets. All constructions are deterministic.

// --- Avoider-Enforcer -------------------------------------------------

/// Vertex/edge bookkeeping of the Avoider-Enforcer gadget. Only u-indices
/// actually referenced by the hyperedge formulas are allocated.
struct AeTrace {
    int n = 0;                        // source has 2n variables
    std::vector<int> pos_vertex;      // x_p, index p = 1..2n (slot 0 unused)
    std::vector<int> neg_vertex;      // complement vertex of position p
    std::map<int, int> u_vertex;      // u-index -> vertex id
    std::vector<int> a_edges;         // per i: A_{2i}
    std::vector<int> b_edges;         // per i: B_{2i-1}
    std::vector<std::array<int, 6>> c_edges; // per i: C+/-_{6i}, C+/-_{6i-2}, C+/-_{6i-4}
    std::vector<int> d_edges;         // per clause
};

struct AeResult {
    Hypergraph graph;
    AeTrace trace;
};

/// Builds the Avoider-Enforcer board of a bounded-degree alternating
/// formula: one vertex per literal, the block of 8 structural hyperedges
/// per variable pair, and one clause hyperedge per clause whose literal
/// vertices are joined by their u-companions (u_{3p+1} for even position
/// p, u_{3p+2} for odd p). Requires rank <= 3, degree <= 3, a strictly
/// alternating exists-first prefix of even length, and clauses without
/// repeated variables or emptiness. Output: rank <= 6, max degree <= 8.
AeResult qbf3_to_avoider_enforcer(const QbfFormula& f);

// --- Client-Waiter ----------------------------------------------------

struct CwTrace {
    int n = 0;                                    // pair count
    std::vector<std::array<int, 4>> s_vertices;   // s_i^0, s_i^T, s_i^F, s_i^1
    std::vector<std::array<int, 4>> f_vertices;   // f_i^0, f_i^T, f_i^T', f_i^F
    std::vector<std::vector<int>> block_edges;    // 8 per pair
    std::vector<std::array<int, 4>> pair_edges;   // 4 per pair
    std::vector<std::vector<int>> clause_edges;   // per clause
};

struct CwResult {
    Hypergraph graph;
    CwTrace trace;
};

/// True when some clause holds only Falsifier (second-position) variables;
/// such instances are Falsifier wins outright and are rejected by the
/// constructor, so callers check this first.
bool has_falsifier_only_clause(const PairedSatInstance& inst);

/// Builds the Client-Waiter board of a Paired SAT instance: 8 vertices per
/// pair, all 3-subsets of each block, the 4 pair-hyperedges, and per
/// clause the product expansion over the per-literal vertex sets. Requires
/// degree <= 7, clause size <= 3, no tautological clause and no
/// Falsifier-only clause. Output: 8n vertices, rank <= 6, degree <= 35.
CwResult paired_sat_to_client_waiter(const PairedSatInstance& inst);

// --- Maker-Breaker ----------------------------------------------------

/// One binary forcing tree: heap-shaped (children of node j are 2j+1 and
/// 2j+2), every internal node has two children, node 0 is the root. Each
/// node carries a pair (v, w) and the companions (a, b) that force claims
/// of v and w: the root's companions sit in the hyperedges {x, a, v} and
/// {x, b, w}, a non-root node's companions in the two hyperedges shared
/// with its parent pair.
struct MbTree {
    std::vector<int> v, w, a, b;                    // per node
    std::vector<std::array<int, 2>> node_edges;     // per node: the two forcing hyperedge ids
    int leaf_begin = 0;

    int node_count() const { return static_cast<int>(v.size()); }
    int parent(int j) const { return (j - 1) / 2; }
    bool is_leaf(int j) const { return j >= leaf_begin; }
};

struct MbBigEdge {
    int source_edge = 0;              // index into the (stripped) source edge list
    std::vector<int> eps;             // choice vector, one entry in {1,2} per slot
    int edge_id = 0;                  // index into the output edge list
    std::vector<std::pair<int, int>> slot_leaf; // per slot: (stripped vertex, leaf node index)
};

struct MbGadgetTrace {
    std::vector<int> kept_vertices;   // original ids surviving the isolated-vertex strip
    std::vector<int> x_vertex;        // per kept vertex
    std::vector<std::array<MbTree, 2>> trees; // per kept vertex: T^1, T^2
    std::vector<MbBigEdge> big_edges;
    std::vector<int> vertex_gadget;   // per output vertex (1-based): 0-based kept index
    std::vector<int> vertex_side;     // per output vertex: 0 for x_i, else tree 1 or 2
};

struct MbResult {
    Hypergraph source_stripped; // contiguously renumbered, isolated vertices gone
    Hypergraph graph;
    MbGadgetTrace trace;
};

/// Degree-reduction gadget for Maker-Breaker. Requires rank <= 6. Each
/// kept source vertex becomes a connector x_i plus two forcing trees whose
/// leaf pairs substitute into the 2^|e| expanded copies of each source
/// hyperedge, one dedicated leaf pair per (expanded hyperedge, slot).
/// Output: rank <= 12, max degree <= 5.
MbResult mb_to_bounded_degree(const Hypergraph& h);

/// Disjoint vertex pairs plus optional singleton claims. A hyperedge is
/// covered when it contains both elements of some pair or a singleton.
struct Pairing {
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> singletons;
};

struct PairingCheck {
    Pairing pairing;
    std::vector<int> uncovered_edges; // output edge indices not covered
};

/// The proof's Breaker pairing for a set of source vertices he claimed:
/// (v, w) at every node of both trees of a claimed gadget plus the
/// singleton x_i, and (v, a) / (w, b) at every node of an unclaimed
/// gadget. Coverage gaps are reported, never thrown: expanded hyperedges
/// stay uncovered whenever the claimed set misses their source hyperedge.
PairingCheck breaker_pairing(const Hypergraph& out, const MbGadgetTrace& trace,
                             const std::set<int>& breaker_source_vertices);

enum class BreakerPolicy { Random, GreedyBlock };

struct PlayoutRecord {
    std::vector<std::pair<Player, int>> moves;
    bool maker_won = false;
    std::string defect; // empty on a clean win
};

/// Simulates the proof's Maker strategy on the output board: connector
/// claims mirror the source strategy, a Breaker intrusion into a claimed
/// gadget triggers a root-to-leaves sweep of the opposite tree (v before
/// w, each claim forcing a companion), and any ignored forced reply is
/// converted into an immediate win. Throws when the source strategy turns
/// out not to be a Maker-winning strategy mid-playout.
PlayoutRecord maker_forcing_playout(const Hypergraph& source, const Hypergraph& out,
                                    const MbGadgetTrace& trace,
                                    const StrategyTree& source_strategy,
                                    BreakerPolicy policy, std::uint64_t seed);

// --- Maker-Maker ------------------------------------------------------

struct MmTrace {
    int source_vertices = 0;
    std::vector<std::array<int, 2>> pair_vertices; // per source edge: {x_i, y_i}
    std::vector<int> widened_edges;                // per source edge: output id of e_i + x_i
    std::vector<int> pair_edges;                   // per source edge: output id of {x_i, y_i}
};

struct MmResult {
    Hypergraph graph;
    MmTrace trace;
};

/// Maker-Breaker -> Maker-Maker: copies the board, inserts a fresh x_i
/// into each hyperedge e_i and adds the pair hyperedge {x_i, y_i}.
/// Output: rank(h) + 1, max degree max(degree(h), 2), |V| + 2m vertices,
/// 2m hyperedges.
MmResult mb_to_maker_maker(const Hypergraph& h);

void to_json(nlohmann::json& j, const AeTrace& t);
void to_json(nlohmann::json& j, const CwTrace& t);
void to_json(nlohmann::json& j, const MbGadgetTrace& t);
void to_json(nlohmann::json& j, const MmTrace& t);

} // namespace qpg

#endif
