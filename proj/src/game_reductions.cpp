#include "qpg/game_reductions.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <set>

namespace qpg {

// --- Avoider-Enforcer -------------------------------------------------

AeResult qbf3_to_avoider_enforcer(const QbfFormula& f) {
    f.validate();
    if (f.prefix.empty() || f.prefix.size() % 2 != 0)
        throw PreconditionError("prefix must alternate exists/forall over an even variable count");
    int n = static_cast<int>(f.prefix.size()) / 2;
    for (int i = 0; i < n; ++i) {
        if (f.prefix[static_cast<size_t>(2 * i)].q != Quantifier::Exists ||
            f.prefix[static_cast<size_t>(2 * i + 1)].q != Quantifier::Forall)
            throw PreconditionError("prefix must be exists-first strictly alternating");
    }
    DegreeProfile prof = degree_profile(f.matrix);
    if (prof.rank > 3) throw PreconditionError("rank " + std::to_string(prof.rank) + " > 3");
    if (prof.max_degree > 3)
        throw PreconditionError("degree " + std::to_string(prof.max_degree) + " > 3");
    for (size_t j = 0; j < f.matrix.clauses.size(); ++j) {
        if (f.matrix.clauses[j].empty())
            throw PreconditionError("clause " + std::to_string(j + 1) + " is empty");
        if (f.matrix.clauses[j].tautological())
            throw PreconditionError("clause " + std::to_string(j + 1) + " repeats a variable");
    }

    // Position of each variable in the prefix (the construction indexes
    // variables by play position, not id).
    std::vector<int> pos_of(static_cast<size_t>(f.matrix.num_vars) + 1, 0);
    for (size_t p = 0; p < f.prefix.size(); ++p)
        pos_of[static_cast<size_t>(f.prefix[p].var)] = static_cast<int>(p) + 1;

    AeResult out;
    AeTrace& tr = out.trace;
    tr.n = n;
    Hypergraph& h = out.graph;

    tr.pos_vertex.assign(static_cast<size_t>(2 * n) + 1, 0);
    tr.neg_vertex.assign(static_cast<size_t>(2 * n) + 1, 0);
    for (int p = 1; p <= 2 * n; ++p) {
        tr.pos_vertex[static_cast<size_t>(p)] = 2 * p - 1;
        tr.neg_vertex[static_cast<size_t>(p)] = 2 * p;
    }

    // Only u-indices referenced by the hyperedge formulas exist.
    std::set<int> u_indices;
    for (int i = 1; i <= n; ++i) {
        for (int idx : {6 * i - 4, 6 * i - 3, 6 * i - 2, 6 * i - 1, 6 * i, 6 * i + 1, 6 * i + 3})
            u_indices.insert(idx);
    }
    int next = 4 * n;
    for (int idx : u_indices) tr.u_vertex[idx] = ++next;
    h.num_vertices = next;
    for (int p = 1; p <= 2 * n; ++p) {
        h.labels[tr.pos_vertex[static_cast<size_t>(p)]] = "x" + std::to_string(p);
        h.labels[tr.neg_vertex[static_cast<size_t>(p)]] = "~x" + std::to_string(p);
    }
    for (auto [idx, v] : tr.u_vertex) h.labels[v] = "u" + std::to_string(idx);

    auto u = [&tr](int idx) { return tr.u_vertex.at(idx); };
    auto xv = [&tr](int p) { return tr.pos_vertex[static_cast<size_t>(p)]; };
    auto xn = [&tr](int p) { return tr.neg_vertex[static_cast<size_t>(p)]; };

    for (int i = 1; i <= n; ++i) {
        tr.a_edges.push_back(h.add_edge({xv(2 * i), xn(2 * i), u(6 * i + 1), u(6 * i + 3)}));
        tr.b_edges.push_back(h.add_edge({xv(2 * i - 1), xn(2 * i - 1), u(6 * i - 1)}));
        std::array<int, 6> cs{};
        cs[0] = h.add_edge({u(6 * i), u(6 * i + 1), u(6 * i + 3), xv(2 * i)});
        cs[1] = h.add_edge({u(6 * i), u(6 * i + 1), u(6 * i + 3), xn(2 * i)});
        cs[2] = h.add_edge({u(6 * i - 2), u(6 * i - 1), u(6 * i + 1), xv(2 * i)});
        cs[3] = h.add_edge({u(6 * i - 2), u(6 * i - 1), u(6 * i + 1), xn(2 * i)});
        cs[4] = h.add_edge({u(6 * i - 4), u(6 * i - 3), u(6 * i - 1), xv(2 * i - 1)});
        cs[5] = h.add_edge({u(6 * i - 4), u(6 * i - 3), u(6 * i - 1), xn(2 * i - 1)});
        tr.c_edges.push_back(cs);
    }

    // Clause hyperedges: the literal vertex plus its u-companion,
    // u_{3p+1} for even position p and u_{3p+2} for odd p.
    for (const Clause& c : f.matrix.clauses) {
        std::vector<int> members;
        for (Lit l : c.lits) {
            int p = pos_of[static_cast<size_t>(var_of(l))];
            members.push_back(positive(l) ? xv(p) : xn(p));
            members.push_back(p % 2 == 0 ? u(3 * p + 1) : u(3 * p + 2));
        }
        tr.d_edges.push_back(h.add_edge(std::move(members)));
    }
    return out;
}

// --- Client-Waiter ----------------------------------------------------

bool has_falsifier_only_clause(const PairedSatInstance& inst) {
    std::vector<char> is_second(static_cast<size_t>(inst.matrix.num_vars) + 1, 0);
    for (const auto& [a, b] : inst.pairs) is_second[static_cast<size_t>(b)] = 1;
    for (const Clause& c : inst.matrix.clauses) {
        bool all_second = !c.empty();
        for (Var v : c.variables()) {
            if (!is_second[static_cast<size_t>(v)]) all_second = false;
        }
        if (all_second) return true;
    }
    return false;
}

CwResult paired_sat_to_client_waiter(const PairedSatInstance& inst) {
    inst.validate();
    DegreeProfile prof = degree_profile(inst.matrix);
    if (prof.max_degree > 7)
        throw PreconditionError("degree " + std::to_string(prof.max_degree) + " > 7");
    for (size_t j = 0; j < inst.matrix.clauses.size(); ++j) {
        if (inst.matrix.clauses[j].size() > 3)
            throw PreconditionError("clause " + std::to_string(j + 1) + " has more than 3 literals");
        if (inst.matrix.clauses[j].tautological())
            throw PreconditionError("clause " + std::to_string(j + 1) + " is tautological");
        if (inst.matrix.clauses[j].empty())
            throw PreconditionError("clause " + std::to_string(j + 1) + " is empty");
    }
    if (has_falsifier_only_clause(inst))
        throw PreconditionError("a clause holds only Falsifier variables; the instance is a "
                                "Falsifier win outright");

    int n = static_cast<int>(inst.pairs.size());
    CwResult out;
    CwTrace& tr = out.trace;
    tr.n = n;
    Hypergraph& h = out.graph;
    h.num_vertices = 8 * n;

    // Pair i occupies vertices 8(i-1)+1..8(i-1)+8: s0 sT sF s1 f0 fT fT' fF.
    for (int i = 0; i < n; ++i) {
        int base = 8 * i;
        tr.s_vertices.push_back({base + 1, base + 2, base + 3, base + 4});
        tr.f_vertices.push_back({base + 5, base + 6, base + 7, base + 8});
        std::string si = std::to_string(i + 1);
        h.labels[base + 1] = "s" + si + "0";
        h.labels[base + 2] = "s" + si + "T";
        h.labels[base + 3] = "s" + si + "F";
        h.labels[base + 4] = "s" + si + "1";
        h.labels[base + 5] = "f" + si + "0";
        h.labels[base + 6] = "f" + si + "T";
        h.labels[base + 7] = "f" + si + "T'";
        h.labels[base + 8] = "f" + si + "F";
    }

    // Which pair/position each variable belongs to.
    std::vector<int> pair_of(static_cast<size_t>(inst.matrix.num_vars) + 1, -1);
    std::vector<char> is_second(static_cast<size_t>(inst.matrix.num_vars) + 1, 0);
    for (int i = 0; i < n; ++i) {
        pair_of[static_cast<size_t>(inst.pairs[static_cast<size_t>(i)].first)] = i;
        pair_of[static_cast<size_t>(inst.pairs[static_cast<size_t>(i)].second)] = i;
        is_second[static_cast<size_t>(inst.pairs[static_cast<size_t>(i)].second)] = 1;
    }

    for (int i = 0; i < n; ++i) {
        const auto& s = tr.s_vertices[static_cast<size_t>(i)];
        const auto& fv = tr.f_vertices[static_cast<size_t>(i)];
        std::vector<int> blocks;
        for (const auto& quad : {s, fv}) {
            for (int skip = 3; skip >= 0; --skip) {
                std::vector<int> members;
                for (int k = 0; k < 4; ++k) {
                    if (k != skip) members.push_back(quad[static_cast<size_t>(k)]);
                }
                blocks.push_back(h.add_edge(std::move(members)));
            }
        }
        tr.block_edges.push_back(std::move(blocks));
        std::array<int, 4> pe{};
        pe[0] = h.add_edge({s[0], s[1], fv[0], fv[1]});
        pe[1] = h.add_edge({s[0], fv[3], fv[1], s[2]});
        pe[2] = h.add_edge({s[0], fv[3], s[1], fv[2]});
        pe[3] = h.add_edge({s[0], s[2], fv[0], fv[2]});
        tr.pair_edges.push_back(pe);
    }

    // Clause hyperedges: product of the per-literal vertex sets.
    for (const Clause& c : inst.matrix.clauses) {
        std::vector<std::vector<std::vector<int>>> options;
        for (Lit l : c.lits) {
            int i = pair_of[static_cast<size_t>(var_of(l))];
            const auto& s = tr.s_vertices[static_cast<size_t>(i)];
            const auto& fv = tr.f_vertices[static_cast<size_t>(i)];
            if (!is_second[static_cast<size_t>(var_of(l))]) {
                if (positive(l)) options.push_back({{s[0], s[1]}});
                else options.push_back({{s[0], s[2]}});
            } else {
                if (positive(l)) options.push_back({{fv[0], fv[1]}, {fv[0], fv[2]}});
                else options.push_back({{fv[3]}});
            }
        }
        std::vector<std::vector<int>> unions{{}};
        for (const auto& opts : options) {
            std::vector<std::vector<int>> grown;
            for (const auto& base : unions) {
                for (const auto& opt : opts) {
                    std::vector<int> u = base;
                    u.insert(u.end(), opt.begin(), opt.end());
                    grown.push_back(std::move(u));
                }
            }
            unions = std::move(grown);
        }
        std::vector<int> ids;
        std::vector<std::vector<int>> seen;
        for (auto& members : unions) {
            std::sort(members.begin(), members.end());
            members.erase(std::unique(members.begin(), members.end()), members.end());
            if (std::find(seen.begin(), seen.end(), members) != seen.end()) continue;
            seen.push_back(members);
            ids.push_back(h.add_edge(std::move(members)));
        }
        tr.clause_edges.push_back(std::move(ids));
    }
    return out;
}

// --- Maker-Breaker ----------------------------------------------------

MbResult mb_to_bounded_degree(const Hypergraph& h) {
    h.validate();
    if (h.rank() > 6) throw PreconditionError("rank " + std::to_string(h.rank()) + " > 6");

    MbResult out;
    MbGadgetTrace& tr = out.trace;

    // Strip isolated vertices (recorded via kept_vertices).
    std::vector<int> deg = h.degrees();
    std::vector<int> remap(static_cast<size_t>(h.num_vertices) + 1, 0);
    for (int v = 1; v <= h.num_vertices; ++v) {
        if (deg[static_cast<size_t>(v)] > 0) {
            tr.kept_vertices.push_back(v);
            remap[static_cast<size_t>(v)] = static_cast<int>(tr.kept_vertices.size());
        }
    }
    out.source_stripped.num_vertices = static_cast<int>(tr.kept_vertices.size());
    for (const auto& e : h.edges) {
        std::vector<int> members;
        for (int v : e) members.push_back(remap[static_cast<size_t>(v)]);
        out.source_stripped.add_edge(std::move(members));
    }

    const Hypergraph& src = out.source_stripped;
    int K = src.num_vertices;
    Hypergraph& g = out.graph;

    // Leaves per tree: one dedicated leaf pair per (expanded hyperedge, slot).
    std::vector<int> leaves(static_cast<size_t>(K) + 1, 0);
    for (const auto& e : src.edges) {
        for (int v : e)
            leaves[static_cast<size_t>(v)] += 1 << (e.size() - 1);
    }

    tr.x_vertex.assign(static_cast<size_t>(K), 0);
    tr.trees.resize(static_cast<size_t>(K));
    int next = 0;
    for (int i = 1; i <= K; ++i) {
        tr.x_vertex[static_cast<size_t>(i - 1)] = ++next;
        g.labels[next] = "x" + std::to_string(tr.kept_vertices[static_cast<size_t>(i - 1)]);
        for (int eps = 0; eps < 2; ++eps) {
            MbTree& t = tr.trees[static_cast<size_t>(i - 1)][static_cast<size_t>(eps)];
            int L = leaves[static_cast<size_t>(i)];
            int nodes = L <= 1 ? 1 : 2 * L - 1;
            t.leaf_begin = L <= 1 ? 0 : L - 1;
            t.v.resize(static_cast<size_t>(nodes));
            t.w.resize(static_cast<size_t>(nodes));
            t.a.resize(static_cast<size_t>(nodes));
            t.b.resize(static_cast<size_t>(nodes));
            t.node_edges.resize(static_cast<size_t>(nodes));
            std::string tag = std::to_string(tr.kept_vertices[static_cast<size_t>(i - 1)]) + "." +
                              std::to_string(eps + 1) + ".";
            for (int j = 0; j < nodes; ++j) {
                t.v[static_cast<size_t>(j)] = ++next;
                t.w[static_cast<size_t>(j)] = ++next;
                t.a[static_cast<size_t>(j)] = ++next;
                t.b[static_cast<size_t>(j)] = ++next;
                g.labels[t.v[static_cast<size_t>(j)]] = "v" + tag + std::to_string(j);
                g.labels[t.w[static_cast<size_t>(j)]] = "w" + tag + std::to_string(j);
                g.labels[t.a[static_cast<size_t>(j)]] = "a" + tag + std::to_string(j);
                g.labels[t.b[static_cast<size_t>(j)]] = "b" + tag + std::to_string(j);
            }
        }
    }
    g.num_vertices = next;

    tr.vertex_gadget.assign(static_cast<size_t>(next) + 1, -1);
    tr.vertex_side.assign(static_cast<size_t>(next) + 1, 0);
    for (int i = 0; i < K; ++i) {
        tr.vertex_gadget[static_cast<size_t>(tr.x_vertex[static_cast<size_t>(i)])] = i;
        for (int eps = 0; eps < 2; ++eps) {
            const MbTree& t = tr.trees[static_cast<size_t>(i)][static_cast<size_t>(eps)];
            for (int j = 0; j < t.node_count(); ++j) {
                for (int v : {t.v[static_cast<size_t>(j)], t.w[static_cast<size_t>(j)],
                              t.a[static_cast<size_t>(j)], t.b[static_cast<size_t>(j)]}) {
                    tr.vertex_gadget[static_cast<size_t>(v)] = i;
                    tr.vertex_side[static_cast<size_t>(v)] = eps + 1;
                }
            }
        }
    }

    // Forcing hyperedges: {x, a, v} and {x, b, w} at the root, and per tree
    // edge {v_par, w_par, v_j, a_j} / {v_par, w_par, w_j, b_j}.
    for (int i = 0; i < K; ++i) {
        for (int eps = 0; eps < 2; ++eps) {
            MbTree& t = tr.trees[static_cast<size_t>(i)][static_cast<size_t>(eps)];
            for (int j = 0; j < t.node_count(); ++j) {
                if (j == 0) {
                    int x = tr.x_vertex[static_cast<size_t>(i)];
                    t.node_edges[0][0] = g.add_edge({x, t.a[0], t.v[0]});
                    t.node_edges[0][1] = g.add_edge({x, t.b[0], t.w[0]});
                } else {
                    int p = t.parent(j);
                    t.node_edges[static_cast<size_t>(j)][0] = g.add_edge(
                        {t.v[static_cast<size_t>(p)], t.w[static_cast<size_t>(p)],
                         t.v[static_cast<size_t>(j)], t.a[static_cast<size_t>(j)]});
                    t.node_edges[static_cast<size_t>(j)][1] = g.add_edge(
                        {t.v[static_cast<size_t>(p)], t.w[static_cast<size_t>(p)],
                         t.w[static_cast<size_t>(j)], t.b[static_cast<size_t>(j)]});
                }
            }
        }
    }

    // Expanded hyperedges: per source hyperedge and choice vector, the
    // dedicated leaf pairs of the chosen trees.
    std::vector<std::array<int, 2>> used(static_cast<size_t>(K) + 1, {0, 0});
    for (size_t ei = 0; ei < src.edges.size(); ++ei) {
        const auto& e = src.edges[ei];
        int s = static_cast<int>(e.size());
        for (int c = 0; c < (1 << s); ++c) {
            MbBigEdge big;
            big.source_edge = static_cast<int>(ei);
            std::vector<int> members;
            for (int k = 0; k < s; ++k) {
                int eps = 1 + ((c >> (s - 1 - k)) & 1);
                big.eps.push_back(eps);
                int vtx = e[static_cast<size_t>(k)];
                MbTree& t = tr.trees[static_cast<size_t>(vtx - 1)][static_cast<size_t>(eps - 1)];
                int leaf = t.leaf_begin + used[static_cast<size_t>(vtx)][static_cast<size_t>(eps - 1)]++;
                big.slot_leaf.emplace_back(vtx, leaf);
                members.push_back(t.v[static_cast<size_t>(leaf)]);
                members.push_back(t.w[static_cast<size_t>(leaf)]);
            }
            big.edge_id = g.add_edge(std::move(members));
            tr.big_edges.push_back(std::move(big));
        }
    }
    return out;
}

PairingCheck breaker_pairing(const Hypergraph& out, const MbGadgetTrace& trace,
                             const std::set<int>& breaker_source_vertices) {
    PairingCheck check;
    Pairing& pr = check.pairing;

    std::vector<int> partner(static_cast<size_t>(out.num_vertices) + 1, 0);
    std::vector<char> single(static_cast<size_t>(out.num_vertices) + 1, 0);
    auto add_pair = [&](int a, int b) {
        pr.pairs.emplace_back(a, b);
        partner[static_cast<size_t>(a)] = b;
        partner[static_cast<size_t>(b)] = a;
    };

    for (size_t i = 0; i < trace.kept_vertices.size(); ++i) {
        bool claimed = breaker_source_vertices.count(trace.kept_vertices[i]) > 0;
        if (claimed) {
            pr.singletons.push_back(trace.x_vertex[i]);
            single[static_cast<size_t>(trace.x_vertex[i])] = 1;
        }
        for (const MbTree& t : trace.trees[i]) {
            for (int j = 0; j < t.node_count(); ++j) {
                if (claimed) {
                    add_pair(t.v[static_cast<size_t>(j)], t.w[static_cast<size_t>(j)]);
                } else {
                    add_pair(t.v[static_cast<size_t>(j)], t.a[static_cast<size_t>(j)]);
                    add_pair(t.w[static_cast<size_t>(j)], t.b[static_cast<size_t>(j)]);
                }
            }
        }
    }

    for (size_t ei = 0; ei < out.edges.size(); ++ei) {
        const auto& e = out.edges[ei];
        bool covered = false;
        for (int v : e) {
            if (single[static_cast<size_t>(v)]) {
                covered = true;
                break;
            }
            int p = partner[static_cast<size_t>(v)];
            if (p != 0 && std::binary_search(e.begin(), e.end(), p)) {
                covered = true;
                break;
            }
        }
        if (!covered) check.uncovered_edges.push_back(static_cast<int>(ei));
    }
    return check;
}

// --- forcing playout ----------------------------------------------------

namespace {

struct PlayoutBoard {
    const Hypergraph& h;
    std::vector<std::uint8_t> owner;
    std::vector<std::vector<int>> incident; // vertex -> edge ids
    std::vector<int> maker_count;           // per edge
    std::vector<char> breaker_hit;          // per edge
    int claimed = 0;
    bool maker_complete = false;

    explicit PlayoutBoard(const Hypergraph& h_) : h(h_) {
        owner.assign(static_cast<size_t>(h.num_vertices) + 1, 0);
        incident.resize(static_cast<size_t>(h.num_vertices) + 1);
        maker_count.assign(h.edges.size(), 0);
        breaker_hit.assign(h.edges.size(), 0);
        for (size_t e = 0; e < h.edges.size(); ++e) {
            if (h.edges[e].empty()) maker_complete = true; // vacuously filled
            for (int v : h.edges[e]) incident[static_cast<size_t>(v)].push_back(static_cast<int>(e));
        }
    }

    void claim(int v, bool maker) {
        owner[static_cast<size_t>(v)] = maker ? 1 : 2;
        ++claimed;
        for (int e : incident[static_cast<size_t>(v)]) {
            if (maker) {
                if (++maker_count[static_cast<size_t>(e)] ==
                    static_cast<int>(h.edges[static_cast<size_t>(e)].size()))
                    maker_complete = true;
            } else {
                breaker_hit[static_cast<size_t>(e)] = 1;
            }
        }
    }

    bool unclaimed(int v) const { return owner[static_cast<size_t>(v)] == 0; }
    int free_count() const { return h.num_vertices - claimed; }
};

struct StrategyCursor {
    const StrategyNode* node = nullptr;
    bool awaiting_reply = false;
    bool done = false;

    explicit StrategyCursor(const StrategyNode& root) : node(&root) {
        if (!node->move) {
            if (node->replies.empty()) done = true; // already-terminal source
            else awaiting_reply = true;
        }
    }

    bool our_turn() const { return !done && !awaiting_reply; }

    int our_move() const { return node->move->v; }

    void advance_after_our_move() {
        if (node->replies.empty()) done = true;
        else awaiting_reply = true;
    }

    // Returns false when the reply is not in the tree (invalid strategy).
    bool feed_reply(int v) {
        for (const auto& [m, child] : node->replies) {
            if (m.v == v) {
                node = &child;
                awaiting_reply = false;
                if (!node->move && node->replies.empty()) done = true;
                return true;
            }
        }
        return false;
    }
};

} // namespace

PlayoutRecord maker_forcing_playout(const Hypergraph& source, const Hypergraph& out,
                                    const MbGadgetTrace& trace,
                                    const StrategyTree& source_strategy,
                                    BreakerPolicy policy, std::uint64_t seed) {
    if (source_strategy.target != GameWinner::MakerWin || source_strategy.for_player != Player::One)
        throw PreconditionError("playout needs a Maker-winning source strategy");

    PlayoutRecord rec;
    PlayoutBoard board(out);
    std::mt19937_64 rng(seed);

    int K = static_cast<int>(trace.kept_vertices.size());
    std::vector<std::uint8_t> first_touch(static_cast<size_t>(K), 0); // 0 none, 1 maker, 2 breaker
    std::vector<char> swept(static_cast<size_t>(K), 0);
    std::vector<char> maker_has_x(static_cast<size_t>(K), 0);
    std::vector<std::uint8_t> virtual_claim(static_cast<size_t>(source.num_vertices) + 1, 0);
    StrategyCursor cursor(source_strategy.root);

    std::deque<std::pair<int, int>> plan; // (maker claim, forced breaker reply)
    int expected_reply = 0;
    int pending_win = 0;
    bool expect_win = false;

    auto enqueue_sweep = [&](int g, int side /*0 or 1*/) {
        const MbTree& t = trace.trees[static_cast<size_t>(g)][static_cast<size_t>(side)];
        for (int j = 0; j < t.node_count(); ++j) {
            plan.emplace_back(t.v[static_cast<size_t>(j)], t.a[static_cast<size_t>(j)]);
            plan.emplace_back(t.w[static_cast<size_t>(j)], t.b[static_cast<size_t>(j)]);
        }
        swept[static_cast<size_t>(g)] = 1;
    };

    auto defect = [&rec](const std::string& msg) { rec.defect = msg; };

    // Picks Maker's next claim; 0 means no move found (board full).
    auto choose_maker = [&]() -> int {
        while (true) {
            if (pending_win != 0) {
                int v = pending_win;
                pending_win = 0;
                expect_win = true;
                return v;
            }
            if (!plan.empty()) {
                auto [claim, forced] = plan.front();
                plan.pop_front();
                if (!board.unclaimed(claim)) {
                    defect("sweep move on a claimed vertex");
                    return 0;
                }
                expected_reply = forced;
                return claim;
            }
            if (cursor.our_turn()) {
                int u = cursor.our_move();
                if (virtual_claim[static_cast<size_t>(u)] != 0)
                    throw PreconditionError("source strategy claims an already-claimed vertex");
                virtual_claim[static_cast<size_t>(u)] = 1;
                int g = u - 1;
                int x = trace.x_vertex[static_cast<size_t>(g)];
                cursor.advance_after_our_move();
                if (board.owner[static_cast<size_t>(x)] == 1) continue; // reserved earlier
                if (board.owner[static_cast<size_t>(x)] == 2)
                    throw PreconditionError("source strategy picked a vertex whose connector is lost");
                if (first_touch[static_cast<size_t>(g)] == 0) first_touch[static_cast<size_t>(g)] = 1;
                maker_has_x[static_cast<size_t>(g)] = 1;
                return x;
            }
            // Idle turn: sweep an owned gadget, else reserve a fresh one.
            for (int g = 0; g < K; ++g) {
                if (maker_has_x[static_cast<size_t>(g)] && !swept[static_cast<size_t>(g)]) {
                    enqueue_sweep(g, 0);
                    break;
                }
            }
            if (!plan.empty()) continue;
            for (int g = 0; g < K; ++g) {
                if (first_touch[static_cast<size_t>(g)] == 0) {
                    first_touch[static_cast<size_t>(g)] = 1;
                    maker_has_x[static_cast<size_t>(g)] = 1;
                    return trace.x_vertex[static_cast<size_t>(g)];
                }
            }
            for (int v = 1; v <= out.num_vertices; ++v) {
                if (board.unclaimed(v)) return v;
            }
            return 0;
        }
    };

    auto feed_breaker = [&](int y) {
        if (expected_reply != 0) {
            if (y != expected_reply) pending_win = expected_reply;
            expected_reply = 0;
            if (pending_win != 0) return;
            return;
        }
        int g = trace.vertex_gadget[static_cast<size_t>(y)];
        if (g < 0) return;
        if (first_touch[static_cast<size_t>(g)] == 0) {
            first_touch[static_cast<size_t>(g)] = 2;
            int u = g + 1;
            if (!cursor.done && cursor.awaiting_reply && virtual_claim[static_cast<size_t>(u)] == 0) {
                virtual_claim[static_cast<size_t>(u)] = 2;
                if (!cursor.feed_reply(u))
                    throw PreconditionError("source strategy misses a legal Breaker reply");
            }
            return;
        }
        if (maker_has_x[static_cast<size_t>(g)] && !swept[static_cast<size_t>(g)]) {
            int side = trace.vertex_side[static_cast<size_t>(y)];
            if (side == 1 || side == 2) enqueue_sweep(g, 2 - side); // opposite tree
        }
    };

    auto breaker_pick = [&]() -> int {
        if (policy == BreakerPolicy::GreedyBlock) {
            for (size_t e = 0; e < out.edges.size(); ++e) {
                if (board.breaker_hit[e]) continue;
                if (board.maker_count[e] + 1 != static_cast<int>(out.edges[e].size())) continue;
                for (int v : out.edges[e]) {
                    if (board.unclaimed(v)) return v;
                }
            }
        }
        int free = board.free_count();
        int idx = static_cast<int>(rng() % static_cast<std::uint64_t>(free));
        for (int v = 1; v <= out.num_vertices; ++v) {
            if (board.unclaimed(v) && idx-- == 0) return v;
        }
        return 0;
    };

    bool maker_to_move = source_strategy.root.move.has_value();
    if (board.maker_complete) {
        rec.maker_won = true;
        return rec;
    }
    while (board.claimed < out.num_vertices) {
        if (maker_to_move) {
            int v = choose_maker();
            if (v == 0) break;
            if (!board.unclaimed(v)) {
                defect("maker chose a claimed vertex");
                break;
            }
            board.claim(v, true);
            rec.moves.emplace_back(Player::One, v);
            if (board.maker_complete) {
                rec.maker_won = true;
                break;
            }
            if (expect_win) {
                defect("forced-win claim did not complete a hyperedge");
                break;
            }
        } else {
            int y = breaker_pick();
            if (y == 0) break;
            board.claim(y, false);
            rec.moves.emplace_back(Player::Two, y);
            feed_breaker(y);
        }
        maker_to_move = !maker_to_move;
    }
    if (!rec.maker_won && rec.defect.empty()) defect("board exhausted without a Maker win");
    return rec;
}

// --- Maker-Maker --------------------------------------------------------

MmResult mb_to_maker_maker(const Hypergraph& h) {
    h.validate();
    MmResult out;
    MmTrace& tr = out.trace;
    tr.source_vertices = h.num_vertices;
    Hypergraph& g = out.graph;
    g.num_vertices = h.num_vertices + 2 * static_cast<int>(h.edges.size());
    g.labels = h.labels;

    int next = h.num_vertices;
    for (size_t i = 0; i < h.edges.size(); ++i) {
        int x = ++next, y = ++next;
        tr.pair_vertices.push_back({x, y});
        g.labels[x] = "x" + std::to_string(i + 1);
        g.labels[y] = "y" + std::to_string(i + 1);
        std::vector<int> widened = h.edges[i];
        widened.push_back(x);
        tr.widened_edges.push_back(g.add_edge(std::move(widened)));
        tr.pair_edges.push_back(g.add_edge({x, y}));
    }
    return out;
}

// --- trace serialization --------------------------------------------------

void to_json(nlohmann::json& j, const AeTrace& t) {
    nlohmann::json u = nlohmann::json::object();
    for (auto [idx, v] : t.u_vertex) u[std::to_string(idx)] = v;
    j = nlohmann::json{{"n", t.n},
                       {"pos_vertex", t.pos_vertex},
                       {"neg_vertex", t.neg_vertex},
                       {"u_vertex", u},
                       {"a_edges", t.a_edges},
                       {"b_edges", t.b_edges},
                       {"c_edges", t.c_edges},
                       {"d_edges", t.d_edges}};
}

void to_json(nlohmann::json& j, const CwTrace& t) {
    j = nlohmann::json{{"n", t.n},
                       {"s_vertices", t.s_vertices},
                       {"f_vertices", t.f_vertices},
                       {"block_edges", t.block_edges},
                       {"pair_edges", t.pair_edges},
                       {"clause_edges", t.clause_edges}};
}

static void to_json(nlohmann::json& j, const MbTree& t) {
    j = nlohmann::json{{"v", t.v},           {"w", t.w},
                       {"a", t.a},           {"b", t.b},
                       {"node_edges", t.node_edges}, {"leaf_begin", t.leaf_begin}};
}

void to_json(nlohmann::json& j, const MbGadgetTrace& t) {
    nlohmann::json big = nlohmann::json::array();
    for (const auto& be : t.big_edges) {
        big.push_back({{"source_edge", be.source_edge},
                       {"eps", be.eps},
                       {"edge_id", be.edge_id},
                       {"slot_leaf", be.slot_leaf}});
    }
    nlohmann::json trees = nlohmann::json::array();
    for (const auto& pair : t.trees) {
        nlohmann::json t1, t2;
        to_json(t1, pair[0]);
        to_json(t2, pair[1]);
        trees.push_back({t1, t2});
    }
    j = nlohmann::json{{"kept_vertices", t.kept_vertices},
                       {"x_vertex", t.x_vertex},
                       {"trees", trees},
                       {"big_edges", big}};
}

void to_json(nlohmann::json& j, const MmTrace& t) {
    j = nlohmann::json{{"source_vertices", t.source_vertices},
                       {"pair_vertices", t.pair_vertices},
                       {"widened_edges", t.widened_edges},
                       {"pair_edges", t.pair_edges}};
}

} // namespace qpg
