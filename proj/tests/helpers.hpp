#ifndef QPG_TEST_HELPERS_HPP
#define QPG_TEST_HELPERS_HPP

// Independent reference implementations used as oracles by the tests.
// They deliberately share no code with the library solvers: plain
// recursion, no memoization, no early exits beyond full evaluation.

#include <algorithm>
#include <optional>
#include <vector>

#include "qpg/formula.hpp"
#include "qpg/game.hpp"
#include "qpg/hypergraph.hpp"

namespace qpg_test {

inline bool matrix_satisfied(const qpg::CnfMatrix& m, const std::vector<bool>& value) {
    for (const qpg::Clause& c : m.clauses) {
        bool sat = false;
        for (qpg::Lit l : c.lits) {
            bool v = value[static_cast<size_t>(qpg::var_of(l))];
            if (qpg::positive(l) ? v : !v) {
                sat = true;
                break;
            }
        }
        if (!sat) return false;
    }
    return true;
}

// Full game-tree evaluation of the QBF game, leaves only.
inline bool brute_qbf(const qpg::QbfFormula& f, size_t depth, std::vector<bool>& value) {
    if (depth == f.prefix.size()) return matrix_satisfied(f.matrix, value);
    const auto& e = f.prefix[depth];
    bool exists = e.q == qpg::Quantifier::Exists;
    for (bool b : {false, true}) {
        value[static_cast<size_t>(e.var)] = b;
        bool r = brute_qbf(f, depth + 1, value);
        if (r == exists) return exists;
    }
    return !exists;
}

inline bool brute_qbf(const qpg::QbfFormula& f) {
    std::vector<bool> value(static_cast<size_t>(f.matrix.num_vars) + 1, false);
    return brute_qbf(f, 0, value);
}

// Paired SAT by full recursion over pair selections and values.
inline bool brute_paired(const qpg::PairedSatInstance& inst, std::vector<char>& used,
                         std::vector<bool>& value) {
    bool any = false;
    for (size_t i = 0; i < inst.pairs.size(); ++i) {
        if (used[i]) continue;
        any = true;
        for (bool b : {false, true}) {
            used[i] = 1;
            value[static_cast<size_t>(inst.pairs[i].first)] = b;
            bool falsifier_stuck = true; // Satisfier survives both replies
            for (bool c : {false, true}) {
                value[static_cast<size_t>(inst.pairs[i].second)] = c;
                if (!brute_paired(inst, used, value)) {
                    falsifier_stuck = false;
                    break;
                }
            }
            used[i] = 0;
            if (falsifier_stuck) return true;
        }
    }
    if (!any) return matrix_satisfied(inst.matrix, value);
    return false;
}

inline bool brute_paired(const qpg::PairedSatInstance& inst) {
    std::vector<char> used(inst.pairs.size(), 0);
    std::vector<bool> value(static_cast<size_t>(inst.matrix.num_vars) + 1, false);
    return brute_paired(inst, used, value);
}

// Maker-Breaker by plain recursion (claim sets as vectors, no memo).
inline bool brute_mb_maker_wins(const qpg::Hypergraph& h, std::vector<int>& owner, bool maker_turn) {
    for (const auto& e : h.edges) {
        bool all = true;
        for (int v : e)
            if (owner[static_cast<size_t>(v)] != 1) all = false;
        if (all) return true;
    }
    bool any_free = false;
    for (int v = 1; v <= h.num_vertices; ++v) {
        if (owner[static_cast<size_t>(v)] != 0) continue;
        any_free = true;
        owner[static_cast<size_t>(v)] = maker_turn ? 1 : 2;
        bool r = brute_mb_maker_wins(h, owner, !maker_turn);
        owner[static_cast<size_t>(v)] = 0;
        if (r == maker_turn) return maker_turn;
    }
    if (!any_free) return false;
    return !maker_turn;
}

inline bool brute_mb_maker_wins(const qpg::Hypergraph& h, bool maker_first = true) {
    std::vector<int> owner(static_cast<size_t>(h.num_vertices) + 1, 0);
    return brute_mb_maker_wins(h, owner, maker_first);
}

// Maker-Maker: 2 first wins, 1 draw, 0 second wins.
inline int brute_mm(const qpg::Hypergraph& h, std::vector<int>& owner, bool first_turn) {
    bool any_free = false;
    for (int v = 1; v <= h.num_vertices; ++v) {
        if (owner[static_cast<size_t>(v)] != 0) continue;
        any_free = true;
        break;
    }
    if (!any_free) return 1;
    int best = first_turn ? -1 : 3;
    for (int v = 1; v <= h.num_vertices; ++v) {
        if (owner[static_cast<size_t>(v)] != 0) continue;
        int side = first_turn ? 1 : 2;
        owner[static_cast<size_t>(v)] = side;
        bool complete = false;
        for (const auto& e : h.edges) {
            bool all = true;
            for (int u : e)
                if (owner[static_cast<size_t>(u)] != side) all = false;
            if (all) complete = true;
        }
        int r = complete ? (first_turn ? 2 : 0) : brute_mm(h, owner, !first_turn);
        owner[static_cast<size_t>(v)] = 0;
        best = first_turn ? std::max(best, r) : std::min(best, r);
    }
    return best;
}

inline int brute_mm(const qpg::Hypergraph& h) {
    for (const auto& e : h.edges)
        if (e.empty()) return 2;
    std::vector<int> owner(static_cast<size_t>(h.num_vertices) + 1, 0);
    return brute_mm(h, owner, true);
}

// Strict Avoider-Enforcer: true when Avoider survives.
inline bool brute_ae_avoider_wins(const qpg::Hypergraph& h, std::vector<int>& owner,
                                  bool avoider_turn) {
    for (const auto& e : h.edges) {
        bool all = true;
        for (int v : e)
            if (owner[static_cast<size_t>(v)] != 1) all = false;
        if (all) return false;
    }
    bool any_free = false;
    for (int v = 1; v <= h.num_vertices; ++v) {
        if (owner[static_cast<size_t>(v)] != 0) continue;
        any_free = true;
        owner[static_cast<size_t>(v)] = avoider_turn ? 1 : 2;
        bool r = brute_ae_avoider_wins(h, owner, !avoider_turn);
        owner[static_cast<size_t>(v)] = 0;
        if (r == avoider_turn) return avoider_turn;
    }
    if (!any_free) return true;
    return !avoider_turn;
}

inline bool brute_ae_avoider_wins(const qpg::Hypergraph& h, bool avoider_first) {
    std::vector<int> owner(static_cast<size_t>(h.num_vertices) + 1, 0);
    return brute_ae_avoider_wins(h, owner, avoider_first);
}

// Client-Waiter: true when Client wins; Waiter offers pairs.
inline bool brute_cw_client_wins(const qpg::Hypergraph& h, std::vector<int>& owner,
                                 qpg::LoneVertexRule lone) {
    for (const auto& e : h.edges) {
        bool all = true;
        for (int v : e)
            if (owner[static_cast<size_t>(v)] != 1) all = false;
        if (all) return true;
    }
    std::vector<int> free;
    for (int v = 1; v <= h.num_vertices; ++v)
        if (owner[static_cast<size_t>(v)] == 0) free.push_back(v);
    if (free.empty()) return false;
    if (free.size() == 1) {
        owner[static_cast<size_t>(free[0])] = lone == qpg::LoneVertexRule::ToClient ? 1 : 2;
        bool r = brute_cw_client_wins(h, owner, lone);
        owner[static_cast<size_t>(free[0])] = 0;
        return r;
    }
    for (size_t i = 0; i < free.size(); ++i) {
        for (size_t j = i + 1; j < free.size(); ++j) {
            bool client_saves = false;
            for (int pick : {0, 1}) {
                int a = pick == 0 ? free[i] : free[j];
                int b = pick == 0 ? free[j] : free[i];
                owner[static_cast<size_t>(a)] = 1;
                owner[static_cast<size_t>(b)] = 2;
                if (brute_cw_client_wins(h, owner, lone)) client_saves = true;
                owner[static_cast<size_t>(a)] = 0;
                owner[static_cast<size_t>(b)] = 0;
                if (client_saves) break;
            }
            if (!client_saves) return false; // Waiter found a killing offer
        }
    }
    return true;
}

inline bool brute_cw_client_wins(const qpg::Hypergraph& h,
                                 qpg::LoneVertexRule lone = qpg::LoneVertexRule::ToClient) {
    std::vector<int> owner(static_cast<size_t>(h.num_vertices) + 1, 0);
    return brute_cw_client_wins(h, owner, lone);
}

} // namespace qpg_test

#endif
