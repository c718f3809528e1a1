#include "qpg/game.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <unordered_map>

namespace qpg {

std::string to_string(GameWinner w) {
    switch (w) {
    case GameWinner::MakerWin: return "MakerWin";
    case GameWinner::BreakerWin: return "BreakerWin";
    case GameWinner::FirstWin: return "FirstWin";
    case GameWinner::Draw: return "Draw";
    case GameWinner::SecondWin: return "SecondWin";
    case GameWinner::AvoiderWin: return "AvoiderWin";
    case GameWinner::EnforcerWin: return "EnforcerWin";
    case GameWinner::ClientWin: return "ClientWin";
    case GameWinner::WaiterWin: return "WaiterWin";
    }
    return "?";
}

std::string to_string(GameKind k) {
    switch (k) {
    case GameKind::MakerBreaker: return "maker-breaker";
    case GameKind::MakerMaker: return "maker-maker";
    case GameKind::AvoiderEnforcer: return "avoider-enforcer";
    case GameKind::ClientWaiter: return "client-waiter";
    }
    return "?";
}

// --- position mechanics ---------------------------------------------------

GamePosition initial_position(const Hypergraph& h, const Convention& conv) {
    GamePosition pos;
    pos.num_vertices = h.num_vertices;
    pos.owner.assign(static_cast<size_t>(h.num_vertices) + 1, 0);
    switch (conv.kind) {
    case GameKind::MakerBreaker:
    case GameKind::AvoiderEnforcer:
        pos.to_move = conv.first;
        break;
    case GameKind::MakerMaker:
        pos.to_move = Player::One; // the first mover is Alice by definition
        break;
    case GameKind::ClientWaiter:
        pos.to_move = Player::Two; // Waiter offers
        break;
    }
    return pos;
}

std::vector<Move> legal_moves(const GamePosition& pos, const Convention& conv) {
    std::vector<Move> out;
    if (conv.kind != GameKind::ClientWaiter) {
        for (int v = 1; v <= pos.num_vertices; ++v) {
            if (pos.unclaimed(v)) out.push_back({v, 0});
        }
        return out;
    }
    if (pos.pending_offer) {
        out.push_back({pos.pending_offer->first, 0});
        out.push_back({pos.pending_offer->second, 0});
        return out;
    }
    std::vector<int> free;
    for (int v = 1; v <= pos.num_vertices; ++v) {
        if (pos.unclaimed(v)) free.push_back(v);
    }
    if (free.size() == 1) {
        out.push_back({free[0], 0}); // lone-vertex resolution
        return out;
    }
    for (size_t i = 0; i < free.size(); ++i) {
        for (size_t j = i + 1; j < free.size(); ++j) out.push_back({free[i], free[j]});
    }
    return out;
}

GamePosition play_move(const GamePosition& pos, const Convention& conv, Move m) {
    for (int v : {m.v, m.w}) {
        if (v != 0 && (v < 1 || v > pos.num_vertices))
            throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    }
    GamePosition next = pos;
    auto claim = [&next](int v, Player p) {
        if (v < 1 || v > next.num_vertices)
            throw PreconditionError("vertex " + std::to_string(v) + " out of range");
        if (!next.unclaimed(v))
            throw PreconditionError("vertex " + std::to_string(v) + " is already claimed");
        next.owner[static_cast<size_t>(v)] = p == Player::One ? 1 : 2;
        ++next.claimed;
    };

    if (conv.kind != GameKind::ClientWaiter) {
        if (m.w != 0) throw PreconditionError("single-claim conventions take one vertex per move");
        claim(m.v, pos.to_move);
        next.to_move = pos.to_move == Player::One ? Player::Two : Player::One;
        return next;
    }

    if (pos.pending_offer) {
        if (m.w != 0) throw PreconditionError("a pick names one vertex of the pending offer");
        auto [a, b] = *pos.pending_offer;
        if (m.v != a && m.v != b) throw PreconditionError("pick is not part of the pending offer");
        claim(m.v, Player::One);
        claim(m.v == a ? b : a, Player::Two);
        next.pending_offer.reset();
        next.to_move = Player::Two;
        return next;
    }
    int free = pos.num_vertices - pos.claimed;
    if (m.w == 0) {
        if (free != 1 || pos.unclaimed(m.v) == false)
            throw PreconditionError("bare Waiter move is only the lone-vertex resolution");
        claim(m.v, conv.lone_vertex == LoneVertexRule::ToClient ? Player::One : Player::Two);
        next.to_move = Player::Two;
        return next;
    }
    if (m.v == m.w) throw PreconditionError("offer must name two distinct vertices");
    if (!pos.unclaimed(m.v) || !pos.unclaimed(m.w))
        throw PreconditionError("offer names a claimed vertex");
    next.pending_offer = {std::min(m.v, m.w), std::max(m.v, m.w)};
    next.to_move = Player::One;
    return next;
}

namespace {

bool set_covers_edge(const std::vector<std::uint8_t>& owner, const std::vector<int>& edge,
                     std::uint8_t side) {
    for (int v : edge) {
        if (owner[static_cast<size_t>(v)] != side) return false;
    }
    return true;
}

bool set_hits_edge(const std::vector<std::uint8_t>& owner, const std::vector<int>& edge,
                   std::uint8_t side) {
    for (int v : edge) {
        if (owner[static_cast<size_t>(v)] == side) return true;
    }
    return false;
}

} // namespace

std::optional<GameWinner> terminal_winner(const Hypergraph& h, const GamePosition& pos,
                                          const Convention& conv) {
    bool one_complete = false, two_complete = false;
    bool all_hit_two = true, all_dead = true;
    for (const auto& e : h.edges) {
        if (set_covers_edge(pos.owner, e, 1)) one_complete = true;
        if (set_covers_edge(pos.owner, e, 2)) two_complete = true;
        bool hit2 = set_hits_edge(pos.owner, e, 2);
        if (!hit2) all_hit_two = false;
        if (!hit2 || !set_hits_edge(pos.owner, e, 1)) all_dead = false;
    }
    bool exhausted = pos.claimed == pos.num_vertices;

    switch (conv.kind) {
    case GameKind::MakerBreaker:
        if (one_complete) return GameWinner::MakerWin;
        if (all_hit_two || exhausted) return GameWinner::BreakerWin;
        return std::nullopt;
    case GameKind::MakerMaker:
        if (one_complete) return GameWinner::FirstWin;
        if (two_complete) return GameWinner::SecondWin;
        if (exhausted || all_dead) return GameWinner::Draw;
        return std::nullopt;
    case GameKind::AvoiderEnforcer:
        if (one_complete) return GameWinner::EnforcerWin; // Avoider filled a hyperedge
        if (all_hit_two || exhausted) return GameWinner::AvoiderWin;
        return std::nullopt;
    case GameKind::ClientWaiter:
        if (one_complete) return GameWinner::ClientWin;
        if (pos.pending_offer) return std::nullopt;
        if (all_hit_two || exhausted) return GameWinner::WaiterWin;
        return std::nullopt;
    }
    return std::nullopt;
}

// --- exact solver ----------------------------------------------------------

namespace {

constexpr std::int8_t kUnknown = -1;

template <size_t W>
struct Mask {
    std::array<std::uint64_t, W> w{};

    void set(int bit) { w[static_cast<size_t>(bit) >> 6] |= 1ull << (bit & 63); }
    bool test(int bit) const { return (w[static_cast<size_t>(bit) >> 6] >> (bit & 63)) & 1; }
    bool subset_of(const Mask& m) const {
        for (size_t i = 0; i < W; ++i) {
            if ((w[i] & m.w[i]) != w[i]) return false;
        }
        return true;
    }
    bool intersects(const Mask& m) const {
        for (size_t i = 0; i < W; ++i) {
            if (w[i] & m.w[i]) return true;
        }
        return false;
    }
    Mask with(int bit) const {
        Mask r = *this;
        r.set(bit);
        return r;
    }
    bool operator==(const Mask&) const = default;
};

template <size_t W>
struct TTKey {
    Mask<W> one, two;
    std::uint8_t turn;
    bool operator==(const TTKey&) const = default;
};

template <size_t W>
struct TTKeyHash {
    size_t operator()(const TTKey<W>& k) const {
        std::uint64_t h = 1469598103934665603ull;
        auto mix = [&h](std::uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        for (auto x : k.one.w) mix(x);
        for (auto x : k.two.w) mix(x);
        mix(k.turn);
        return static_cast<size_t>(h);
    }
};

// Values per kind: MB 1=MakerWin 0=BreakerWin; MM 2=FirstWin 1=Draw
// 0=SecondWin; AE 1=AvoiderWin 0=EnforcerWin; CW 1=ClientWin 0=WaiterWin.
template <size_t W>
struct Solver {
    GameKind kind;
    LoneVertexRule lone;
    int nv;
    std::vector<Mask<W>> edges;
    std::uint64_t budget;
    bool use_tt;
    std::uint64_t nodes = 0;
    std::unordered_map<TTKey<W>, std::int8_t, TTKeyHash<W>> tt;

    Solver(const Hypergraph& h, const Convention& conv, std::uint64_t budget_, bool use_tt_)
        : kind(conv.kind), lone(conv.lone_vertex), nv(h.num_vertices), budget(budget_),
          use_tt(use_tt_) {
        edges.reserve(h.edges.size());
        for (const auto& e : h.edges) {
            Mask<W> m;
            for (int v : e) m.set(v);
            edges.push_back(m);
        }
    }

    bool covers(const Mask<W>& side) const {
        for (const auto& e : edges) {
            if (e.subset_of(side)) return true;
        }
        return false;
    }
    bool all_hit(const Mask<W>& side) const {
        for (const auto& e : edges) {
            if (!e.intersects(side)) return false;
        }
        return true;
    }
    bool dead_for_both(const Mask<W>& one, const Mask<W>& two) const {
        for (const auto& e : edges) {
            if (!e.intersects(one) || !e.intersects(two)) return false;
        }
        return true;
    }

    int count(const Mask<W>& one, const Mask<W>& two) const {
        int c = 0;
        for (size_t i = 0; i < W; ++i)
            c += std::popcount(one.w[i]) + std::popcount(two.w[i]);
        return c;
    }

    std::int8_t solve(const Mask<W>& one, const Mask<W>& two, std::uint8_t turn) {
        if (++nodes > budget) return kUnknown;

        int claimed = count(one, two);
        bool full = claimed == nv;
        switch (kind) {
        case GameKind::MakerBreaker:
            if (covers(one)) return 1;
            if (full || all_hit(two)) return 0;
            break;
        case GameKind::MakerMaker:
            if (covers(one)) return 2;
            if (covers(two)) return 0;
            if (full || dead_for_both(one, two)) return 1;
            break;
        case GameKind::AvoiderEnforcer:
            if (covers(one)) return 0;
            if (full || all_hit(two)) return 1;
            break;
        case GameKind::ClientWaiter: {
            if (covers(one)) return 1;
            if (all_hit(two)) return 0;
            if (full) return 0;
            if (nv - claimed == 1) {
                if (lone == LoneVertexRule::ToWaiter) return 0;
                int v = 1;
                while (!(!one.test(v) && !two.test(v))) ++v;
                return covers(one.with(v)) ? 1 : 0;
            }
            break;
        }
        }

        TTKey<W> key{one, two, turn};
        if (use_tt) {
            if (auto it = tt.find(key); it != tt.end()) return it->second;
        }

        std::int8_t value = kUnknown;
        if (kind == GameKind::ClientWaiter) {
            value = solve_cw_offers(one, two);
        } else {
            value = solve_claims(one, two, turn);
        }
        if (use_tt && value != kUnknown) tt.emplace(key, value);
        return value;
    }

    // True when the mover owns all but one vertex of a live edge.
    bool immediate_completion(const Mask<W>& mine, const Mask<W>& theirs) const {
        for (const auto& e : edges) {
            if (e.intersects(theirs)) continue;
            int missing = 0;
            for (size_t i = 0; i < W && missing <= 1; ++i)
                missing += std::popcount(e.w[i] & ~mine.w[i]);
            if (missing == 1) return true;
        }
        return false;
    }

    // Distinct vertices that would complete an edge for `side` on its next
    // turn (capped at 2); used to force blocking replies.
    int completion_threats(const Mask<W>& side, const Mask<W>& other, int& vertex) const {
        int found = 0;
        vertex = 0;
        for (const auto& e : edges) {
            if (e.intersects(other)) continue;
            int missing = 0, bit = 0;
            for (size_t i = 0; i < W && missing <= 1; ++i) {
                std::uint64_t rest = e.w[i] & ~side.w[i];
                missing += std::popcount(rest);
                if (rest) bit = static_cast<int>(i) * 64 + std::countr_zero(rest);
            }
            if (missing != 1) continue;
            if (found == 0) {
                vertex = bit;
                found = 1;
            } else if (bit != vertex) {
                return 2;
            }
        }
        return found;
    }

    std::int8_t solve_claims(const Mask<W>& one, const Mask<W>& two, std::uint8_t turn) {
        bool one_moves = turn == 0;
        // A mover who can fill an edge right now does so: decisive for the
        // maker roles in Maker-Breaker and for both sides in Maker-Maker.
        // After that, an opponent threat forces the block (two distinct
        // threats cannot both be blocked).
        int forced = 0;
        if (kind == GameKind::MakerBreaker) {
            if (one_moves && immediate_completion(one, two)) return 1;
            if (!one_moves) {
                int n_threats = completion_threats(one, two, forced);
                if (n_threats >= 2) return 1;
            }
        } else if (kind == GameKind::MakerMaker) {
            if (one_moves && immediate_completion(one, two)) return 2;
            if (!one_moves && immediate_completion(two, one)) return 0;
            int n_threats = one_moves ? completion_threats(two, one, forced)
                                      : completion_threats(one, two, forced);
            if (n_threats >= 2) return one_moves ? 0 : 2;
        }
        bool any_unknown = false;
        // Per-kind aggregation over children (a forced block shrinks the
        // move list to one vertex).
        std::int8_t best = kUnknown;
        bool have_best = false;
        int first_move = forced != 0 ? forced : 1;
        int last_move = forced != 0 ? forced : nv;
        for (int v = first_move; v <= last_move; ++v) {
            if (one.test(v) || two.test(v)) continue;
            std::int8_t c = one_moves ? solve(one.with(v), two, 1) : solve(one, two.with(v), 0);
            if (c == kUnknown) {
                any_unknown = true;
                continue;
            }
            switch (kind) {
            case GameKind::MakerBreaker:
            case GameKind::AvoiderEnforcer:
            case GameKind::ClientWaiter: {
                // Binary: One maximizes toward 1, Two toward 0.
                std::int8_t want = one_moves ? 1 : 0;
                if (c == want) return want;
                best = c;
                have_best = true;
                break;
            }
            case GameKind::MakerMaker: {
                if (one_moves) {
                    if (c == 2) return 2;
                    best = have_best ? std::max(best, c) : c;
                } else {
                    if (c == 0) return 0;
                    best = have_best ? std::min(best, c) : c;
                }
                have_best = true;
                break;
            }
            }
        }
        if (any_unknown) return kUnknown;
        (void)have_best; // a non-full board always has a move
        return best;
    }

    std::int8_t solve_cw_offers(const Mask<W>& one, const Mask<W>& two) {
        std::vector<int> free;
        for (int v = 1; v <= nv; ++v) {
            if (!one.test(v) && !two.test(v)) free.push_back(v);
        }
        bool any_unknown = false;
        for (size_t i = 0; i < free.size(); ++i) {
            for (size_t j = i + 1; j < free.size(); ++j) {
                int a = free[i], b = free[j];
                std::int8_t va = solve(one.with(a), two.with(b), 0);
                if (va == 1) continue; // Client already rescues this offer
                std::int8_t vb = solve(one.with(b), two.with(a), 0);
                if (vb == 1) continue;
                if (va == 0 && vb == 0) return 0; // killing offer for Waiter
                any_unknown = true;
            }
        }
        return any_unknown ? kUnknown : 1;
    }
};

GameWinner value_to_winner(GameKind kind, std::int8_t v) {
    switch (kind) {
    case GameKind::MakerBreaker: return v == 1 ? GameWinner::MakerWin : GameWinner::BreakerWin;
    case GameKind::MakerMaker:
        return v == 2 ? GameWinner::FirstWin : v == 1 ? GameWinner::Draw : GameWinner::SecondWin;
    case GameKind::AvoiderEnforcer:
        return v == 1 ? GameWinner::AvoiderWin : GameWinner::EnforcerWin;
    case GameKind::ClientWaiter: return v == 1 ? GameWinner::ClientWin : GameWinner::WaiterWin;
    }
    return GameWinner::Draw;
}

std::uint8_t root_turn(const Convention& conv) {
    switch (conv.kind) {
    case GameKind::MakerBreaker:
    case GameKind::AvoiderEnforcer:
        return conv.first == Player::One ? 0 : 1;
    case GameKind::MakerMaker:
    case GameKind::ClientWaiter:
        return 0;
    }
    return 0;
}

template <size_t W>
GameOutcome run_solver(const Hypergraph& h, const Convention& conv, std::uint64_t budget,
                       bool use_tt, const GamePosition* start) {
    Solver<W> solver(h, conv, budget, use_tt);
    Mask<W> one, two;
    std::uint8_t turn = root_turn(conv);
    std::int8_t v;
    if (start) {
        for (int x = 1; x <= h.num_vertices; ++x) {
            if (start->owner[static_cast<size_t>(x)] == 1) one.set(x);
            else if (start->owner[static_cast<size_t>(x)] == 2) two.set(x);
        }
        if (conv.kind != GameKind::ClientWaiter) turn = start->to_move == Player::One ? 0 : 1;
        if (conv.kind == GameKind::ClientWaiter && start->pending_offer) {
            auto [a, b] = *start->pending_offer;
            std::int8_t va = solver.solve(one.with(a), two.with(b), 0);
            std::int8_t vb = solver.solve(one.with(b), two.with(a), 0);
            v = va == 1 || vb == 1 ? 1 : va == kUnknown || vb == kUnknown ? kUnknown : 0;
        } else {
            v = solver.solve(one, two, turn);
        }
    } else {
        v = solver.solve(one, two, turn);
    }
    GameOutcome out;
    out.nodes = solver.nodes;
    if (v == kUnknown) {
        out.exact = false;
        return out;
    }
    out.winner = value_to_winner(conv.kind, v);
    return out;
}

} // namespace

GameOutcome solve_positional(const Hypergraph& h, const Convention& conv,
                             std::uint64_t node_budget, bool use_table) {
    h.validate();
    if (h.num_vertices > 255)
        throw PreconditionError("exact solver supports at most 255 vertices, got " +
                                std::to_string(h.num_vertices));
    if (h.num_vertices <= 63) return run_solver<1>(h, conv, node_budget, use_table, nullptr);
    return run_solver<4>(h, conv, node_budget, use_table, nullptr);
}

GameOutcome solve_position(const Hypergraph& h, const Convention& conv, const GamePosition& pos,
                           std::uint64_t node_budget, bool use_table) {
    h.validate();
    if (h.num_vertices > 255)
        throw PreconditionError("exact solver supports at most 255 vertices, got " +
                                std::to_string(h.num_vertices));
    if (h.num_vertices <= 63) return run_solver<1>(h, conv, node_budget, use_table, &pos);
    return run_solver<4>(h, conv, node_budget, use_table, &pos);
}

// --- strategy extraction ----------------------------------------------------

namespace {

// True when value a is strictly better than b for p (One maximizes).
bool better_for(GameKind, Player p, std::int8_t a, std::int8_t b) {
    return p == Player::One ? a > b : a < b;
}

template <size_t W>
struct Extractor {
    const Hypergraph& h;
    Convention conv;
    Solver<W> solver;
    Player for_player;

    Extractor(const Hypergraph& h_, const Convention& conv_, Player fp, std::uint64_t budget)
        : h(h_), conv(conv_), solver(h_, conv_, budget, true), for_player(fp) {}

    Mask<W> side_mask(const GamePosition& pos, std::uint8_t side) const {
        Mask<W> m;
        for (int v = 1; v <= pos.num_vertices; ++v) {
            if (pos.owner[static_cast<size_t>(v)] == side) m.set(v);
        }
        return m;
    }

    std::int8_t value_of(const GamePosition& pos) {
        if (auto w = terminal_winner(h, pos, conv)) {
            switch (conv.kind) {
            case GameKind::MakerBreaker: return *w == GameWinner::MakerWin ? 1 : 0;
            case GameKind::MakerMaker:
                return *w == GameWinner::FirstWin ? 2 : *w == GameWinner::Draw ? 1 : 0;
            case GameKind::AvoiderEnforcer: return *w == GameWinner::AvoiderWin ? 1 : 0;
            case GameKind::ClientWaiter: return *w == GameWinner::ClientWin ? 1 : 0;
            }
        }
        if (pos.pending_offer) {
            // Client picks the better side.
            std::int8_t best = kUnknown;
            for (Move m : legal_moves(pos, conv)) {
                std::int8_t v = value_of(play_move(pos, conv, m));
                if (v == kUnknown) return kUnknown;
                if (best == kUnknown || better_for(conv.kind, Player::One, v, best)) best = v;
            }
            return best;
        }
        std::uint8_t turn = 0;
        if (conv.kind != GameKind::ClientWaiter) turn = pos.to_move == Player::One ? 0 : 1;
        return solver.solve(side_mask(pos, 1), side_mask(pos, 2), turn);
    }

    Player mover(const GamePosition& pos) const {
        if (conv.kind == GameKind::ClientWaiter) return pos.pending_offer ? Player::One : Player::Two;
        return pos.to_move;
    }

    StrategyNode build(const GamePosition& pos) {
        StrategyNode node;
        GamePosition cur = pos;
        if (terminal_winner(h, cur, conv)) return node; // leaf

        if (mover(cur) == for_player) {
            std::int8_t target = value_of(cur);
            if (target == kUnknown) throw BudgetExceededError("strategy extraction ran out of budget");
            for (Move m : legal_moves(cur, conv)) {
                GamePosition after = play_move(cur, conv, m);
                std::int8_t v = value_of(after);
                if (v == kUnknown) throw BudgetExceededError("strategy extraction ran out of budget");
                if (v == target) {
                    node.move = m;
                    cur = after;
                    break;
                }
            }
            if (!node.move) throw PreconditionError("no value-preserving move found");
            if (terminal_winner(h, cur, conv)) return node;
        }
        for (Move m : legal_moves(cur, conv)) {
            node.replies.emplace_back(m, build(play_move(cur, conv, m)));
        }
        return node;
    }
};

struct TargetCheck {
    GameWinner target;
    bool acceptable;
};

TargetCheck strategy_target(GameKind kind, Player for_player, GameWinner solved) {
    switch (kind) {
    case GameKind::MakerBreaker:
        return {solved, (solved == GameWinner::MakerWin) == (for_player == Player::One)};
    case GameKind::MakerMaker:
        if (for_player == Player::One) return {solved, solved == GameWinner::FirstWin};
        return {solved, solved != GameWinner::FirstWin}; // Draw (SecondWin never happens)
    case GameKind::AvoiderEnforcer:
        return {solved, (solved == GameWinner::AvoiderWin) == (for_player == Player::One)};
    case GameKind::ClientWaiter:
        return {solved, (solved == GameWinner::ClientWin) == (for_player == Player::One)};
    }
    return {solved, false};
}

} // namespace

StrategyTree extract_strategy(const Hypergraph& h, const Convention& conv, Player for_player,
                              std::uint64_t node_budget) {
    GameOutcome outcome = solve_positional(h, conv, node_budget);
    if (!outcome.exact) throw BudgetExceededError("position not solved within budget");
    auto [target, ok] = strategy_target(conv.kind, for_player, *outcome.winner);
    if (!ok)
        throw PreconditionError("strategy requested for the losing player (outcome " +
                                to_string(*outcome.winner) + ")");

    StrategyTree tree;
    tree.target = target;
    tree.for_player = for_player;
    if (h.num_vertices <= 63) {
        Extractor<1> ex(h, conv, for_player, node_budget);
        tree.root = ex.build(initial_position(h, conv));
    } else {
        Extractor<4> ex(h, conv, for_player, node_budget);
        tree.root = ex.build(initial_position(h, conv));
    }
    return tree;
}

namespace {

bool winner_acceptable(GameKind kind, Player for_player, GameWinner target, GameWinner got) {
    if (got == target) return true;
    if (kind == GameKind::MakerMaker && for_player == Player::Two &&
        target == GameWinner::Draw && got == GameWinner::SecondWin)
        return true;
    return false;
}

bool replay_node(const Hypergraph& h, const Convention& conv, const StrategyTree& tree,
                 const StrategyNode& node, GamePosition pos, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (node.move) {
        pos = play_move(pos, conv, *node.move);
    }
    if (auto w = terminal_winner(h, pos, conv)) {
        if (!node.replies.empty()) return fail("terminal position has replies");
        if (!winner_acceptable(conv.kind, tree.for_player, tree.target, *w))
            return fail("leaf outcome " + to_string(*w) + " falls short of " + to_string(tree.target));
        return true;
    }
    std::vector<Move> legal = legal_moves(pos, conv);
    if (legal.size() != node.replies.size()) return fail("replies do not cover all legal moves");
    for (size_t i = 0; i < legal.size(); ++i) {
        if (!(node.replies[i].first == legal[i])) return fail("reply order mismatch");
        if (!replay_node(h, conv, tree, node.replies[i].second,
                         play_move(pos, conv, legal[i]), why))
            return false;
    }
    return true;
}

} // namespace

bool replay_strategy(const Hypergraph& h, const Convention& conv, const StrategyTree& tree,
                     std::string* why) {
    return replay_node(h, conv, tree, tree.root, initial_position(h, conv), why);
}

} // namespace qpg
