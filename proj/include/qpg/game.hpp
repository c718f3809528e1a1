#ifndef QPG_GAME_HPP
#define QPG_GAME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpg/hypergraph.hpp"

namespace qpg {

enum class GameKind { MakerBreaker, MakerMaker, AvoiderEnforcer, ClientWaiter };

/// Player::One is the claimer the winning condition talks about: Maker,
/// the first mover (Alice), Avoider, or Client. Player::Two is Breaker,
/// Bob, Enforcer, or Waiter.
enum class Player { One, Two };

enum class LoneVertexRule { ToClient, ToWaiter };

struct Convention {
    GameKind kind = GameKind::MakerBreaker;
    /// Who claims first. Maker-Maker ignores it (the first mover is Alice
    /// by definition) and so does Client-Waiter (Waiter always offers).
    Player first = Player::One;
    LoneVertexRule lone_vertex = LoneVertexRule::ToClient; // Client-Waiter only
};

enum class GameWinner {
    MakerWin, BreakerWin,
    FirstWin, Draw, SecondWin,
    AvoiderWin, EnforcerWin,
    ClientWin, WaiterWin,
};

std::string to_string(GameWinner w);
std::string to_string(GameKind k);

/// Outcome of a budgeted exact solve; `winner` is absent exactly when the
/// budget ran out before the root value was decided.
struct GameOutcome {
    std::optional<GameWinner> winner;
    bool exact = true;
    std::uint64_t nodes = 0;
};

/// In Maker-Breaker / Maker-Maker / Avoider-Enforcer a move claims one
/// vertex (w == 0). In Client-Waiter a Waiter move offers two distinct
/// vertices (v < w, w != 0), a Client move picks one of the pending offer
/// (w == 0), and with exactly one unclaimed vertex left the Waiter move
/// {v, 0} resolves it via the lone-vertex rule.
struct Move {
    int v = 0;
    int w = 0;
    bool operator==(const Move&) const = default;
};

struct GamePosition {
    int num_vertices = 0;
    std::vector<std::uint8_t> owner; // 1-based; 0 unclaimed, 1 One, 2 Two
    Player to_move = Player::One;
    std::optional<std::pair<int, int>> pending_offer; // Client-Waiter only
    int claimed = 0;

    bool unclaimed(int v) const { return owner[static_cast<size_t>(v)] == 0; }
};

GamePosition initial_position(const Hypergraph& h, const Convention& conv);
std::vector<Move> legal_moves(const GamePosition& pos, const Convention& conv);
GamePosition play_move(const GamePosition& pos, const Convention& conv, Move m);

/// Terminal test for a reachable position: completion by One, completion
/// by Two, then exhaustion / dead-board rules of the convention.
std::optional<GameWinner> terminal_winner(const Hypergraph& h, const GamePosition& pos,
                                          const Convention& conv);

/// Exact minimax with a transposition table keyed on the claim sets and
/// the player to move. Boards above 256 vertices are rejected (exact
/// search is hopeless there anyway). `use_table` exists so tests can
/// confirm the table never changes winners.
GameOutcome solve_positional(const Hypergraph& h, const Convention& conv,
                             std::uint64_t node_budget = 1ull << 24,
                             bool use_table = true);

/// Same solver, started from an arbitrary reachable position.
GameOutcome solve_position(const Hypergraph& h, const Convention& conv,
                           const GamePosition& pos,
                           std::uint64_t node_budget = 1ull << 24,
                           bool use_table = true);

/// A move-choice function materialized as a tree: `move` is present when
/// for_player is to move, `replies` enumerates every legal opponent move.
/// Every leaf is terminal with an outcome at least as good as the target
/// for for_player.
struct StrategyNode {
    std::optional<Move> move;
    std::vector<std::pair<Move, StrategyNode>> replies;
};

struct StrategyTree {
    GameWinner target; // the solver outcome the strategy guarantees
    Player for_player;
    StrategyNode root;
};

/// Requires the position to be exactly solvable within the budget and
/// for_player to be the side that forces the solved outcome (the winner;
/// in Maker-Maker the second player may extract a Draw-forcing strategy).
StrategyTree extract_strategy(const Hypergraph& h, const Convention& conv,
                              Player for_player,
                              std::uint64_t node_budget = 1ull << 24);

/// Walks the whole tree against all opponent replies; returns false (with
/// a note) if any leaf falls short of the target. Used by tests.
bool replay_strategy(const Hypergraph& h, const Convention& conv,
                     const StrategyTree& tree, std::string* why = nullptr);

} // namespace qpg

#endif
