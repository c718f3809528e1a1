#ifndef QPG_QBF_SOLVE_HPP
#define QPG_QBF_SOLVE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpg/formula.hpp"

namespace qpg {

inline constexpr std::uint64_t kDefaultNodeBudget = 1ull << 24;

enum class QbfWinner { Satisfier, Falsifier };

/// Result of a QBF-style game evaluation. `winner` is absent exactly when
/// the node budget ran out (`exact == false`).
struct QbfOutcome {
    std::optional<QbfWinner> winner;
    bool exact = true;
    std::uint64_t nodes = 0;
};

/// Exact game-tree evaluation of the QBF game in prefix order. Memoizes on
/// (next prefix index, residual matrix); terminates early on an empty
/// residual (Satisfier) or an empty clause (Falsifier). Deliberately naive
/// otherwise: no inference beyond the two terminal tests.
QbfOutcome solve_qbf_oracle(const QbfFormula& f,
                            std::uint64_t node_budget = kDefaultNodeBudget);

// --- the quadratic QBF-2 procedure -------------------------------------

enum class Rule {
    TautologyRemoval,      // a clause holding a literal and its complement is dropped
    UniversalElimination,  // innermost forall variable erased from its clauses
    PureExistential,       // innermost exists variable of one polarity: its clauses drop
    ExistentialResolution, // innermost exists variable in two clauses of mixed polarity
    UnusedVariable         // innermost variable of degree 0: quantifier dropped
};

enum class Verdict { Continue, True, False };

/// One rewriting step. `variable` and `clauses` refer to the formula the
/// step was applied to (0 / empty when not applicable). `result` is the
/// rewritten formula with ids renumbered to stay contiguous; solve_qbf2
/// leaves it empty when run with TraceDetail::StepsOnly.
struct RuleApplication {
    Rule rule;
    Var variable = 0;
    std::vector<int> clauses;
    QbfFormula result;
    Verdict verdict = Verdict::Continue;
};

/// Applies exactly one rule under the fixed precedence: tautology removal
/// anywhere first, otherwise the innermost prefix variable is examined
/// (degree 0, forall, pure exists, mixed exists). Requires max degree <= 2
/// and at least one variable or clause; rejects formulas that already
/// contain an empty clause (solvers treat those as false on sight).
RuleApplication apply_rule(const QbfFormula& f);

enum class TraceDetail { Full, StepsOnly };

struct Qbf2Result {
    QbfOutcome outcome;
    std::vector<RuleApplication> trace;
};

/// Iterates apply_rule to a verdict. Requires max degree <= 2 (violation
/// reported with the offending variable). Trace length is at most n + m;
/// total work is quadratic. With TraceDetail::Full every step carries the
/// resulting formula; StepsOnly records rules and verdicts but keeps ids
/// in the original input numbering and omits intermediate formulas.
Qbf2Result solve_qbf2(const QbfFormula& f, TraceDetail detail = TraceDetail::Full);

/// One rule application per line, suitable for a text log.
std::string trace_to_text(const std::vector<RuleApplication>& trace);

/// Exact evaluation of the Paired SAT game: Satisfier repeatedly picks any
/// unselected pair together with a value for its first variable, then
/// Falsifier values the second variable; Satisfier wins iff the final
/// valuation satisfies the matrix.
QbfOutcome solve_paired_sat(const PairedSatInstance& inst,
                            std::uint64_t node_budget = kDefaultNodeBudget);

} // namespace qpg

#endif
