#ifndef QPG_FORMULA_HPP
#define QPG_FORMULA_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpg/errors.hpp"

namespace qpg {

/// Variables are 1-based indices; within one formula the ids form the
/// contiguous range 1..num_vars. Literals use the DIMACS convention:
/// +v is the positive literal of v, -v the negative one.
using Var = int;
using Lit = int;

inline Var var_of(Lit l) { return l < 0 ? -l : l; }
inline bool positive(Lit l) { return l > 0; }

enum class Quantifier { Exists, Forall };

/// A clause is a deduplicated set of literals with a canonical order
/// (ascending variable id, positive before negative). A clause may hold
/// both polarities of a variable; that makes it tautological, which is a
/// query, not a construction error.
struct Clause {
    std::vector<Lit> lits;

    Clause() = default;
    explicit Clause(std::vector<Lit> ls);

    int size() const { return static_cast<int>(lits.size()); }
    bool empty() const { return lits.empty(); }
    bool tautological() const;
    bool contains(Lit l) const;
    /// Distinct variables in the clause (ascending).
    std::vector<Var> variables() const;

    bool operator==(const Clause&) const = default;
};

/// CNF matrix. Clauses form a multiset with stable order: duplicate
/// clauses are distinct occurrences and count separately toward degrees.
struct CnfMatrix {
    int num_vars = 0;
    std::vector<Clause> clauses;

    void validate() const; // throws PreconditionError
    bool operator==(const CnfMatrix&) const = default;
};

struct PrefixEntry {
    Var var;
    Quantifier q;
    bool operator==(const PrefixEntry&) const = default;
};

/// Prefix order is play order (outermost first); it need not coincide
/// with variable id order.
using QuantifierPrefix = std::vector<PrefixEntry>;

struct QbfFormula {
    QuantifierPrefix prefix;
    CnfMatrix matrix;

    void validate() const; // prefix covers 1..num_vars exactly once
    bool operator==(const QbfFormula&) const = default;
};

/// Paired SAT instance: a CNF matrix plus an ordered list of variable
/// pairs. First elements are assigned by Satisfier, second elements by
/// Falsifier; every variable sits in exactly one pair position.
struct PairedSatInstance {
    CnfMatrix matrix;
    std::vector<std::pair<Var, Var>> pairs;

    void validate() const;
    bool operator==(const PairedSatInstance&) const = default;
};

/// Structural metrics of a matrix. The degree of v counts clause
/// occurrences containing v; a clause holding both polarities of v still
/// counts once for that clause.
struct DegreeProfile {
    std::vector<int> degree; // 1-based; index 0 unused
    int max_degree = 0;
    int rank = 0;            // largest clause size
    int min_clause_size = 0; // smallest clause size (0 when no clauses)
    int num_clauses = 0;

    bool is_uniform(int k) const;  // every clause has size exactly k
    bool is_regular(int k) const;  // every variable has degree exactly k
};

DegreeProfile degree_profile(const CnfMatrix& matrix);

struct ClassCheck {
    bool ok = false;
    std::vector<std::string> violations;
};

/// Checks membership in r-QBF-d (rank <= r, degree <= d), optionally with
/// exact uniformity/regularity. Violations name the offending entity.
ClassCheck check_class(const QbfFormula& f, int max_rank, int max_degree,
                       bool require_uniform = false, bool require_regular = false);

// --- text formats -----------------------------------------------------
//
// QDIMACS: "p cnf <n> <m>" header, quantifier lines "e ... 0" / "a ... 0"
// outermost first, clause lines terminated by 0. Variables declared in the
// header but missing from every quantifier line are bound as outermost
// existentials in id order.
//
// Paired-SAT extension: "p psat <n> <m> <k>" header, k pair lines
// "d <first> <second> 0", then standard clause lines.

QbfFormula parse_qdimacs(std::string_view text);
std::string emit_qdimacs(const QbfFormula& f);

PairedSatInstance parse_psat(std::string_view text);
std::string emit_psat(const PairedSatInstance& inst);

} // namespace qpg

#endif
