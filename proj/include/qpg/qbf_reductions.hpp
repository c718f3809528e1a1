#ifndef QPG_QBF_REDUCTIONS_HPP
#define QPG_QBF_REDUCTIONS_HPP

#include <vector>

#include "qpg/formula.hpp"

#include "json.hpp"

namespace qpg {

// Formula-to-formula transformations. All of them are deterministic:
// identical inputs produce byte-identical outputs, and fresh-variable
// numbering is a pure function of the input structure.

/// Provenance of normalize_3qbf.
struct NormalizeTrace {
    std::vector<Var> dropped_vars;          // degree-0 source variables (input ids)
    std::vector<Var> renumbering;           // input id -> output id, 0 if dropped; index 0 unused
    std::vector<std::vector<Var>> padding;  // per input clause: fresh universal ids (output numbering)
};

struct NormalizeResult {
    QbfFormula formula;
    NormalizeTrace trace;
};

/// Brings a rank <= 3 formula to the shape the variable-splitting gadget
/// expects: degree-0 variables are dropped, every clause is padded to size
/// exactly 3 with fresh universals (one per slot, each positive in exactly
/// one clause, appended at the end of the prefix), and every clause is then
/// replaced by 3 identical occurrences. The result is 3-uniform with all
/// degrees divisible by 3 and has the same game outcome as the input.
/// Rejects formulas of rank > 3 and clauses with a repeated variable.
NormalizeResult normalize_3qbf(const QbfFormula& f);

/// Per-variable record of the degree-reduction gadget: the chain variables
/// x^i_1..x^i_{3k}, the universals y^i_1..y^i_k, and which clause
/// occurrence received which chain variable.
struct VariableSplit {
    Var source;                      // input id
    std::vector<Var> chain;          // output ids, length 3k
    std::vector<Var> universals;     // output ids, length k
    std::vector<int> occurrences;    // input clause index of occurrence j
};

struct VariableSplitMap {
    std::vector<VariableSplit> splits; // in input prefix order
};

struct SplitResult {
    QbfFormula formula;
    VariableSplitMap map;
};

/// The 3-QBF-3 gadget. Requires a normalized input (3-uniform, every
/// degree a positive multiple of 3, no repeated variable in a clause).
/// Each variable of degree 3k becomes a cyclic chain of 3k copies linked
/// by clauses x^i_j v -x^i_{j+1} v y^i_{ceil(j/3)}; occurrence j of the
/// source variable is rewritten to x^i_j with polarity preserved. The
/// output is 3-uniform and 3-regular and preserves the game outcome.
SplitResult to_3qbf3(const QbfFormula& f);

enum class AlternationPattern { ExistsFirst, ForallFirst };

/// Inserts fresh degree-0 variables into the prefix so that quantifiers
/// strictly alternate in the requested pattern; when require_even, the
/// total variable count is made even. The matrix and the outcome are
/// unchanged. Already-conforming inputs are returned unchanged.
QbfFormula pad_alternation(const QbfFormula& f, AlternationPattern pattern,
                           bool require_even);

/// Names of the variables introduced by qbf_to_paired_sat.
struct PairedSatMap {
    std::vector<Var> source_exists;   // x_1..x_n (source ids)
    std::vector<Var> source_foralls;  // y_1..y_n (source ids)
    Var y0 = 0;
    Var z0 = 0;
    std::vector<Var> t; // t_1..t_n
    std::vector<Var> z; // z_1..z_n
};

struct PairedSatResult {
    PairedSatInstance instance;
    PairedSatMap map;
};

/// QBF -> Paired SAT. Requires a strictly alternating exists-first prefix
/// of even length (use pad_alternation first) and matrix degree <= 3.
/// Pairs are (z_0,y_0),(x_1,t_1),(z_1,y_1),...,(x_n,t_n),(z_n,y_n); the
/// matrix gains, per i, the 4-clause expansion of y_{i-1} xor t_i xor z_i.
/// The output degree is at most 7.
PairedSatResult qbf_to_paired_sat(const QbfFormula& f);

void to_json(nlohmann::json& j, const NormalizeTrace& t);
void to_json(nlohmann::json& j, const VariableSplitMap& m);
void to_json(nlohmann::json& j, const PairedSatMap& m);

} // namespace qpg

#endif
