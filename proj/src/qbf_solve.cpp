#include "qpg/qbf_solve.hpp"

#include <algorithm>
#include <cstring>
#include <set>
#include <sstream>
#include <unordered_map>

namespace qpg {

namespace {

using Residual = std::vector<std::vector<Lit>>;

void encode_residual(int depth, const Residual& res, std::string& key) {
    // Clause literal lists stay sorted; sorting the clause list makes the
    // key canonical across move orders that meet in the same state.
    std::vector<const std::vector<Lit>*> order;
    order.reserve(res.size());
    for (const auto& c : res) order.push_back(&c);
    std::sort(order.begin(), order.end(),
              [](const std::vector<Lit>* a, const std::vector<Lit>* b) { return *a < *b; });
    key.clear();
    auto put = [&key](int v) {
        char buf[sizeof(int)];
        std::memcpy(buf, &v, sizeof(int));
        key.append(buf, sizeof(int));
    };
    put(depth);
    for (const auto* c : order) {
        for (Lit l : *c) put(l);
        put(0);
    }
}

// Applies var=value to the residual. Returns false if a clause went empty.
bool reduce_residual(const Residual& res, Var v, bool value, Residual& out) {
    out.clear();
    out.reserve(res.size());
    Lit satisfied = value ? v : -v;
    Lit falsified = value ? -v : v;
    for (const auto& c : res) {
        bool sat = false;
        for (Lit l : c) {
            if (l == satisfied) {
                sat = true;
                break;
            }
        }
        if (sat) continue;
        std::vector<Lit> nc;
        nc.reserve(c.size());
        for (Lit l : c) {
            if (l != falsified) nc.push_back(l);
        }
        if (nc.empty()) return false;
        out.push_back(std::move(nc));
    }
    return true;
}

bool occurs(const Residual& res, Var v) {
    for (const auto& c : res) {
        for (Lit l : c) {
            if (var_of(l) == v) return true;
        }
    }
    return false;
}

struct OracleCtx {
    const QuantifierPrefix& prefix;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::unordered_map<std::string, bool> memo;
    std::string keybuf;

    // nullopt: budget exhausted somewhere this value still depends on.
    std::optional<bool> eval(int depth, const Residual& res) {
        if (++nodes > budget) return std::nullopt;
        if (res.empty()) return true;
        if (depth == static_cast<int>(prefix.size())) return res.empty();

        Var v = prefix[static_cast<size_t>(depth)].var;
        if (!occurs(res, v)) return eval(depth + 1, res);

        encode_residual(depth, res, keybuf);
        if (auto it = memo.find(keybuf); it != memo.end()) return it->second;
        std::string key = keybuf;

        bool exists = prefix[static_cast<size_t>(depth)].q == Quantifier::Exists;
        std::optional<bool> acc = exists ? std::optional<bool>(false) : std::optional<bool>(true);
        for (bool value : {false, true}) {
            Residual child;
            std::optional<bool> r;
            if (!reduce_residual(res, v, value, child)) {
                r = false; // an empty clause: Falsifier wins this branch
            } else {
                r = eval(depth + 1, child);
            }
            if (r.has_value() && *r == exists) {
                // Winning branch for the branching player decides the node.
                memo.emplace(std::move(key), exists);
                return exists;
            }
            if (!r.has_value()) acc = std::nullopt;
        }
        if (acc.has_value()) memo.emplace(std::move(key), *acc);
        return acc;
    }
};

} // namespace

QbfOutcome solve_qbf_oracle(const QbfFormula& f, std::uint64_t node_budget) {
    f.validate();
    Residual res;
    res.reserve(f.matrix.clauses.size());
    bool empty_clause = false;
    for (const Clause& c : f.matrix.clauses) {
        if (c.empty()) empty_clause = true;
        res.push_back(c.lits);
    }
    if (empty_clause) return {QbfWinner::Falsifier, true, 0};

    OracleCtx ctx{f.prefix, node_budget};
    std::optional<bool> r = ctx.eval(0, res);
    QbfOutcome out;
    out.nodes = ctx.nodes;
    if (!r.has_value()) {
        out.exact = false;
        return out;
    }
    out.winner = *r ? QbfWinner::Satisfier : QbfWinner::Falsifier;
    return out;
}

// --- QBF-2 rewriting engine ----------------------------------------------
//
// The public apply_rule takes one step of this engine; solve_qbf2 loops it
// in place, so the two necessarily agree on rule choice and order.

namespace {

struct Qbf2Engine {
    QuantifierPrefix prefix;                 // innermost at the back
    std::vector<std::vector<Lit>> clauses;   // sorted literal lists
    std::vector<char> alive;
    std::vector<std::vector<int>> occ;       // var -> alive clause ids, ascending
    std::set<int> tautological;              // alive tautological clause ids
    int alive_count = 0;
    std::vector<Lit> scratch;                // reused resolvent buffer

    struct Step {
        Rule rule;
        Var variable = 0;             // engine (original) id, 0 for tautology removal
        std::vector<int> clause_ids;  // engine clause ids
        Verdict verdict = Verdict::Continue;
    };

    explicit Qbf2Engine(const QbfFormula& f) {
        f.validate();
        prefix = f.prefix;
        occ.assign(static_cast<size_t>(f.matrix.num_vars) + 1, {});
        clauses.reserve(f.matrix.clauses.size());
        for (const Clause& c : f.matrix.clauses) {
            int id = static_cast<int>(clauses.size());
            clauses.push_back(c.lits);
            alive.push_back(1);
            ++alive_count;
            for (Var v : c.variables()) occ[static_cast<size_t>(v)].push_back(id);
            if (c.tautological()) tautological.insert(id);
            if (c.empty())
                throw PreconditionError("formula contains an empty clause; it is false on sight");
        }
        for (Var v = 1; v <= f.matrix.num_vars; ++v) {
            if (occ[static_cast<size_t>(v)].size() > 2)
                throw PreconditionError("variable " + std::to_string(v) + " has degree " +
                                        std::to_string(occ[static_cast<size_t>(v)].size()) +
                                        " > 2; the procedure is undefined outside degree 2");
        }
        if (prefix.empty() && clauses.empty())
            throw PreconditionError("formula has no variable and no clause");
    }

    bool done() const { return alive_count == 0 && prefix.empty(); }

    void drop_clause(int id) {
        alive[static_cast<size_t>(id)] = 0;
        --alive_count;
        tautological.erase(id);
        for (Lit l : clauses[static_cast<size_t>(id)]) {
            auto& list = occ[static_cast<size_t>(var_of(l))];
            list.erase(std::remove(list.begin(), list.end(), id), list.end());
        }
        clauses[static_cast<size_t>(id)].clear();
    }

    static bool is_tautological(const std::vector<Lit>& lits) {
        for (size_t i = 1; i < lits.size(); ++i) {
            if (var_of(lits[i]) == var_of(lits[i - 1])) return true;
        }
        return false;
    }

    Step step() {
        Step s;
        if (!tautological.empty()) {
            int id = *tautological.begin();
            s.rule = Rule::TautologyRemoval;
            s.clause_ids = {id};
            drop_clause(id);
            s.verdict = done() ? Verdict::True : Verdict::Continue;
            return s;
        }
        if (prefix.empty())
            throw PreconditionError("no rule applies: clauses remain but no variable is quantified");

        PrefixEntry inner = prefix.back();
        Var x = inner.var;
        std::vector<int> occs = occ[static_cast<size_t>(x)];
        s.variable = x;
        s.clause_ids = occs;

        if (occs.empty()) {
            s.rule = Rule::UnusedVariable;
            prefix.pop_back();
            s.verdict = done() ? Verdict::True : Verdict::Continue;
            return s;
        }
        if (inner.q == Quantifier::Forall) {
            s.rule = Rule::UniversalElimination;
            bool made_empty = false;
            for (int id : occs) {
                auto& lits = clauses[static_cast<size_t>(id)];
                lits.erase(std::remove_if(lits.begin(), lits.end(),
                                          [x](Lit l) { return var_of(l) == x; }),
                           lits.end());
                if (lits.empty()) made_empty = true;
            }
            occ[static_cast<size_t>(x)].clear();
            prefix.pop_back();
            s.verdict = made_empty ? Verdict::False : Verdict::Continue;
            return s;
        }
        // Existential: after tautology removal x occurs in one polarity per clause.
        int pos_id = -1, neg_id = -1;
        for (int id : occs) {
            const auto& lits = clauses[static_cast<size_t>(id)];
            bool has_pos = std::find(lits.begin(), lits.end(), x) != lits.end();
            (has_pos ? pos_id : neg_id) = id;
        }
        if (pos_id < 0 || neg_id < 0) {
            s.rule = Rule::PureExistential;
            for (int id : occs) drop_clause(id);
            prefix.pop_back();
            s.verdict = done() ? Verdict::True : Verdict::Continue;
            return s;
        }
        s.rule = Rule::ExistentialResolution;
        // Both clauses are sorted, so the resolvent is a linear merge into a
        // reused buffer; this keeps the whole procedure quadratic (and free
        // of allocation churn) even on long resolution chains.
        std::vector<Lit>& resolvent = scratch;
        resolvent.clear();
        {
            auto lit_less = [](Lit a, Lit b) {
                if (var_of(a) != var_of(b)) return var_of(a) < var_of(b);
                return positive(a) && !positive(b);
            };
            const auto& ca = clauses[static_cast<size_t>(pos_id)];
            const auto& cb = clauses[static_cast<size_t>(neg_id)];
            resolvent.reserve(ca.size() + cb.size());
            size_t i = 0, j = 0;
            while (i < ca.size() || j < cb.size()) {
                Lit next;
                if (j == cb.size() || (i < ca.size() && lit_less(ca[i], cb[j]))) next = ca[i++];
                else if (i == ca.size() || lit_less(cb[j], ca[i])) next = cb[j++];
                else {
                    next = ca[i++];
                    ++j;
                }
                if (var_of(next) == x) continue;
                if (resolvent.empty() || resolvent.back() != next) resolvent.push_back(next);
            }
        }

        int keep = std::min(pos_id, neg_id);
        int kill = std::max(pos_id, neg_id);
        drop_clause(kill);
        // Replace the surviving clause's content (swap keeps the buffers
        // recycling between scratch and the clause store).
        for (Lit l : clauses[static_cast<size_t>(keep)]) {
            auto& list = occ[static_cast<size_t>(var_of(l))];
            list.erase(std::remove(list.begin(), list.end(), keep), list.end());
        }
        std::swap(clauses[static_cast<size_t>(keep)], scratch);
        const std::vector<Lit>& merged = clauses[static_cast<size_t>(keep)];
        Var prev = 0;
        for (Lit l : merged) {
            if (var_of(l) != prev) {
                auto& list = occ[static_cast<size_t>(var_of(l))];
                list.insert(std::upper_bound(list.begin(), list.end(), keep), keep);
                prev = var_of(l);
            }
        }
        prefix.pop_back();
        if (merged.empty()) {
            s.verdict = Verdict::False;
        } else {
            if (is_tautological(merged)) tautological.insert(keep);
            s.verdict = Verdict::Continue;
        }
        return s;
    }

    // Current formula with contiguous ids (ascending original id order).
    QbfFormula materialize(std::vector<Var>* id_map_out = nullptr) const {
        std::vector<Var> live;
        for (const auto& e : prefix) live.push_back(e.var);
        std::sort(live.begin(), live.end());
        std::vector<Var> remap(occ.size(), 0);
        for (size_t i = 0; i < live.size(); ++i) remap[static_cast<size_t>(live[i])] = static_cast<Var>(i + 1);
        if (id_map_out) *id_map_out = remap;

        QbfFormula f;
        f.matrix.num_vars = static_cast<int>(live.size());
        for (const auto& e : prefix) f.prefix.push_back({remap[static_cast<size_t>(e.var)], e.q});
        for (size_t id = 0; id < clauses.size(); ++id) {
            if (!alive[id]) continue;
            std::vector<Lit> lits;
            lits.reserve(clauses[id].size());
            for (Lit l : clauses[id])
                lits.push_back(positive(l) ? remap[static_cast<size_t>(var_of(l))]
                                           : -remap[static_cast<size_t>(var_of(l))]);
            f.matrix.clauses.emplace_back(std::move(lits));
        }
        return f;
    }

    // Rank of an alive clause id among alive clauses (1-based).
    int clause_rank(int id) const {
        int r = 0;
        for (int i = 0; i <= id; ++i) {
            if (alive[static_cast<size_t>(i)]) ++r;
        }
        return r;
    }
};

void check_degree2(const QbfFormula& f) {
    DegreeProfile p = degree_profile(f.matrix);
    for (Var v = 1; v <= f.matrix.num_vars; ++v) {
        if (p.degree[static_cast<size_t>(v)] > 2)
            throw PreconditionError("variable " + std::to_string(v) + " has degree " +
                                    std::to_string(p.degree[static_cast<size_t>(v)]) + " > 2");
    }
}

} // namespace

RuleApplication apply_rule(const QbfFormula& f) {
    check_degree2(f);
    Qbf2Engine engine(f);
    // Record the pre-step clause ranks: engine ids equal input indices here.
    Qbf2Engine::Step s = engine.step();
    RuleApplication app;
    app.rule = s.rule;
    app.variable = s.variable;
    for (int id : s.clause_ids) app.clauses.push_back(id + 1);
    app.result = engine.materialize();
    app.verdict = s.verdict;
    return app;
}

Qbf2Result solve_qbf2(const QbfFormula& f, TraceDetail detail) {
    check_degree2(f);
    Qbf2Result out;
    for (const Clause& c : f.matrix.clauses) {
        if (c.empty()) {
            out.outcome = {QbfWinner::Falsifier, true, 0};
            return out;
        }
    }
    if (f.matrix.clauses.empty() && f.prefix.empty()) {
        out.outcome = {QbfWinner::Satisfier, true, 0};
        return out;
    }

    Qbf2Engine engine(f);
    std::vector<Var> pre_map; // original id -> current-formula id
    while (true) {
        std::vector<int> pre_rank; // engine clause id -> 1-based alive rank
        if (detail == TraceDetail::Full) {
            engine.materialize(&pre_map);
            pre_rank.assign(engine.clauses.size(), 0);
            int r = 0;
            for (size_t id = 0; id < engine.clauses.size(); ++id) {
                if (engine.alive[id]) pre_rank[id] = ++r;
            }
        }
        Qbf2Engine::Step s = engine.step();

        RuleApplication app;
        app.rule = s.rule;
        if (detail == TraceDetail::Full) {
            app.variable = s.variable == 0 ? 0 : pre_map[static_cast<size_t>(s.variable)];
            for (int id : s.clause_ids) app.clauses.push_back(pre_rank[static_cast<size_t>(id)]);
            app.result = engine.materialize();
        } else {
            app.variable = s.variable;
            for (int id : s.clause_ids) app.clauses.push_back(id + 1);
        }
        app.verdict = s.verdict;
        out.trace.push_back(std::move(app));

        if (s.verdict == Verdict::True) {
            out.outcome = {QbfWinner::Satisfier, true, out.trace.size()};
            return out;
        }
        if (s.verdict == Verdict::False) {
            out.outcome = {QbfWinner::Falsifier, true, out.trace.size()};
            return out;
        }
    }
}

std::string trace_to_text(const std::vector<RuleApplication>& trace) {
    std::ostringstream out;
    for (const auto& app : trace) {
        switch (app.rule) {
        case Rule::TautologyRemoval: out << "R1 tautology clause"; break;
        case Rule::UniversalElimination: out << "R2 forall x" << app.variable; break;
        case Rule::PureExistential: out << "R3 pure x" << app.variable; break;
        case Rule::ExistentialResolution: out << "R4 resolve x" << app.variable; break;
        case Rule::UnusedVariable: out << "R0 unused x" << app.variable; break;
        }
        for (int c : app.clauses) out << " c" << c;
        switch (app.verdict) {
        case Verdict::Continue: break;
        case Verdict::True: out << " -> true"; break;
        case Verdict::False: out << " -> false"; break;
        }
        out << '\n';
    }
    return out.str();
}

// --- Paired SAT ----------------------------------------------------------

namespace {

struct PairedCtx {
    const std::vector<std::pair<Var, Var>>& pairs;
    std::uint64_t budget;
    std::uint64_t nodes = 0;
    std::unordered_map<std::string, bool> memo;
    std::string keybuf;

    std::optional<bool> eval(std::uint64_t remaining, const Residual& res) {
        if (++nodes > budget) return std::nullopt;
        if (res.empty()) return true;
        if (remaining == 0) return res.empty();

        encode_mask(remaining, res, keybuf);
        if (auto it = memo.find(keybuf); it != memo.end()) return it->second;
        std::string key = keybuf;

        bool any_unknown = false;
        for (size_t i = 0; i < pairs.size(); ++i) {
            if (!(remaining & (1ull << i))) continue;
            for (bool first_value : {false, true}) {
                Residual after_first;
                if (!reduce_residual(res, pairs[i].first, first_value, after_first)) continue;
                // Falsifier replies with the worse of the two values.
                std::optional<bool> line = true;
                for (bool second_value : {false, true}) {
                    Residual after_second;
                    std::optional<bool> r;
                    if (!reduce_residual(after_first, pairs[i].second, second_value, after_second)) {
                        r = false;
                    } else {
                        r = eval(remaining & ~(1ull << i), after_second);
                    }
                    if (r.has_value() && !*r) {
                        line = false;
                        break;
                    }
                    if (!r.has_value()) line = std::nullopt;
                }
                if (line.has_value() && *line) {
                    memo.emplace(std::move(key), true);
                    return true;
                }
                if (!line.has_value()) any_unknown = true;
            }
        }
        if (any_unknown) return std::nullopt;
        memo.emplace(std::move(key), false);
        return false;
    }

    void encode_mask(std::uint64_t mask, const Residual& res, std::string& key) {
        std::vector<const std::vector<Lit>*> order;
        order.reserve(res.size());
        for (const auto& c : res) order.push_back(&c);
        std::sort(order.begin(), order.end(),
                  [](const std::vector<Lit>* a, const std::vector<Lit>* b) { return *a < *b; });
        key.clear();
        key.append(reinterpret_cast<const char*>(&mask), sizeof(mask));
        auto put = [&key](int v) {
            char buf[sizeof(int)];
            std::memcpy(buf, &v, sizeof(int));
            key.append(buf, sizeof(int));
        };
        for (const auto* c : order) {
            for (Lit l : *c) put(l);
            put(0);
        }
    }
};

} // namespace

QbfOutcome solve_paired_sat(const PairedSatInstance& inst, std::uint64_t node_budget) {
    inst.validate();
    if (inst.pairs.size() > 63)
        throw PreconditionError("paired solver supports at most 63 pairs");
    Residual res;
    bool empty_clause = false;
    for (const Clause& c : inst.matrix.clauses) {
        if (c.empty()) empty_clause = true;
        res.push_back(c.lits);
    }
    if (empty_clause) return {QbfWinner::Falsifier, true, 0};

    PairedCtx ctx{inst.pairs, node_budget};
    std::uint64_t all = inst.pairs.empty() ? 0 : (~0ull >> (64 - inst.pairs.size()));
    std::optional<bool> r = ctx.eval(all, res);
    QbfOutcome out;
    out.nodes = ctx.nodes;
    if (!r.has_value()) {
        out.exact = false;
        return out;
    }
    out.winner = *r ? QbfWinner::Satisfier : QbfWinner::Falsifier;
    return out;
}

} // namespace qpg
