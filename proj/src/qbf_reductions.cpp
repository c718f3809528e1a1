#include "qpg/qbf_reductions.hpp"

#include <algorithm>

namespace qpg {

namespace {

void reject_repeated_variables(const QbfFormula& f) {
    for (size_t i = 0; i < f.matrix.clauses.size(); ++i) {
        if (f.matrix.clauses[i].tautological())
            throw PreconditionError("clause " + std::to_string(i + 1) +
                                    " repeats a variable (tautological)");
    }
}

} // namespace

NormalizeResult normalize_3qbf(const QbfFormula& f) {
    f.validate();
    reject_repeated_variables(f);
    for (size_t i = 0; i < f.matrix.clauses.size(); ++i) {
        if (f.matrix.clauses[i].size() > 3)
            throw PreconditionError("clause " + std::to_string(i + 1) + " has size " +
                                    std::to_string(f.matrix.clauses[i].size()) + " > 3");
    }

    NormalizeResult out;
    DegreeProfile prof = degree_profile(f.matrix);

    // Drop unused variables, renumbering the survivors in id order.
    out.trace.renumbering.assign(static_cast<size_t>(f.matrix.num_vars) + 1, 0);
    Var next = 0;
    for (Var v = 1; v <= f.matrix.num_vars; ++v) {
        if (prof.degree[static_cast<size_t>(v)] > 0) {
            out.trace.renumbering[static_cast<size_t>(v)] = ++next;
        } else {
            out.trace.dropped_vars.push_back(v);
        }
    }
    QbfFormula g;
    for (const auto& e : f.prefix) {
        Var nv = out.trace.renumbering[static_cast<size_t>(e.var)];
        if (nv != 0) g.prefix.push_back({nv, e.q});
    }
    g.matrix.num_vars = next;
    for (const Clause& c : f.matrix.clauses) {
        std::vector<Lit> lits;
        for (Lit l : c.lits) {
            Var nv = out.trace.renumbering[static_cast<size_t>(var_of(l))];
            lits.push_back(positive(l) ? nv : -nv);
        }
        g.matrix.clauses.emplace_back(std::move(lits));
    }

    // Pad every clause to size 3 with fresh universals, one per slot, each
    // positive in exactly one clause, appended at the prefix end.
    out.trace.padding.resize(g.matrix.clauses.size());
    for (size_t i = 0; i < g.matrix.clauses.size(); ++i) {
        std::vector<Lit> lits = g.matrix.clauses[i].lits;
        while (lits.size() < 3) {
            Var fresh = ++g.matrix.num_vars;
            g.prefix.push_back({fresh, Quantifier::Forall});
            out.trace.padding[i].push_back(fresh);
            lits.push_back(fresh);
        }
        g.matrix.clauses[i] = Clause(std::move(lits));
    }

    // Triplicate: every clause becomes three identical adjacent occurrences.
    std::vector<Clause> tripled;
    tripled.reserve(g.matrix.clauses.size() * 3);
    for (const Clause& c : g.matrix.clauses) {
        tripled.push_back(c);
        tripled.push_back(c);
        tripled.push_back(c);
    }
    g.matrix.clauses = std::move(tripled);
    g.validate();
    out.formula = std::move(g);
    return out;
}

SplitResult to_3qbf3(const QbfFormula& f) {
    f.validate();
    reject_repeated_variables(f);
    DegreeProfile prof = degree_profile(f.matrix);
    for (size_t i = 0; i < f.matrix.clauses.size(); ++i) {
        if (f.matrix.clauses[i].size() != 3)
            throw PreconditionError("clause " + std::to_string(i + 1) +
                                    " has size != 3; normalize first");
    }
    for (Var v = 1; v <= f.matrix.num_vars; ++v) {
        int d = prof.degree[static_cast<size_t>(v)];
        if (d == 0)
            throw PreconditionError("variable " + std::to_string(v) + " is unused; normalize first");
        if (d % 3 != 0)
            throw PreconditionError("variable " + std::to_string(v) + " has degree " +
                                    std::to_string(d) + ", not a multiple of 3");
    }

    SplitResult out;
    QbfFormula g;

    // Occurrence lists in matrix order (each variable at most once per clause).
    std::vector<std::vector<int>> occ(static_cast<size_t>(f.matrix.num_vars) + 1);
    for (size_t i = 0; i < f.matrix.clauses.size(); ++i) {
        for (Var v : f.matrix.clauses[i].variables()) occ[static_cast<size_t>(v)].push_back(static_cast<int>(i));
    }

    // Expand the prefix in place; output ids follow output prefix order.
    std::vector<std::vector<Var>> chain(static_cast<size_t>(f.matrix.num_vars) + 1);
    Var next = 0;
    for (const auto& e : f.prefix) {
        int d = prof.degree[static_cast<size_t>(e.var)];
        int k = d / 3;
        VariableSplit split;
        split.source = e.var;
        split.occurrences = occ[static_cast<size_t>(e.var)];
        for (int j = 0; j < d; ++j) {
            Var x = ++next;
            g.prefix.push_back({x, j == 0 ? e.q : Quantifier::Exists});
            split.chain.push_back(x);
        }
        for (int l = 0; l < k; ++l) {
            Var y = ++next;
            g.prefix.push_back({y, Quantifier::Forall});
            split.universals.push_back(y);
        }
        chain[static_cast<size_t>(e.var)] = split.chain;
        out.map.splits.push_back(std::move(split));
    }
    g.matrix.num_vars = next;

    // Host clauses: occurrence j of a source variable becomes chain copy j.
    std::vector<int> next_occurrence(static_cast<size_t>(f.matrix.num_vars) + 1, 0);
    for (const Clause& c : f.matrix.clauses) {
        std::vector<Lit> lits;
        for (Lit l : c.lits) {
            Var v = var_of(l);
            Var x = chain[static_cast<size_t>(v)][static_cast<size_t>(next_occurrence[static_cast<size_t>(v)]++)];
            lits.push_back(positive(l) ? x : -x);
        }
        g.matrix.clauses.emplace_back(std::move(lits));
    }

    // Link clauses x^i_j v -x^i_{j+1} v y^i_{ceil((j+1)/3)}, cyclic.
    for (const VariableSplit& split : out.map.splits) {
        int d = static_cast<int>(split.chain.size());
        for (int j = 0; j < d; ++j) {
            Var xj = split.chain[static_cast<size_t>(j)];
            Var xn = split.chain[static_cast<size_t>((j + 1) % d)];
            Var y = split.universals[static_cast<size_t>(j / 3)];
            g.matrix.clauses.emplace_back(std::vector<Lit>{xj, -xn, y});
        }
    }
    g.validate();
    out.formula = std::move(g);
    return out;
}

QbfFormula pad_alternation(const QbfFormula& f, AlternationPattern pattern, bool require_even) {
    f.validate();
    Quantifier expected =
        pattern == AlternationPattern::ExistsFirst ? Quantifier::Exists : Quantifier::Forall;
    auto flip = [](Quantifier q) {
        return q == Quantifier::Exists ? Quantifier::Forall : Quantifier::Exists;
    };

    QbfFormula g;
    g.matrix = f.matrix;
    Var next = f.matrix.num_vars;
    for (const auto& e : f.prefix) {
        while (e.q != expected) {
            g.prefix.push_back({++next, expected});
            expected = flip(expected);
        }
        g.prefix.push_back(e);
        expected = flip(expected);
    }
    if (require_even && g.prefix.size() % 2 != 0) {
        g.prefix.push_back({++next, expected});
    }
    g.matrix.num_vars = next;
    g.validate();
    return g;
}

PairedSatResult qbf_to_paired_sat(const QbfFormula& f) {
    f.validate();
    if (f.prefix.size() % 2 != 0)
        throw PreconditionError("prefix must alternate exists/forall with even length");
    int n = static_cast<int>(f.prefix.size()) / 2;
    for (int i = 0; i < n; ++i) {
        if (f.prefix[static_cast<size_t>(2 * i)].q != Quantifier::Exists ||
            f.prefix[static_cast<size_t>(2 * i + 1)].q != Quantifier::Forall)
            throw PreconditionError("prefix must be exists x_1 forall y_1 ... (pad_alternation first)");
    }
    DegreeProfile prof = degree_profile(f.matrix);
    if (prof.max_degree > 3)
        throw PreconditionError("matrix degree " + std::to_string(prof.max_degree) + " > 3");

    PairedSatResult out;
    PairedSatMap& map = out.map;
    for (int i = 0; i < n; ++i) {
        map.source_exists.push_back(f.prefix[static_cast<size_t>(2 * i)].var);
        map.source_foralls.push_back(f.prefix[static_cast<size_t>(2 * i + 1)].var);
    }
    Var next = f.matrix.num_vars;
    map.z0 = ++next;
    map.y0 = ++next;
    for (int i = 0; i < n; ++i) {
        map.t.push_back(++next);
        map.z.push_back(++next);
    }

    PairedSatInstance inst;
    inst.matrix.num_vars = next;
    inst.matrix.clauses = f.matrix.clauses;
    inst.pairs.emplace_back(map.z0, map.y0);
    for (int i = 0; i < n; ++i) {
        inst.pairs.emplace_back(map.source_exists[static_cast<size_t>(i)], map.t[static_cast<size_t>(i)]);
        inst.pairs.emplace_back(map.z[static_cast<size_t>(i)], map.source_foralls[static_cast<size_t>(i)]);
    }
    // Per i: the 4-clause expansion of y_{i-1} xor t_i xor z_i.
    for (int i = 0; i < n; ++i) {
        Var a = i == 0 ? map.y0 : map.source_foralls[static_cast<size_t>(i - 1)];
        Var b = map.t[static_cast<size_t>(i)];
        Var c = map.z[static_cast<size_t>(i)];
        inst.matrix.clauses.emplace_back(std::vector<Lit>{a, b, c});
        inst.matrix.clauses.emplace_back(std::vector<Lit>{-a, -b, c});
        inst.matrix.clauses.emplace_back(std::vector<Lit>{-a, b, -c});
        inst.matrix.clauses.emplace_back(std::vector<Lit>{a, -b, -c});
    }
    inst.validate();
    out.instance = std::move(inst);
    return out;
}

void to_json(nlohmann::json& j, const NormalizeTrace& t) {
    j = nlohmann::json{{"dropped_vars", t.dropped_vars},
                       {"renumbering", t.renumbering},
                       {"padding", t.padding}};
}

void to_json(nlohmann::json& j, const VariableSplitMap& m) {
    j = nlohmann::json::array();
    for (const auto& s : m.splits) {
        j.push_back({{"source", s.source},
                     {"chain", s.chain},
                     {"universals", s.universals},
                     {"occurrences", s.occurrences}});
    }
}

void to_json(nlohmann::json& j, const PairedSatMap& m) {
    j = nlohmann::json{{"source_exists", m.source_exists},
                       {"source_foralls", m.source_foralls},
                       {"y0", m.y0},
                       {"z0", m.z0},
                       {"t", m.t},
                       {"z", m.z}};
}

} // namespace qpg
