#include "qpg/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>

#include "qpg/qbf_reductions.hpp"
#include "qpg/qbf_solve.hpp"

namespace qpg {

namespace {

// rng() % n is used instead of std::uniform_int_distribution: the latter is
// implementation-defined, and reports must be byte-identical across builds.
int pick(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); }

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace

QbfFormula gen_random_qbf(std::uint64_t seed, int num_vars, int num_clauses, int rank,
                          int max_degree, QuantPattern pattern) {
    if (num_vars < 0 || num_clauses < 0 || rank < 1 || max_degree < 1)
        throw PreconditionError("infeasible generator parameters");
    if (num_clauses > 0 && num_vars == 0)
        throw PreconditionError("clauses need variables");

    if (static_cast<long>(num_clauses) > static_cast<long>(num_vars) * max_degree)
        throw PreconditionError("infeasible parameters: " + std::to_string(num_clauses) +
                                " clauses need more than " + std::to_string(num_vars) + "*" +
                                std::to_string(max_degree) + " literal slots");

    std::mt19937_64 rng(seed);
    std::vector<int> capacity(static_cast<size_t>(num_vars) + 1, max_degree);
    long slack = static_cast<long>(num_vars) * max_degree - num_clauses;
    std::vector<Clause> clauses;
    for (int c = 0; c < num_clauses; ++c) {
        std::vector<Var> candidates;
        for (Var v = 1; v <= num_vars; ++v) {
            if (capacity[static_cast<size_t>(v)] > 0) candidates.push_back(v);
        }
        // Later clauses still need one slot each; cap this clause's size so
        // the requested count always fits.
        int max_size = static_cast<int>(std::min<long>(
            std::min<int>(rank, static_cast<int>(candidates.size())), 1 + slack));
        int size = 1 + pick(rng, max_size);
        slack -= size - 1;
        std::vector<Lit> lits;
        for (int k = 0; k < size; ++k) {
            int idx = pick(rng, static_cast<int>(candidates.size()));
            Var v = candidates[static_cast<size_t>(idx)];
            candidates.erase(candidates.begin() + idx);
            --capacity[static_cast<size_t>(v)];
            lits.push_back(rng() & 1 ? v : -v);
        }
        clauses.emplace_back(std::move(lits));
    }

    QbfFormula f;
    f.matrix.num_vars = num_vars;
    f.matrix.clauses = std::move(clauses);
    for (Var v = 1; v <= num_vars; ++v) {
        Quantifier q = Quantifier::Exists;
        switch (pattern) {
        case QuantPattern::Random: q = rng() & 1 ? Quantifier::Exists : Quantifier::Forall; break;
        case QuantPattern::AlternateExistsFirst:
            q = v % 2 == 1 ? Quantifier::Exists : Quantifier::Forall;
            break;
        case QuantPattern::AlternateForallFirst:
            q = v % 2 == 1 ? Quantifier::Forall : Quantifier::Exists;
            break;
        case QuantPattern::AllExists: q = Quantifier::Exists; break;
        case QuantPattern::AllForall: q = Quantifier::Forall; break;
        }
        f.prefix.push_back({v, q});
    }
    f.validate();
    return f;
}

Hypergraph gen_random_hypergraph(std::uint64_t seed, int num_vertices, int num_edges, int rank,
                                 bool uniform) {
    if (num_vertices < 1 || num_edges < 0 || rank < 1 || rank > num_vertices)
        throw PreconditionError("infeasible generator parameters");
    std::mt19937_64 rng(seed);
    Hypergraph h;
    h.num_vertices = num_vertices;
    for (int e = 0; e < num_edges; ++e) {
        int size = uniform ? rank : 1 + pick(rng, rank);
        std::vector<int> pool;
        for (int v = 1; v <= num_vertices; ++v) pool.push_back(v);
        std::vector<int> members;
        for (int k = 0; k < size; ++k) {
            int idx = pick(rng, static_cast<int>(pool.size()));
            members.push_back(pool[static_cast<size_t>(idx)]);
            pool.erase(pool.begin() + idx);
        }
        h.add_edge(std::move(members));
    }
    return h;
}

PairedSatInstance gen_random_paired_sat(std::uint64_t seed, int num_pairs, int num_clauses,
                                        int max_clause_size, int max_degree) {
    if (num_pairs < 1 || num_clauses < 0 || max_clause_size < 1 || max_degree < 1)
        throw PreconditionError("infeasible generator parameters");
    std::mt19937_64 rng(seed);
    PairedSatInstance inst;
    inst.matrix.num_vars = 2 * num_pairs;
    for (int i = 0; i < num_pairs; ++i) inst.pairs.emplace_back(2 * i + 1, 2 * i + 2);

    std::vector<int> capacity(static_cast<size_t>(inst.matrix.num_vars) + 1, max_degree);
    for (int c = 0; c < num_clauses; ++c) {
        // Anchor each clause on a Satisfier (odd) variable.
        std::vector<Var> firsts;
        for (int i = 0; i < num_pairs; ++i) {
            if (capacity[static_cast<size_t>(2 * i + 1)] > 0) firsts.push_back(2 * i + 1);
        }
        if (firsts.empty())
            throw PreconditionError("infeasible parameters: no Satisfier variable left for clause " +
                                    std::to_string(c + 1));
        Var anchor = firsts[static_cast<size_t>(pick(rng, static_cast<int>(firsts.size())))];
        --capacity[static_cast<size_t>(anchor)];
        std::vector<Lit> lits{rng() & 1 ? anchor : -anchor};

        std::vector<Var> candidates;
        for (Var v = 1; v <= inst.matrix.num_vars; ++v) {
            if (v != anchor && capacity[static_cast<size_t>(v)] > 0) candidates.push_back(v);
        }
        int extra = pick(rng, std::min<int>(max_clause_size,
                                            1 + static_cast<int>(candidates.size())));
        for (int k = 0; k < extra && k < max_clause_size - 1 && !candidates.empty(); ++k) {
            int idx = pick(rng, static_cast<int>(candidates.size()));
            Var v = candidates[static_cast<size_t>(idx)];
            candidates.erase(candidates.begin() + idx);
            --capacity[static_cast<size_t>(v)];
            lits.push_back(rng() & 1 ? v : -v);
        }
        inst.matrix.clauses.emplace_back(std::move(lits));
    }
    inst.validate();
    return inst;
}

// --- canonical families ---------------------------------------------------

namespace {

// All clauses over n variables with the given maximum size; distinct
// literals, and (optionally) both polarities of one variable allowed.
std::vector<Clause> clause_universe(int num_vars, int max_size, bool allow_tautologies) {
    std::vector<Lit> literals;
    for (Var v = 1; v <= num_vars; ++v) {
        literals.push_back(v);
        literals.push_back(-v);
    }
    std::vector<Clause> out;
    std::vector<int> idx;
    auto emit = [&]() {
        std::vector<Lit> lits;
        for (int i : idx) lits.push_back(literals[static_cast<size_t>(i)]);
        Clause c(lits);
        if (c.size() != static_cast<int>(idx.size())) return; // duplicate literal collapsed
        if (!allow_tautologies && c.tautological()) return;
        out.push_back(std::move(c));
    };
    // Subsets of the literal list, size 1..max_size, lexicographic.
    std::vector<int> stack;
    auto rec = [&](auto&& self, int start) -> void {
        if (!stack.empty()) {
            idx = stack;
            emit();
        }
        if (static_cast<int>(stack.size()) == max_size) return;
        for (int i = start; i < static_cast<int>(literals.size()); ++i) {
            stack.push_back(i);
            self(self, i + 1);
            stack.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Multisets (non-decreasing index tuples) of size 0..max_count.
void multisets(int universe, int max_count, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> chosen;
    auto rec = [&](auto&& self, int start) -> void {
        fn(chosen);
        if (static_cast<int>(chosen.size()) == max_count) return;
        for (int i = start; i < universe; ++i) {
            chosen.push_back(i);
            self(self, i);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
}

} // namespace

std::vector<QbfFormula> enumerate_qbf2_family(int max_vars, int max_clauses, int max_clause_size) {
    std::vector<QbfFormula> out;
    for (int n = 1; n <= max_vars; ++n) {
        std::vector<Clause> universe = clause_universe(n, max_clause_size, true);
        std::vector<std::vector<Clause>> matrices;
        multisets(static_cast<int>(universe.size()), max_clauses, [&](const std::vector<int>& pickd) {
            std::vector<Clause> clauses;
            for (int i : pickd) clauses.push_back(universe[static_cast<size_t>(i)]);
            CnfMatrix m{n, clauses};
            if (degree_profile(m).max_degree > 2) return;
            matrices.push_back(std::move(clauses));
        });
        for (int bits = 0; bits < (1 << n); ++bits) {
            QuantifierPrefix prefix;
            for (Var v = 1; v <= n; ++v)
                prefix.push_back({v, (bits >> (v - 1)) & 1 ? Quantifier::Forall : Quantifier::Exists});
            for (const auto& clauses : matrices) {
                out.push_back(QbfFormula{prefix, CnfMatrix{n, clauses}});
            }
        }
    }
    return out;
}

std::vector<QbfFormula> enumerate_alternating_family(int n_pairs, int max_clauses,
                                                     int max_clause_size) {
    int n = 2 * n_pairs;
    QuantifierPrefix prefix;
    for (Var v = 1; v <= n; ++v)
        prefix.push_back({v, v % 2 == 1 ? Quantifier::Exists : Quantifier::Forall});
    std::vector<Clause> universe = clause_universe(n, max_clause_size, false);
    std::vector<QbfFormula> out;
    multisets(static_cast<int>(universe.size()), max_clauses, [&](const std::vector<int>& pickd) {
        std::vector<Clause> clauses;
        for (int i : pickd) clauses.push_back(universe[static_cast<size_t>(i)]);
        CnfMatrix m{n, clauses};
        if (degree_profile(m).max_degree > 3) return;
        out.push_back(QbfFormula{prefix, std::move(m)});
    });
    return out;
}

std::vector<Hypergraph> enumerate_small_hypergraphs(int max_vertices, int max_edges) {
    std::vector<Hypergraph> out;
    for (int nv = 1; nv <= max_vertices; ++nv) {
        std::vector<std::vector<int>> universe;
        for (int mask = 1; mask < (1 << nv); ++mask) {
            std::vector<int> e;
            for (int v = 1; v <= nv; ++v) {
                if (mask & (1 << (v - 1))) e.push_back(v);
            }
            universe.push_back(std::move(e));
        }
        // Distinct edge sets (duplicate hyperedges do not change outcomes).
        std::vector<int> chosen;
        auto rec = [&](auto&& self, int start) -> void {
            Hypergraph h;
            h.num_vertices = nv;
            for (int i : chosen) h.add_edge(universe[static_cast<size_t>(i)]);
            out.push_back(std::move(h));
            if (static_cast<int>(chosen.size()) == max_edges) return;
            for (int i = start; i < static_cast<int>(universe.size()); ++i) {
                chosen.push_back(i);
                self(self, i + 1);
                chosen.pop_back();
            }
        };
        rec(rec, 0);
    }
    return out;
}

// --- fingerprints -----------------------------------------------------------

std::string fingerprint(const std::string& canonical_text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : canonical_text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string fingerprint(const QbfFormula& f) { return fingerprint(emit_qdimacs(f)); }
std::string fingerprint(const PairedSatInstance& inst) { return fingerprint(emit_psat(inst)); }
std::string fingerprint(const Hypergraph& h) { return fingerprint(emit_hypergraph(h)); }

// --- calibration -------------------------------------------------------------

AeCalibration calibrate_ae_convention(const std::vector<QbfFormula>& sample,
                                      std::uint64_t game_budget) {
    AeCalibration out;
    out.sample_size = static_cast<int>(sample.size());

    std::vector<bool> satisfier_wins;
    std::vector<GameWinner> ae_first_one, ae_first_two;
    for (const QbfFormula& f : sample) {
        QbfOutcome oracle = solve_qbf_oracle(f);
        if (!oracle.exact)
            throw PreconditionError("calibration sample instance not exactly solvable");
        satisfier_wins.push_back(*oracle.winner == QbfWinner::Satisfier);
        AeResult ae = qbf3_to_avoider_enforcer(f);
        for (Player first : {Player::One, Player::Two}) {
            Convention conv{GameKind::AvoiderEnforcer, first, LoneVertexRule::ToClient};
            GameOutcome g = solve_positional(ae.graph, conv, game_budget);
            if (!g.exact)
                throw PreconditionError("calibration game not exactly solvable within budget");
            (first == Player::One ? ae_first_one : ae_first_two).push_back(*g.winner);
        }
    }

    for (Player first : {Player::One, Player::Two}) {
        for (bool satisfier_is_avoider : {true, false}) {
            bool ok = true;
            for (size_t i = 0; i < sample.size(); ++i) {
                GameWinner got = (first == Player::One ? ae_first_one : ae_first_two)[i];
                bool avoider_won = got == GameWinner::AvoiderWin;
                bool predicted_avoider_won =
                    satisfier_is_avoider ? satisfier_wins[i] : !satisfier_wins[i];
                if (avoider_won != predicted_avoider_won) {
                    ok = false;
                    break;
                }
            }
            if (ok) out.consistent.push_back({first, satisfier_is_avoider});
        }
    }
    if (out.consistent.size() == 1) out.frozen = out.consistent.front();
    return out;
}

// --- reports ------------------------------------------------------------------

void VerificationReport::add(CheckRecord rec) {
    switch (rec.status) {
    case CheckStatus::Pass: ++passed; break;
    case CheckStatus::Fail: ++failed; break;
    case CheckStatus::Unknown: ++unknown; break;
    }
    checks.push_back(std::move(rec));
}

void VerificationReport::sort_records() {
    std::stable_sort(checks.begin(), checks.end(), [](const CheckRecord& a, const CheckRecord& b) {
        if (a.check != b.check) return a.check < b.check;
        return a.instance < b.instance;
    });
}

nlohmann::json report_to_json(const VerificationReport& report, bool with_timings) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : report.checks) {
        nlohmann::json j{{"check", c.check},
                         {"instance", c.instance},
                         {"status", c.status == CheckStatus::Pass     ? "pass"
                                    : c.status == CheckStatus::Fail   ? "fail"
                                                                      : "unknown"},
                         {"expected", c.expected},
                         {"observed", c.observed},
                         {"nodes", c.nodes}};
        if (with_timings) j["elapsed_ms"] = c.elapsed_ms;
        checks.push_back(std::move(j));
    }
    nlohmann::json config;
    if (report.frozen_ae) {
        config["ae_first_player"] = report.frozen_ae->first_player == Player::One ? "avoider" : "enforcer";
        config["ae_satisfier_is"] = report.frozen_ae->satisfier_is_avoider ? "avoider" : "enforcer";
    }
    config["cw_lone_vertex"] =
        report.cw_lone_vertex == LoneVertexRule::ToClient ? "to_client" : "to_waiter";
    return nlohmann::json{{"config", config},
                          {"checks", checks},
                          {"summary", {{"pass", report.passed},
                                       {"fail", report.failed},
                                       {"unknown", report.unknown}}}};
}

// --- verification runners -------------------------------------------------------

namespace {

CheckRecord record(const std::string& check, const std::string& instance, CheckStatus status,
                   std::string expected, std::string observed, std::uint64_t nodes, double ms) {
    CheckRecord r;
    r.check = check;
    r.instance = instance;
    r.status = status;
    r.expected = std::move(expected);
    r.observed = std::move(observed);
    r.nodes = nodes;
    r.elapsed_ms = ms;
    return r;
}

std::string winner_name(const QbfOutcome& o) {
    if (!o.exact) return "unknown";
    return *o.winner == QbfWinner::Satisfier ? "satisfier" : "falsifier";
}

template <class T>
std::vector<T> sample_family(std::vector<T> family, FamilyScope scope, std::uint64_t seed,
                             size_t keep) {
    if (scope == FamilyScope::Full || family.size() <= keep) return family;
    std::mt19937_64 rng(seed ^ 0x5eedf00dull);
    std::vector<T> out;
    for (size_t i = 0; i < keep; ++i) {
        size_t idx = rng() % family.size();
        out.push_back(family[idx]);
        family.erase(family.begin() + static_cast<long>(idx));
    }
    return out;
}

void verify_3qbf3(std::uint64_t seed, int count, const Budgets& budgets,
                  VerificationReport& rep) {
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
        QbfFormula src = gen_random_qbf(rng(), 1 + pick(rng, 3), pick(rng, 4), 3, 3,
                                        QuantPattern::Random);
        std::string fp = fingerprint(src);
        auto t0 = std::chrono::steady_clock::now();
        SplitResult split = to_3qbf3(normalize_3qbf(src).formula);
        ClassCheck cls = check_class(split.formula, 3, 3, true, true);
        rep.add(record("3qbf3-class", fp, cls.ok ? CheckStatus::Pass : CheckStatus::Fail,
                       "3-uniform 3-regular", cls.ok ? "ok" : cls.violations.front(), 0,
                       ms_since(t0)));

        t0 = std::chrono::steady_clock::now();
        QbfOutcome before = solve_qbf_oracle(src, budgets.qbf_oracle);
        QbfOutcome after = solve_qbf_oracle(split.formula, budgets.qbf_oracle);
        CheckStatus st = !before.exact || !after.exact ? CheckStatus::Unknown
                         : before.winner == after.winner ? CheckStatus::Pass
                                                         : CheckStatus::Fail;
        rep.add(record("3qbf3-outcome", fp, st, winner_name(before), winner_name(after),
                       before.nodes + after.nodes, ms_since(t0)));
    }
}

void verify_ae(std::uint64_t seed, int count, const Budgets& budgets, FamilyScope scope,
               VerificationReport& rep) {
    // Calibration is a prerequisite for equivalence checks.
    std::vector<QbfFormula> family = enumerate_alternating_family(1, 3, 2);
    AeCalibration cal = calibrate_ae_convention(family, budgets.game);
    rep.frozen_ae = cal.frozen;
    rep.add(record("ae-calibration", "n1-family",
                   cal.frozen ? CheckStatus::Pass : CheckStatus::Fail, "1 consistent configuration",
                   std::to_string(cal.consistent.size()) + " consistent", 0, 0.0));

    if (cal.frozen) {
        auto sample = sample_family(family, scope, seed, 60);
        for (const QbfFormula& f : sample) {
            auto t0 = std::chrono::steady_clock::now();
            QbfOutcome oracle = solve_qbf_oracle(f, budgets.qbf_oracle);
            AeResult ae = qbf3_to_avoider_enforcer(f);
            Convention conv{GameKind::AvoiderEnforcer, cal.frozen->first_player,
                            LoneVertexRule::ToClient};
            GameOutcome g = solve_positional(ae.graph, conv, budgets.game);
            CheckStatus st = CheckStatus::Unknown;
            std::string obs = "unknown";
            if (oracle.exact && g.exact) {
                bool satisfier = *oracle.winner == QbfWinner::Satisfier;
                bool avoider = *g.winner == GameWinner::AvoiderWin;
                bool predicted = cal.frozen->satisfier_is_avoider ? satisfier : !satisfier;
                st = avoider == predicted ? CheckStatus::Pass : CheckStatus::Fail;
                obs = to_string(*g.winner);
            }
            rep.add(record("ae-outcome", fingerprint(f), st, winner_name(oracle), obs,
                           g.nodes, ms_since(t0)));
        }
    }

    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + 0x0ae0 + static_cast<std::uint64_t>(i));
        int pairs = 1 + pick(rng, 4);
        QbfFormula f = gen_random_qbf(rng(), 2 * pairs, 1 + pick(rng, 3 * pairs), 3, 3,
                                      QuantPattern::AlternateExistsFirst);
        auto t0 = std::chrono::steady_clock::now();
        AeResult ae = qbf3_to_avoider_enforcer(f);
        bool ok = ae.graph.rank() <= 6 && ae.graph.max_degree() <= 8;
        rep.add(record("ae-bounds", fingerprint(f), ok ? CheckStatus::Pass : CheckStatus::Fail,
                       "rank<=6 degree<=8",
                       "rank=" + std::to_string(ae.graph.rank()) +
                           " degree=" + std::to_string(ae.graph.max_degree()),
                       0, ms_since(t0)));
    }
}

void verify_psat(std::uint64_t seed, int count, const Budgets& budgets, FamilyScope scope,
                 VerificationReport& rep) {
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + 0x9a7 + static_cast<std::uint64_t>(i));
        int pairs = 1 + pick(rng, 4);
        QbfFormula f = gen_random_qbf(rng(), 2 * pairs, 1 + pick(rng, 3 * pairs), 3, 3,
                                      QuantPattern::AlternateExistsFirst);
        auto t0 = std::chrono::steady_clock::now();
        PairedSatResult red = qbf_to_paired_sat(f);
        int deg = degree_profile(red.instance.matrix).max_degree;
        rep.add(record("psat-bounds", fingerprint(f), deg <= 7 ? CheckStatus::Pass : CheckStatus::Fail,
                       "degree<=7", "degree=" + std::to_string(deg), 0, ms_since(t0)));
    }

    std::vector<QbfFormula> family = enumerate_alternating_family(1, 2, 2);
    std::vector<QbfFormula> pairs2 = enumerate_alternating_family(2, 2, 3);
    family.insert(family.end(), pairs2.begin(), pairs2.end());
    for (const QbfFormula& f : sample_family(family, scope, seed, 120)) {
        auto t0 = std::chrono::steady_clock::now();
        QbfOutcome oracle = solve_qbf_oracle(f, budgets.qbf_oracle);
        PairedSatResult red = qbf_to_paired_sat(f);
        QbfOutcome game = solve_paired_sat(red.instance, budgets.qbf_oracle);
        CheckStatus st = !oracle.exact || !game.exact ? CheckStatus::Unknown
                         : oracle.winner == game.winner ? CheckStatus::Pass
                                                        : CheckStatus::Fail;
        rep.add(record("psat-outcome", fingerprint(f), st, winner_name(oracle), winner_name(game),
                       oracle.nodes + game.nodes, ms_since(t0)));
    }
}

std::vector<PairedSatInstance> cw_pair1_family(int max_clauses) {
    // All instances on one pair (x=1 Satisfier, y=2 Falsifier) whose clauses
    // are not Falsifier-only.
    PairedSatInstance base;
    base.matrix.num_vars = 2;
    base.pairs = {{1, 2}};
    std::vector<Clause> universe;
    for (const Clause& c : {Clause({1}), Clause({-1}), Clause({1, 2}), Clause({1, -2}),
                            Clause({-1, 2}), Clause({-1, -2})})
        universe.push_back(c);
    std::vector<PairedSatInstance> out;
    multisets(static_cast<int>(universe.size()), max_clauses, [&](const std::vector<int>& pickd) {
        PairedSatInstance inst = base;
        for (int i : pickd) inst.matrix.clauses.push_back(universe[static_cast<size_t>(i)]);
        out.push_back(std::move(inst));
    });
    return out;
}

void verify_cw(std::uint64_t seed, int count, const Budgets& budgets, FamilyScope scope,
               VerificationReport& rep) {
    rep.cw_lone_vertex = LoneVertexRule::ToClient;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + 0xc3 + static_cast<std::uint64_t>(i));
        int pairs = 1 + pick(rng, 6);
        PairedSatInstance inst =
            gen_random_paired_sat(rng(), pairs, 1 + pick(rng, 2 * pairs), 3, 7);
        auto t0 = std::chrono::steady_clock::now();
        CwResult red = paired_sat_to_client_waiter(inst);
        bool ok = red.graph.rank() <= 6 && red.graph.max_degree() <= 35 &&
                  red.graph.num_vertices == 8 * pairs;
        rep.add(record("cw-bounds", fingerprint(inst), ok ? CheckStatus::Pass : CheckStatus::Fail,
                       "rank<=6 degree<=35 vertices=8n",
                       "rank=" + std::to_string(red.graph.rank()) +
                           " degree=" + std::to_string(red.graph.max_degree()) +
                           " vertices=" + std::to_string(red.graph.num_vertices),
                       0, ms_since(t0)));
    }

    for (const PairedSatInstance& inst : cw_pair1_family(3)) {
        auto t0 = std::chrono::steady_clock::now();
        QbfOutcome oracle = solve_paired_sat(inst, budgets.qbf_oracle);
        CheckStatus st;
        std::string obs;
        if (has_falsifier_only_clause(inst)) {
            st = !oracle.exact ? CheckStatus::Unknown
                 : *oracle.winner == QbfWinner::Falsifier ? CheckStatus::Pass
                                                          : CheckStatus::Fail;
            obs = "falsifier-only clause shortcut";
        } else {
            CwResult red = paired_sat_to_client_waiter(inst);
            Convention conv{GameKind::ClientWaiter, Player::Two, LoneVertexRule::ToClient};
            GameOutcome g = solve_positional(red.graph, conv, budgets.game);
            if (!oracle.exact || !g.exact) {
                st = CheckStatus::Unknown;
                obs = "unknown";
            } else {
                // Client's targets encode falsified clauses: Waiter realizes
                // Satisfier's win, Client realizes Falsifier's.
                bool satisfier = *oracle.winner == QbfWinner::Satisfier;
                bool waiter = *g.winner == GameWinner::WaiterWin;
                st = satisfier == waiter ? CheckStatus::Pass : CheckStatus::Fail;
                obs = to_string(*g.winner);
            }
        }
        rep.add(record("cw-outcome-n1", fingerprint(inst), st, winner_name(oracle), obs, 0,
                       ms_since(t0)));
    }

    // n = 2 boards are 16 vertices; agreement is required only where the
    // budget suffices.
    int n2 = scope == FamilyScope::Full ? 60 : 20;
    for (int i = 0; i < n2; ++i) {
        std::mt19937_64 rng(seed + 0xc32 + static_cast<std::uint64_t>(i));
        PairedSatInstance inst = gen_random_paired_sat(rng(), 2, 1 + pick(rng, 4), 3, 7);
        if (has_falsifier_only_clause(inst)) continue;
        auto t0 = std::chrono::steady_clock::now();
        QbfOutcome oracle = solve_paired_sat(inst, budgets.qbf_oracle);
        CwResult red = paired_sat_to_client_waiter(inst);
        Convention conv{GameKind::ClientWaiter, Player::Two, LoneVertexRule::ToClient};
        GameOutcome g = solve_positional(red.graph, conv, budgets.game);
        CheckStatus st = CheckStatus::Unknown;
        std::string obs = "unknown";
        if (oracle.exact && g.exact) {
            bool satisfier = *oracle.winner == QbfWinner::Satisfier;
            bool waiter = *g.winner == GameWinner::WaiterWin;
            st = satisfier == waiter ? CheckStatus::Pass : CheckStatus::Fail;
            obs = to_string(*g.winner);
        }
        rep.add(record("cw-outcome-n2", fingerprint(inst), st, winner_name(oracle), obs, g.nodes,
                       ms_since(t0)));
    }
}

// Plays for_player's strategy against an opponent who always claims the
// lowest-id legal move; returns the final position.
GamePosition run_strategy_vs_lowest(const Hypergraph& h, const Convention& conv,
                                    const StrategyTree& tree) {
    GamePosition pos = initial_position(h, conv);
    const StrategyNode* node = &tree.root;
    bool our_move_done = false;
    while (true) {
        if (!our_move_done && node->move) {
            pos = play_move(pos, conv, *node->move);
            our_move_done = true;
            continue;
        }
        if (terminal_winner(h, pos, conv) || node->replies.empty()) return pos;
        // Opponent: lowest-id legal move is the first one.
        Move reply = node->replies.front().first;
        pos = play_move(pos, conv, reply);
        node = &node->replies.front().second;
        our_move_done = false;
    }
}

void verify_mb(std::uint64_t seed, int count, const Budgets& budgets, FamilyScope scope,
               VerificationReport& rep) {
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + 0xb0 + static_cast<std::uint64_t>(i));
        int rank = 2 + pick(rng, 5);
        int nv = rank + pick(rng, 4);
        int ne = 1 + pick(rng, 3);
        Hypergraph h = gen_random_hypergraph(rng(), nv, ne, rank, true);
        auto t0 = std::chrono::steady_clock::now();
        MbResult red = mb_to_bounded_degree(h);

        // Independent counting: trees have 2^{r-1} * d leaves, a tree with L
        // leaves has max(1, 2L-1) nodes of 4 vertices, plus the connector.
        long expect_vertices = 0, expect_edges = 0;
        std::vector<int> deg = red.source_stripped.degrees();
        for (int v = 1; v <= red.source_stripped.num_vertices; ++v) {
            long leaves = 0;
            for (const auto& e : red.source_stripped.edges) {
                if (std::binary_search(e.begin(), e.end(), v)) leaves += 1l << (e.size() - 1);
            }
            long nodes = leaves <= 1 ? 1 : 2 * leaves - 1;
            expect_vertices += 1 + 2 * 4 * nodes;
            expect_edges += 2 * 2 * nodes;
        }
        long expect_big = 0;
        for (const auto& e : red.source_stripped.edges) expect_big += 1l << e.size();
        expect_edges += expect_big;

        bool ok = red.graph.rank() <= 12 && red.graph.max_degree() <= 5 &&
                  static_cast<long>(red.trace.big_edges.size()) == expect_big &&
                  red.graph.num_vertices == expect_vertices &&
                  static_cast<long>(red.graph.edges.size()) == expect_edges;
        rep.add(record("mb-bounds", fingerprint(h), ok ? CheckStatus::Pass : CheckStatus::Fail,
                       "rank<=12 degree<=5 counts",
                       "rank=" + std::to_string(red.graph.rank()) +
                           " degree=" + std::to_string(red.graph.max_degree()) +
                           " big=" + std::to_string(red.trace.big_edges.size()),
                       0, ms_since(t0)));
    }

    // Strategy-level checks on exactly solvable sources.
    int strategies = scope == FamilyScope::Full ? 40 : 10;
    for (int i = 0; i < strategies; ++i) {
        std::mt19937_64 rng(seed + 0xb1 + static_cast<std::uint64_t>(i));
        int nv = 2 + pick(rng, 7);
        Hypergraph h = gen_random_hypergraph(rng(), nv, 1 + pick(rng, 3),
                                             std::min(nv, 2 + pick(rng, 5)), false);
        MbResult red = mb_to_bounded_degree(h);
        if (red.source_stripped.num_vertices == 0) continue;
        Convention conv{GameKind::MakerBreaker, Player::One, LoneVertexRule::ToClient};
        GameOutcome outcome = solve_positional(red.source_stripped, conv, budgets.game);
        if (!outcome.exact) continue;
        std::string fp = fingerprint(h);
        if (*outcome.winner == GameWinner::BreakerWin) {
            auto t0 = std::chrono::steady_clock::now();
            StrategyTree tree = extract_strategy(red.source_stripped, conv, Player::Two, budgets.game);
            GamePosition final = run_strategy_vs_lowest(red.source_stripped, conv, tree);
            std::set<int> choices;
            for (int v = 1; v <= red.source_stripped.num_vertices; ++v) {
                if (final.owner[static_cast<size_t>(v)] == 2)
                    choices.insert(red.trace.kept_vertices[static_cast<size_t>(v - 1)]);
            }
            PairingCheck pc = breaker_pairing(red.graph, red.trace, choices);
            rep.add(record("mb-pairing-coverage", fp,
                           pc.uncovered_edges.empty() ? CheckStatus::Pass : CheckStatus::Fail,
                           "0 uncovered", std::to_string(pc.uncovered_edges.size()) + " uncovered",
                           0, ms_since(t0)));
        } else {
            auto t0 = std::chrono::steady_clock::now();
            StrategyTree tree = extract_strategy(red.source_stripped, conv, Player::One, budgets.game);
            int wins = 0, total = budgets.playouts_per_instance;
            std::string defect;
            for (int p = 0; p < total; ++p) {
                BreakerPolicy policy = p % 2 == 0 ? BreakerPolicy::Random : BreakerPolicy::GreedyBlock;
                PlayoutRecord pr = maker_forcing_playout(red.source_stripped, red.graph, red.trace,
                                                         tree, policy,
                                                         seed + static_cast<std::uint64_t>(p));
                if (pr.maker_won) ++wins;
                else if (defect.empty()) defect = pr.defect;
            }
            rep.add(record("mb-forcing-playouts", fp,
                           wins == total ? CheckStatus::Pass : CheckStatus::Fail,
                           std::to_string(total) + " wins",
                           std::to_string(wins) + " wins" +
                               (defect.empty() ? "" : " (" + defect + ")"),
                           0, ms_since(t0)));
        }
    }
}

void verify_mm(std::uint64_t seed, int count, const Budgets& budgets, FamilyScope scope,
               VerificationReport& rep) {
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + 0x33 + static_cast<std::uint64_t>(i));
        int nv = 2 + pick(rng, 8);
        Hypergraph h = gen_random_hypergraph(rng(), nv, pick(rng, 4), std::min(nv, 6), false);
        auto t0 = std::chrono::steady_clock::now();
        MmResult red = mb_to_maker_maker(h);
        bool ok = red.graph.rank() == (h.edges.empty() ? 0 : h.rank() + 1) &&
                  red.graph.max_degree() == std::max(h.max_degree(), h.edges.empty() ? 0 : 2) &&
                  red.graph.num_vertices == h.num_vertices + 2 * static_cast<int>(h.edges.size()) &&
                  red.graph.edges.size() == 2 * h.edges.size();
        rep.add(record("mm-bounds", fingerprint(h), ok ? CheckStatus::Pass : CheckStatus::Fail,
                       "rank+1, degree max(d,2), |V|+2m, 2m", "", 0, ms_since(t0)));
    }

    std::vector<Hypergraph> family = enumerate_small_hypergraphs(6, 3);
    auto sample = sample_family(family, scope, seed, 250);
    int second_wins = 0;
    for (const Hypergraph& h : sample) {
        auto t0 = std::chrono::steady_clock::now();
        Convention mb{GameKind::MakerBreaker, Player::One, LoneVertexRule::ToClient};
        Convention mm{GameKind::MakerMaker, Player::One, LoneVertexRule::ToClient};
        GameOutcome src = solve_positional(h, mb, budgets.game);
        MmResult red = mb_to_maker_maker(h);
        GameOutcome out = solve_positional(red.graph, mm, budgets.game);
        CheckStatus st = CheckStatus::Unknown;
        std::string obs = "unknown";
        if (src.exact && out.exact) {
            if (*out.winner == GameWinner::SecondWin) ++second_wins;
            bool match = (*src.winner == GameWinner::MakerWin && *out.winner == GameWinner::FirstWin) ||
                         (*src.winner == GameWinner::BreakerWin && *out.winner == GameWinner::Draw);
            st = match ? CheckStatus::Pass : CheckStatus::Fail;
            obs = to_string(*out.winner);
        }
        rep.add(record("mm-outcome", fingerprint(h), st, to_string(*src.winner), obs,
                       src.nodes + out.nodes, ms_since(t0)));
    }
    rep.add(record("mm-no-second-win", "family", second_wins == 0 ? CheckStatus::Pass : CheckStatus::Fail,
                   "0", std::to_string(second_wins), 0, 0.0));
}

} // namespace

VerificationReport run_verification(ReductionKind kind, std::uint64_t seed, int count,
                                    const Budgets& budgets, FamilyScope scope) {
    VerificationReport rep;
    switch (kind) {
    case ReductionKind::ThreeQbf3: verify_3qbf3(seed, count, budgets, rep); break;
    case ReductionKind::AvoiderEnforcer: verify_ae(seed, count, budgets, scope, rep); break;
    case ReductionKind::PairedSat: verify_psat(seed, count, budgets, scope, rep); break;
    case ReductionKind::ClientWaiter: verify_cw(seed, count, budgets, scope, rep); break;
    case ReductionKind::MbBounded: verify_mb(seed, count, budgets, scope, rep); break;
    case ReductionKind::MakerMaker: verify_mm(seed, count, budgets, scope, rep); break;
    }
    rep.sort_records();
    return rep;
}

VerificationReport run_engine_checks(std::uint64_t seed, int count, const Budgets& budgets) {
    VerificationReport rep;
    for (int i = 0; i < count; ++i) {
        std::mt19937_64 rng(seed + static_cast<std::uint64_t>(i));
        int nv = 3 + pick(rng, 6);
        Hypergraph h = gen_random_hypergraph(rng(), nv, 1 + pick(rng, 4), std::min(nv, 4), false);
        std::string fp = fingerprint(h);

        // Round trip.
        Hypergraph back = parse_hypergraph(emit_hypergraph(h));
        rep.add(record("format-roundtrip", fp, back == h ? CheckStatus::Pass : CheckStatus::Fail,
                       "identical", back == h ? "identical" : "differs", 0, 0.0));

        // Monotonicity: a fresh edge never hurts Maker or Client; a removed
        // edge never hurts Avoider.
        Hypergraph bigger = h;
        std::vector<int> extra;
        for (int v = 1; v <= nv; ++v) {
            if (rng() & 1) extra.push_back(v);
        }
        if (extra.empty()) extra.push_back(1 + pick(rng, nv));
        bigger.add_edge(extra);

        Convention mb{GameKind::MakerBreaker, Player::One, LoneVertexRule::ToClient};
        GameOutcome mb_small = solve_positional(h, mb, budgets.game);
        GameOutcome mb_big = solve_positional(bigger, mb, budgets.game);
        CheckStatus st = CheckStatus::Unknown;
        if (mb_small.exact && mb_big.exact) {
            bool bad = *mb_small.winner == GameWinner::MakerWin &&
                       *mb_big.winner == GameWinner::BreakerWin;
            st = bad ? CheckStatus::Fail : CheckStatus::Pass;
        }
        rep.add(record("mb-monotone", fp, st, "no MakerWin->BreakerWin flip", "", 0, 0.0));

        Convention cw{GameKind::ClientWaiter, Player::Two, LoneVertexRule::ToClient};
        GameOutcome cw_small = solve_positional(h, cw, budgets.game);
        GameOutcome cw_big = solve_positional(bigger, cw, budgets.game);
        st = CheckStatus::Unknown;
        if (cw_small.exact && cw_big.exact) {
            bool bad = *cw_small.winner == GameWinner::ClientWin &&
                       *cw_big.winner == GameWinner::WaiterWin;
            st = bad ? CheckStatus::Fail : CheckStatus::Pass;
        }
        rep.add(record("cw-monotone", fp, st, "no ClientWin->WaiterWin flip", "", 0, 0.0));

        if (!h.edges.empty()) {
            Hypergraph smaller = h;
            smaller.edges.erase(smaller.edges.begin() +
                                static_cast<long>(pick(rng, static_cast<int>(smaller.edges.size()))));
            Convention ae{GameKind::AvoiderEnforcer, Player::One, LoneVertexRule::ToClient};
            GameOutcome ae_full = solve_positional(h, ae, budgets.game);
            GameOutcome ae_less = solve_positional(smaller, ae, budgets.game);
            st = CheckStatus::Unknown;
            if (ae_full.exact && ae_less.exact) {
                bool bad = *ae_full.winner == GameWinner::AvoiderWin &&
                           *ae_less.winner == GameWinner::EnforcerWin;
                st = bad ? CheckStatus::Fail : CheckStatus::Pass;
            }
            rep.add(record("ae-monotone", fp, st, "no AvoiderWin->EnforcerWin flip", "", 0, 0.0));
        }
    }
    rep.sort_records();
    return rep;
}

} // namespace qpg
