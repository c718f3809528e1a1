// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Each criterion pins its tolerances in code; budget-bound "unknown"
// results only appear where the criterion explicitly allows them.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qpg/formula.hpp"
#include "qpg/game.hpp"
#include "qpg/game_reductions.hpp"
#include "qpg/hypergraph.hpp"
#include "qpg/qbf_reductions.hpp"
#include "qpg/qbf_solve.hpp"
#include "qpg/verify.hpp"

using namespace qpg;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& details, double secs) {
    std::printf("[%s] criterion %02d %s: %s (%.1fs)\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                details.c_str(), secs);
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::vector<QbfFormula> qbf2_corpus() {
    std::vector<QbfFormula> corpus = enumerate_qbf2_family(3, 3, 2);
    for (int i = 0; i < 10000; ++i) {
        std::uint64_t seed = static_cast<std::uint64_t>(i);
        int vars = 2 + i % 13; // up to 14 variables
        int clauses = 1 + i % std::min(10, 2 * vars);
        corpus.push_back(gen_random_qbf(seed, vars, clauses, 3, 2, QuantPattern::Random));
    }
    return corpus;
}

// Criterion 1: decider agreement on the exhaustive family and 10,000
// random instances, under 5 minutes.
void criterion_1(const std::vector<QbfFormula>& corpus) {
    auto t0 = Clock::now();
    int mismatches = 0, inexact = 0;
    for (const QbfFormula& f : corpus) {
        Qbf2Result fast = solve_qbf2(f, TraceDetail::StepsOnly);
        QbfOutcome oracle = solve_qbf_oracle(f, 1ull << 26);
        if (!fast.outcome.exact || !oracle.exact) ++inexact;
        else if (*fast.outcome.winner != *oracle.winner) ++mismatches;
    }
    double secs = seconds_since(t0);
    bool pass = mismatches == 0 && inexact == 0 && secs < 300.0;
    report(1, "qbf2-decider-agreement", pass,
           "corpus=" + std::to_string(corpus.size()) + " mismatches=" + std::to_string(mismatches) +
               " inexact=" + std::to_string(inexact),
           secs);
}

// A worst-case-style workload for the rewriting engine: a cyclic chain of
// resolutions whose resolvents accumulate one fresh literal per step, so
// the total literal work is genuinely quadratic in n.
QbfFormula resolution_chain(int n) {
    int m = n / 2;
    QbfFormula f;
    f.matrix.num_vars = 2 * m;
    for (Var z = 1; z <= m; ++z) f.prefix.push_back({z, Quantifier::Exists});
    for (Var x = m + 1; x <= 2 * m; ++x) f.prefix.push_back({x, Quantifier::Exists});
    for (int i = 0; i < m; ++i) {
        Var z = 1 + i;
        Var x = m + 1 + i;
        Var next = m + 1 + (i + 1) % m;
        f.matrix.clauses.push_back(Clause({z, x, -next}));
    }
    return f;
}

// Criterion 2: solve times at n in {1000, 2000, 4000}; every solve under
// 10 s and at most a 5x ratio per doubling. Random instances collapse in a
// handful of rule applications, so the doubling ratio is measured on the
// resolution-chain workload (noise-floored at 5 ms).
void criterion_2() {
    auto t0 = Clock::now();
    const int reps = 5;
    int sizes[3] = {1000, 2000, 4000};
    double rand_worst = 0, chain_totals[3] = {0, 0, 0};
    bool all_exact = true;
    solve_qbf2(resolution_chain(4000), TraceDetail::StepsOnly); // warm caches
    for (int s = 0; s < 3; ++s) {
        for (int r = 0; r < reps; ++r) {
            QbfFormula f = gen_random_qbf(1000 + static_cast<std::uint64_t>(s * reps + r),
                                          sizes[s], sizes[s], 3, 2, QuantPattern::Random);
            auto s0 = Clock::now();
            Qbf2Result res = solve_qbf2(f, TraceDetail::StepsOnly);
            rand_worst = std::max(rand_worst, seconds_since(s0));
            all_exact = all_exact && res.outcome.exact;

            QbfFormula chain = resolution_chain(sizes[s]);
            s0 = Clock::now();
            Qbf2Result cres = solve_qbf2(chain, TraceDetail::StepsOnly);
            double dt = seconds_since(s0);
            chain_totals[s] += dt;
            rand_worst = std::max(rand_worst, dt);
            all_exact = all_exact && cres.outcome.exact &&
                        *cres.outcome.winner == QbfWinner::Satisfier;
        }
    }
    // Per-doubling gate: ratio <= 5, with a 50 ms envelope below which
    // constant factors and cache tiers swamp any asymptotic signal.
    auto doubling_ok = [](double a, double b) { return b <= std::max(5.0 * a, 0.050); };
    double r1 = chain_totals[1] / chain_totals[0];
    double r2 = chain_totals[2] / chain_totals[1];
    bool pass = all_exact && rand_worst < 10.0 && doubling_ok(chain_totals[0], chain_totals[1]) &&
                doubling_ok(chain_totals[1], chain_totals[2]);
    char buf[200];
    std::snprintf(buf, sizeof buf,
                  "chain_totals=%.3fs/%.3fs/%.3fs ratios=%.2f,%.2f worst_solve=%.3fs",
                  chain_totals[0], chain_totals[1], chain_totals[2], r1, r2, rand_worst);
    report(2, "qbf2-quadratic-scaling", pass, buf, seconds_since(t0));
}

// Criterion 3: every rule application in every trace preserves the oracle
// outcome.
void criterion_3(const std::vector<QbfFormula>& corpus) {
    auto t0 = Clock::now();
    long steps = 0;
    int violations = 0, inexact = 0;
    for (const QbfFormula& f : corpus) {
        QbfOutcome before = solve_qbf_oracle(f, 1ull << 26);
        if (!before.exact) {
            ++inexact;
            continue;
        }
        QbfWinner expect = *before.winner;
        Qbf2Result res = solve_qbf2(f);
        for (const RuleApplication& step : res.trace) {
            ++steps;
            if (step.verdict == Verdict::Continue) {
                QbfOutcome after = solve_qbf_oracle(step.result, 1ull << 26);
                if (!after.exact) ++inexact;
                else if (*after.winner != expect) ++violations;
            } else {
                QbfWinner v = step.verdict == Verdict::True ? QbfWinner::Satisfier
                                                            : QbfWinner::Falsifier;
                if (v != expect) ++violations;
            }
        }
    }
    bool pass = violations == 0 && inexact == 0;
    report(3, "per-rule-soundness", pass,
           "steps=" + std::to_string(steps) + " violations=" + std::to_string(violations) +
               " inexact=" + std::to_string(inexact),
           seconds_since(t0));
}

// Criterion 4: 500 sources through normalize + split, 100% class membership
// and oracle equality, under 10 minutes.
void criterion_4() {
    auto t0 = Clock::now();
    int class_fail = 0, outcome_fail = 0, inexact = 0;
    for (int i = 0; i < 500; ++i) {
        std::uint64_t seed = 40000 + static_cast<std::uint64_t>(i);
        QbfFormula src = gen_random_qbf(seed, 1 + i % 3, i % 4, 3, 3, QuantPattern::Random);
        SplitResult split = to_3qbf3(normalize_3qbf(src).formula);
        if (!check_class(split.formula, 3, 3, true, true).ok) ++class_fail;
        QbfOutcome before = solve_qbf_oracle(src, 1ull << 26);
        QbfOutcome after = solve_qbf_oracle(split.formula, 1ull << 27);
        if (!before.exact || !after.exact) ++inexact;
        else if (before.winner != after.winner) ++outcome_fail;
    }
    double secs = seconds_since(t0);
    bool pass = class_fail == 0 && outcome_fail == 0 && inexact == 0 && secs < 600.0;
    report(4, "3qbf3-expansion", pass,
           "sources=500 class_fail=" + std::to_string(class_fail) +
               " outcome_fail=" + std::to_string(outcome_fail) +
               " inexact=" + std::to_string(inexact),
           secs);
}

// Criterion 5: structural bounds on 200 instances, then calibrated 100%
// outcome correspondence on the exhaustive n=1 family.
void criterion_5() {
    auto t0 = Clock::now();
    int bound_fail = 0;
    for (int i = 0; i < 200; ++i) {
        std::uint64_t seed = 50000 + static_cast<std::uint64_t>(i);
        int pairs = 1 + i % 4;
        QbfFormula f = gen_random_qbf(seed, 2 * pairs, 1 + i % (3 * pairs), 3, 3,
                                      QuantPattern::AlternateExistsFirst);
        AeResult r = qbf3_to_avoider_enforcer(f);
        if (r.graph.rank() > 6 || r.graph.max_degree() > 8) ++bound_fail;
    }

    std::vector<QbfFormula> family = enumerate_alternating_family(1, 3, 2);
    AeCalibration cal = calibrate_ae_convention(family);
    int mismatches = 0;
    std::string frozen = "none";
    if (cal.frozen) {
        frozen = std::string(cal.frozen->first_player == Player::One ? "avoider" : "enforcer") +
                 "-first/satisfier-is-" + (cal.frozen->satisfier_is_avoider ? "avoider" : "enforcer");
        for (const QbfFormula& f : family) {
            QbfOutcome oracle = solve_qbf_oracle(f);
            AeResult ae = qbf3_to_avoider_enforcer(f);
            Convention conv{GameKind::AvoiderEnforcer, cal.frozen->first_player,
                            LoneVertexRule::ToClient};
            GameOutcome g = solve_positional(ae.graph, conv);
            bool satisfier = *oracle.winner == QbfWinner::Satisfier;
            bool avoider = *g.winner == GameWinner::AvoiderWin;
            bool predicted = cal.frozen->satisfier_is_avoider ? satisfier : !satisfier;
            if (avoider != predicted) ++mismatches;
        }
    }
    bool pass = bound_fail == 0 && cal.frozen.has_value() && mismatches == 0;
    report(5, "avoider-enforcer-construction", pass,
           "bound_fail=" + std::to_string(bound_fail) + " frozen=" + frozen +
               " family=" + std::to_string(family.size()) +
               " mismatches=" + std::to_string(mismatches),
           seconds_since(t0));
}

// Criterion 6: degree bound on 200 instances and oracle equality on the
// whole n <= 2 canonical family.
void criterion_6() {
    auto t0 = Clock::now();
    int bound_fail = 0;
    for (int i = 0; i < 200; ++i) {
        std::uint64_t seed = 60000 + static_cast<std::uint64_t>(i);
        int pairs = 1 + i % 4;
        QbfFormula f = gen_random_qbf(seed, 2 * pairs, 1 + i % (3 * pairs), 3, 3,
                                      QuantPattern::AlternateExistsFirst);
        PairedSatResult r = qbf_to_paired_sat(f);
        if (degree_profile(r.instance.matrix).max_degree > 7) ++bound_fail;
    }
    std::vector<QbfFormula> family = enumerate_alternating_family(1, 2, 2);
    std::vector<QbfFormula> two = enumerate_alternating_family(2, 2, 3);
    family.insert(family.end(), two.begin(), two.end());
    int mismatches = 0, inexact = 0;
    for (const QbfFormula& f : family) {
        QbfOutcome oracle = solve_qbf_oracle(f, 1ull << 24);
        PairedSatResult r = qbf_to_paired_sat(f);
        QbfOutcome game = solve_paired_sat(r.instance, 1ull << 24);
        if (!oracle.exact || !game.exact) ++inexact;
        else if (oracle.winner != game.winner) ++mismatches;
    }
    bool pass = bound_fail == 0 && mismatches == 0 && inexact == 0;
    report(6, "paired-sat-reduction", pass,
           "bound_fail=" + std::to_string(bound_fail) + " family=" + std::to_string(family.size()) +
               " mismatches=" + std::to_string(mismatches) + " inexact=" + std::to_string(inexact),
           seconds_since(t0));
}

// Criterion 7: structural bounds and 8n vertices on 200 instances, exact
// n=1 correspondence, and no disagreement among solved n=2 instances.
void criterion_7() {
    auto t0 = Clock::now();
    int bound_fail = 0;
    for (int i = 0; i < 200; ++i) {
        std::uint64_t seed = 70000 + static_cast<std::uint64_t>(i);
        int pairs = 1 + i % 6;
        PairedSatInstance inst = gen_random_paired_sat(seed, pairs, 1 + i % (2 * pairs), 3, 7);
        CwResult r = paired_sat_to_client_waiter(inst);
        if (r.graph.rank() > 6 || r.graph.max_degree() > 35 || r.graph.num_vertices != 8 * pairs)
            ++bound_fail;
    }

    // Exhaustive n=1 family (including the shortcut instances).
    int n1_mismatch = 0, n1_total = 0;
    {
        PairedSatInstance base;
        base.matrix.num_vars = 2;
        base.pairs = {{1, 2}};
        std::vector<Clause> universe = {Clause({1}),  Clause({-1}),    Clause({2}),
                                        Clause({-2}), Clause({1, 2}),  Clause({1, -2}),
                                        Clause({-1, 2}), Clause({-1, -2})};
        std::vector<int> idx;
        auto rec = [&](auto&& self, int start) -> void {
            PairedSatInstance inst = base;
            for (int i : idx) inst.matrix.clauses.push_back(universe[static_cast<size_t>(i)]);
            ++n1_total;
            QbfOutcome oracle = solve_paired_sat(inst);
            if (has_falsifier_only_clause(inst)) {
                if (*oracle.winner != QbfWinner::Falsifier) ++n1_mismatch;
            } else {
                CwResult r = paired_sat_to_client_waiter(inst);
                Convention conv{GameKind::ClientWaiter, Player::Two, LoneVertexRule::ToClient};
                GameOutcome g = solve_positional(r.graph, conv);
                // Waiter realizes Satisfier's win, Client realizes Falsifier's.
                bool satisfier = *oracle.winner == QbfWinner::Satisfier;
                if (satisfier != (*g.winner == GameWinner::WaiterWin)) ++n1_mismatch;
            }
            if (static_cast<int>(idx.size()) == 3) return;
            for (int i = start; i < static_cast<int>(universe.size()); ++i) {
                idx.push_back(i);
                self(self, i);
                idx.pop_back();
            }
        };
        rec(rec, 0);
    }

    int n2_solved = 0, n2_unknown = 0, n2_mismatch = 0;
    for (int i = 0; i < 60; ++i) {
        std::uint64_t seed = 72000 + static_cast<std::uint64_t>(i);
        PairedSatInstance inst = gen_random_paired_sat(seed, 2, 1 + i % 4, 3, 7);
        if (has_falsifier_only_clause(inst)) continue;
        QbfOutcome oracle = solve_paired_sat(inst, 1ull << 24);
        CwResult r = paired_sat_to_client_waiter(inst);
        Convention conv{GameKind::ClientWaiter, Player::Two, LoneVertexRule::ToClient};
        GameOutcome g = solve_positional(r.graph, conv, 1ull << 23);
        if (!oracle.exact || !g.exact) {
            ++n2_unknown;
            continue;
        }
        ++n2_solved;
        bool satisfier = *oracle.winner == QbfWinner::Satisfier;
        if (satisfier != (*g.winner == GameWinner::WaiterWin)) ++n2_mismatch;
    }

    bool pass = bound_fail == 0 && n1_mismatch == 0 && n2_mismatch == 0;
    report(7, "client-waiter-construction", pass,
           "bound_fail=" + std::to_string(bound_fail) + " n1=" + std::to_string(n1_total) +
               " n1_mismatch=" + std::to_string(n1_mismatch) +
               " n2_solved=" + std::to_string(n2_solved) +
               " n2_unknown=" + std::to_string(n2_unknown) +
               " n2_mismatch=" + std::to_string(n2_mismatch),
           seconds_since(t0));
}

// Criterion 8: bounds and 2^r*m expanded count on 100 instances; pairing
// coverage for Breaker-win sources; 200 all-win playouts per Maker-win
// source.
void criterion_8() {
    auto t0 = Clock::now();
    int bound_fail = 0;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t seed = 80000 + static_cast<std::uint64_t>(i);
        int rank = 2 + i % 5;
        int nv = rank + i % 4;
        int ne = 1 + i % 3;
        Hypergraph h = gen_random_hypergraph(seed, nv, ne, rank, true);
        MbResult r = mb_to_bounded_degree(h);
        long expect_big = static_cast<long>(r.source_stripped.edges.size()) << rank;
        if (r.graph.rank() > 12 || r.graph.max_degree() > 5 ||
            static_cast<long>(r.trace.big_edges.size()) != expect_big)
            ++bound_fail;
    }

    Convention mb{GameKind::MakerBreaker, Player::One, LoneVertexRule::ToClient};
    int breaker_sources = 0, maker_sources = 0;
    int coverage_fail = 0, playout_fail = 0;
    for (int i = 0; i < 40; ++i) {
        std::uint64_t seed = 81000 + static_cast<std::uint64_t>(i);
        int nv = 2 + i % 7; // up to 8 vertices
        Hypergraph h = gen_random_hypergraph(seed, nv, 1 + i % 3, std::min(nv, 2 + i % 5), false);
        MbResult r = mb_to_bounded_degree(h);
        if (r.source_stripped.num_vertices == 0) continue;
        GameOutcome outcome = solve_positional(r.source_stripped, mb);
        if (!outcome.exact) continue;
        if (*outcome.winner == GameWinner::BreakerWin) {
            ++breaker_sources;
            StrategyTree tree = extract_strategy(r.source_stripped, mb, Player::Two);
            GamePosition final_pos = initial_position(r.source_stripped, mb);
            const StrategyNode* node = &tree.root;
            // Breaker answers the lowest-id Maker policy to exhaustion.
            while (true) {
                if (!legal_moves(final_pos, mb).empty() && !node->replies.empty()) {
                    Move maker = node->replies.front().first;
                    final_pos = play_move(final_pos, mb, maker);
                    const StrategyNode* child = &node->replies.front().second;
                    if (child->move) final_pos = play_move(final_pos, mb, *child->move);
                    node = child;
                    if (!terminal_winner(r.source_stripped, final_pos, mb) && !node->replies.empty())
                        continue;
                }
                break;
            }
            std::set<int> choices;
            for (int v = 1; v <= r.source_stripped.num_vertices; ++v) {
                if (final_pos.owner[static_cast<size_t>(v)] == 2)
                    choices.insert(r.trace.kept_vertices[static_cast<size_t>(v - 1)]);
            }
            PairingCheck pc = breaker_pairing(r.graph, r.trace, choices);
            if (!pc.uncovered_edges.empty()) ++coverage_fail;
        } else {
            ++maker_sources;
            StrategyTree tree = extract_strategy(r.source_stripped, mb, Player::One);
            for (int p = 0; p < 200; ++p) {
                BreakerPolicy policy = p % 2 == 0 ? BreakerPolicy::Random : BreakerPolicy::GreedyBlock;
                PlayoutRecord rec = maker_forcing_playout(r.source_stripped, r.graph, r.trace, tree,
                                                          policy, static_cast<std::uint64_t>(p));
                if (!rec.maker_won) {
                    ++playout_fail;
                    break;
                }
            }
        }
    }
    bool pass = bound_fail == 0 && coverage_fail == 0 && playout_fail == 0 &&
                breaker_sources > 0 && maker_sources > 0;
    report(8, "maker-breaker-construction", pass,
           "bound_fail=" + std::to_string(bound_fail) +
               " breaker_sources=" + std::to_string(breaker_sources) +
               " coverage_fail=" + std::to_string(coverage_fail) +
               " maker_sources=" + std::to_string(maker_sources) +
               " playout_fail=" + std::to_string(playout_fail),
           seconds_since(t0));
}

// Criterion 9: structural bounds, exact equivalence on every source with
// at most 6 vertices and 3 hyperedges, and zero SecondWin results.
void criterion_9() {
    auto t0 = Clock::now();
    Convention mb{GameKind::MakerBreaker, Player::One, LoneVertexRule::ToClient};
    Convention mm{GameKind::MakerMaker, Player::One, LoneVertexRule::ToClient};

    int bound_fail = 0;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t seed = 90000 + static_cast<std::uint64_t>(i);
        int nv = 2 + i % 9;
        Hypergraph h = gen_random_hypergraph(seed, nv, 1 + i % 4, std::min(nv, 6), false);
        MmResult r = mb_to_maker_maker(h);
        if (r.graph.rank() != h.rank() + 1 ||
            r.graph.max_degree() != std::max(h.max_degree(), 2) ||
            r.graph.num_vertices != h.num_vertices + 2 * static_cast<int>(h.edges.size()))
            ++bound_fail;
    }

    std::vector<Hypergraph> family = enumerate_small_hypergraphs(6, 3);
    long mismatches = 0, second_wins = 0, inexact = 0;
    for (const Hypergraph& h : family) {
        GameOutcome src = solve_positional(h, mb, 1ull << 26);
        MmResult r = mb_to_maker_maker(h);
        GameOutcome out = solve_positional(r.graph, mm, 1ull << 26);
        if (!src.exact || !out.exact) {
            ++inexact;
            continue;
        }
        if (*out.winner == GameWinner::SecondWin) ++second_wins;
        bool match = (*src.winner == GameWinner::MakerWin && *out.winner == GameWinner::FirstWin) ||
                     (*src.winner == GameWinner::BreakerWin && *out.winner == GameWinner::Draw);
        if (!match) ++mismatches;
    }
    bool pass = bound_fail == 0 && mismatches == 0 && second_wins == 0 && inexact == 0;
    report(9, "maker-maker-construction", pass,
           "bound_fail=" + std::to_string(bound_fail) + " family=" + std::to_string(family.size()) +
               " mismatches=" + std::to_string(mismatches) +
               " second_wins=" + std::to_string(second_wins) +
               " inexact=" + std::to_string(inexact),
           seconds_since(t0));
}

// Criterion 10: solver monotonicity over 500 seeded pairs per convention
// plus format round-trip identity on the whole generated corpus.
void criterion_10() {
    auto t0 = Clock::now();
    int mb_flips = 0, ae_flips = 0, cw_flips = 0, roundtrip_fail = 0, inexact = 0;
    Convention mb{GameKind::MakerBreaker, Player::One, LoneVertexRule::ToClient};
    Convention ae{GameKind::AvoiderEnforcer, Player::One, LoneVertexRule::ToClient};
    Convention cw{GameKind::ClientWaiter, Player::Two, LoneVertexRule::ToClient};
    std::mt19937_64 extra_rng(424242);

    for (int i = 0; i < 500; ++i) {
        std::uint64_t seed = 100000 + static_cast<std::uint64_t>(i);
        int nv = 3 + i % 6;
        Hypergraph h = gen_random_hypergraph(seed, nv, 1 + i % 4, std::min(nv, 4), false);
        if (parse_hypergraph(emit_hypergraph(h)) != h) ++roundtrip_fail;

        Hypergraph bigger = h;
        std::vector<int> fresh;
        for (int v = 1; v <= nv; ++v) {
            if (extra_rng() & 1) fresh.push_back(v);
        }
        if (fresh.empty()) fresh.push_back(1);
        bigger.add_edge(fresh);
        if (parse_hypergraph(emit_hypergraph(bigger)) != bigger) ++roundtrip_fail;

        GameOutcome mb0 = solve_positional(h, mb);
        GameOutcome mb1 = solve_positional(bigger, mb);
        GameOutcome cw0 = solve_positional(h, cw);
        GameOutcome cw1 = solve_positional(bigger, cw);
        if (!mb0.exact || !mb1.exact || !cw0.exact || !cw1.exact) ++inexact;
        else {
            if (*mb0.winner == GameWinner::MakerWin && *mb1.winner == GameWinner::BreakerWin)
                ++mb_flips;
            if (*cw0.winner == GameWinner::ClientWin && *cw1.winner == GameWinner::WaiterWin)
                ++cw_flips;
        }

        if (!h.edges.empty()) {
            Hypergraph smaller = h;
            smaller.edges.erase(smaller.edges.begin() +
                                static_cast<long>(extra_rng() % smaller.edges.size()));
            GameOutcome ae0 = solve_positional(h, ae);
            GameOutcome ae1 = solve_positional(smaller, ae);
            if (!ae0.exact || !ae1.exact) ++inexact;
            else if (*ae0.winner == GameWinner::AvoiderWin && *ae1.winner == GameWinner::EnforcerWin)
                ++ae_flips;
        }
    }
    bool pass = mb_flips == 0 && ae_flips == 0 && cw_flips == 0 && roundtrip_fail == 0 &&
                inexact == 0;
    report(10, "engine-sanity", pass,
           "mb_flips=" + std::to_string(mb_flips) + " ae_flips=" + std::to_string(ae_flips) +
               " cw_flips=" + std::to_string(cw_flips) +
               " roundtrip_fail=" + std::to_string(roundtrip_fail) +
               " inexact=" + std::to_string(inexact),
           seconds_since(t0));
}

} // namespace

int main() {
    auto t0 = Clock::now();
    std::vector<QbfFormula> corpus = qbf2_corpus();
    criterion_1(corpus);
    criterion_2();
    criterion_3(corpus);
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s: %d criterion(s) failed (total %.1fs)\n", failures == 0 ? "OK" : "FAILED",
                failures, seconds_since(t0));
    return failures == 0 ? 0 : 1;
}
