// Command-line front end: solve / reduce / verify / gen / stats / play.
// Exit codes: 0 success, 1 logical failure, 2 usage or parse error,
// 3 budget exhausted without an answer.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qpg/formula.hpp"
#include "qpg/game.hpp"
#include "qpg/game_reductions.hpp"
#include "qpg/hypergraph.hpp"
#include "qpg/qbf_reductions.hpp"
#include "qpg/qbf_solve.hpp"
#include "qpg/verify.hpp"

using namespace qpg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitLogical = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
}

GameKind parse_kind(const std::string& name) {
    if (name == "maker-breaker" || name == "mb") return GameKind::MakerBreaker;
    if (name == "maker-maker" || name == "mm") return GameKind::MakerMaker;
    if (name == "avoider-enforcer" || name == "ae") return GameKind::AvoiderEnforcer;
    if (name == "client-waiter" || name == "cw") return GameKind::ClientWaiter;
    throw ParseError("unknown convention '" + name + "'");
}

Player parse_player(const std::string& name, GameKind kind) {
    if (name == "one" || name == "first" || name == "maker" || name == "avoider" ||
        name == "alice" || name == "client")
        return Player::One;
    if (name == "two" || name == "second" || name == "breaker" || name == "enforcer" ||
        name == "bob" || name == "waiter")
        return Player::Two;
    throw ParseError("unknown player '" + name + "' for " + to_string(kind));
}

struct SolveOptions {
    std::string qbf, psat, game_file, game_kind, first = "one";
    std::uint64_t budget = kDefaultNodeBudget;
    bool timings = false;
    std::string lone = "to-client";
};

int cmd_solve(const SolveOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    auto emit_timing = [&] {
        if (opt.timings) {
            double ms = std::chrono::duration<double, std::milli>(
                            std::chrono::steady_clock::now() - t0)
                            .count();
            std::cout << "elapsed_ms=" << ms << '\n';
        }
    };

    if (!opt.qbf.empty()) {
        QbfFormula f = parse_qdimacs(read_file(opt.qbf));
        QbfOutcome out;
        if (degree_profile(f.matrix).max_degree <= 2) {
            out = solve_qbf2(f, TraceDetail::StepsOnly).outcome;
        } else {
            out = solve_qbf_oracle(f, opt.budget);
        }
        if (!out.exact) {
            std::cout << "UNKNOWN\n" << "exact=0 nodes=" << out.nodes << '\n';
            emit_timing();
            return kExitBudget;
        }
        std::cout << (*out.winner == QbfWinner::Satisfier ? "TRUE" : "FALSE") << '\n'
                  << "exact=1 nodes=" << out.nodes << '\n';
        emit_timing();
        return kExitOk;
    }
    if (!opt.psat.empty()) {
        PairedSatInstance inst = parse_psat(read_file(opt.psat));
        QbfOutcome out = solve_paired_sat(inst, opt.budget);
        if (!out.exact) {
            std::cout << "UNKNOWN\n" << "exact=0 nodes=" << out.nodes << '\n';
            emit_timing();
            return kExitBudget;
        }
        std::cout << (*out.winner == QbfWinner::Satisfier ? "TRUE" : "FALSE") << '\n'
                  << "exact=1 nodes=" << out.nodes << '\n';
        emit_timing();
        return kExitOk;
    }
    Hypergraph h = parse_hypergraph(read_file(opt.game_file));
    Convention conv;
    conv.kind = parse_kind(opt.game_kind);
    conv.first = parse_player(opt.first, conv.kind);
    conv.lone_vertex = opt.lone == "to-waiter" ? LoneVertexRule::ToWaiter : LoneVertexRule::ToClient;
    GameOutcome out = solve_positional(h, conv, opt.budget);
    if (!out.exact) {
        std::cout << "winner=unknown exact=0 nodes=" << out.nodes << '\n';
        emit_timing();
        return kExitBudget;
    }
    std::cout << "winner=" << to_string(*out.winner) << " exact=1 nodes=" << out.nodes << '\n';
    emit_timing();
    return kExitOk;
}

struct ReduceOptions {
    std::string kind, in, out, trace;
};

int cmd_reduce(const ReduceOptions& opt) {
    nlohmann::json trace_json;
    std::string output;

    if (opt.kind == "3qbf3") {
        QbfFormula f = parse_qdimacs(read_file(opt.in));
        NormalizeResult norm = normalize_3qbf(f);
        SplitResult split = to_3qbf3(norm.formula);
        output = emit_qdimacs(split.formula);
        nlohmann::json jn, js;
        to_json(jn, norm.trace);
        to_json(js, split.map);
        trace_json = {{"normalize", jn}, {"split", js}};
    } else if (opt.kind == "ae") {
        QbfFormula f = parse_qdimacs(read_file(opt.in));
        QbfFormula padded = pad_alternation(f, AlternationPattern::ExistsFirst, true);
        AeResult res = qbf3_to_avoider_enforcer(padded);
        output = emit_hypergraph(res.graph);
        to_json(trace_json, res.trace);
    } else if (opt.kind == "psat") {
        QbfFormula f = parse_qdimacs(read_file(opt.in));
        QbfFormula padded = pad_alternation(f, AlternationPattern::ExistsFirst, true);
        PairedSatResult res = qbf_to_paired_sat(padded);
        output = emit_psat(res.instance);
        to_json(trace_json, res.map);
    } else if (opt.kind == "cw") {
        PairedSatInstance inst = parse_psat(read_file(opt.in));
        if (has_falsifier_only_clause(inst)) {
            std::cerr << "a clause holds only Falsifier variables: the instance is FALSE "
                         "outright; no hypergraph emitted\n";
            return kExitLogical;
        }
        CwResult res = paired_sat_to_client_waiter(inst);
        output = emit_hypergraph(res.graph);
        to_json(trace_json, res.trace);
    } else if (opt.kind == "mb_bounded") {
        Hypergraph h = parse_hypergraph(read_file(opt.in));
        MbResult res = mb_to_bounded_degree(h);
        output = emit_hypergraph(res.graph);
        to_json(trace_json, res.trace);
    } else if (opt.kind == "mm") {
        Hypergraph h = parse_hypergraph(read_file(opt.in));
        MmResult res = mb_to_maker_maker(h);
        output = emit_hypergraph(res.graph);
        to_json(trace_json, res.trace);
    } else {
        std::cerr << "unknown reduction kind '" << opt.kind << "'\n";
        return kExitUsage;
    }

    write_file(opt.out, output);
    if (!opt.trace.empty()) write_file(opt.trace, trace_json.dump(2) + "\n");
    return kExitOk;
}

struct VerifyOptions {
    std::string kind;
    std::uint64_t seed = 1;
    int count = 20;
    std::uint64_t budget = 0;
    int playouts = 200;
    bool full = false;
    bool timings = false;
    std::string out;
};

int cmd_verify(const VerifyOptions& opt) {
    Budgets budgets;
    if (opt.budget != 0) {
        budgets.qbf_oracle = opt.budget;
        budgets.game = opt.budget;
    }
    budgets.playouts_per_instance = opt.playouts;
    FamilyScope scope = opt.full ? FamilyScope::Full : FamilyScope::Sampled;

    VerificationReport rep;
    if (opt.kind == "engine") {
        rep = run_engine_checks(opt.seed, opt.count, budgets);
    } else {
        ReductionKind kind;
        if (opt.kind == "3qbf3") kind = ReductionKind::ThreeQbf3;
        else if (opt.kind == "ae") kind = ReductionKind::AvoiderEnforcer;
        else if (opt.kind == "psat") kind = ReductionKind::PairedSat;
        else if (opt.kind == "cw") kind = ReductionKind::ClientWaiter;
        else if (opt.kind == "mb_bounded") kind = ReductionKind::MbBounded;
        else if (opt.kind == "mm") kind = ReductionKind::MakerMaker;
        else {
            std::cerr << "unknown verify kind '" << opt.kind << "'\n";
            return kExitUsage;
        }
        rep = run_verification(kind, opt.seed, opt.count, budgets, scope);
    }
    std::string text = report_to_json(rep, opt.timings).dump(2) + "\n";
    std::cout << text;
    if (!opt.out.empty()) write_file(opt.out, text);
    return rep.ok() ? kExitOk : kExitLogical;
}

struct GenOptions {
    std::string what;
    std::uint64_t seed = 1;
    int vars = 8, clauses = 8, rank = 3, degree = 3;
    std::string pattern = "random";
    int vertices = 8, edges = 4;
    bool uniform = false;
    std::string out;
};

int cmd_gen(const GenOptions& opt) {
    std::string text;
    if (opt.what == "qbf") {
        QuantPattern p = QuantPattern::Random;
        if (opt.pattern == "alternate" || opt.pattern == "ea") p = QuantPattern::AlternateExistsFirst;
        else if (opt.pattern == "alternate-forall" || opt.pattern == "af")
            p = QuantPattern::AlternateForallFirst;
        else if (opt.pattern == "exists") p = QuantPattern::AllExists;
        else if (opt.pattern == "forall") p = QuantPattern::AllForall;
        else if (opt.pattern != "random") {
            std::cerr << "unknown pattern '" << opt.pattern << "'\n";
            return kExitUsage;
        }
        text = emit_qdimacs(gen_random_qbf(opt.seed, opt.vars, opt.clauses, opt.rank, opt.degree, p));
    } else if (opt.what == "hypergraph") {
        text = emit_hypergraph(
            gen_random_hypergraph(opt.seed, opt.vertices, opt.edges, opt.rank, opt.uniform));
    } else {
        std::cerr << "gen expects 'qbf' or 'hypergraph'\n";
        return kExitUsage;
    }
    if (opt.out.empty()) std::cout << text;
    else write_file(opt.out, text);
    return kExitOk;
}

int cmd_stats(const std::string& path) {
    std::string text = read_file(path);
    std::istringstream in(text);
    std::string line, format;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string head;
        if (ls >> head && head == "p") {
            ls >> format;
            break;
        }
    }
    if (format == "cnf" || format == "psat") {
        CnfMatrix matrix;
        std::string extras;
        if (format == "cnf") {
            QbfFormula f = parse_qdimacs(text);
            matrix = f.matrix;
            int exists = 0;
            for (const auto& e : f.prefix)
                if (e.q == Quantifier::Exists) ++exists;
            extras = " exists=" + std::to_string(exists) +
                     " forall=" + std::to_string(f.prefix.size() - exists);
        } else {
            PairedSatInstance inst = parse_psat(text);
            matrix = inst.matrix;
            extras = " pairs=" + std::to_string(inst.pairs.size());
        }
        DegreeProfile p = degree_profile(matrix);
        bool regular = true;
        for (Var v = 1; v <= matrix.num_vars; ++v)
            if (p.degree[static_cast<size_t>(v)] != p.max_degree) regular = false;
        std::cout << "format=" << (format == "cnf" ? "qdimacs" : "psat")
                  << " vars=" << matrix.num_vars << " clauses=" << matrix.clauses.size()
                  << " rank=" << p.rank << " max_degree=" << p.max_degree
                  << " uniform=" << (p.is_uniform(p.rank) ? std::to_string(p.rank) : "-")
                  << " regular=" << (regular && matrix.num_vars > 0 ? std::to_string(p.max_degree) : "-")
                  << extras << '\n';
        return kExitOk;
    }
    if (format == "pos") {
        Hypergraph h = parse_hypergraph(text);
        size_t min_size = h.edges.empty() ? 0 : h.edges.front().size();
        for (const auto& e : h.edges) min_size = std::min(min_size, e.size());
        std::cout << "format=pos vertices=" << h.num_vertices << " edges=" << h.edges.size()
                  << " rank=" << h.rank() << " max_degree=" << h.max_degree()
                  << " uniform=" << (!h.edges.empty() && min_size == static_cast<size_t>(h.rank())
                                         ? std::to_string(h.rank())
                                         : "-")
                  << '\n';
        return kExitOk;
    }
    std::cerr << "unrecognized format header in " << path << '\n';
    return kExitUsage;
}

struct PlayOptions {
    std::string game_kind, file, first = "one", as = "one", lone = "to-client";
    std::uint64_t budget = kDefaultNodeBudget;
};

void print_board(const Hypergraph& h, const GamePosition& pos) {
    std::cout << "claims one:";
    for (int v = 1; v <= h.num_vertices; ++v)
        if (pos.owner[static_cast<size_t>(v)] == 1) std::cout << ' ' << v;
    std::cout << "\nclaims two:";
    for (int v = 1; v <= h.num_vertices; ++v)
        if (pos.owner[static_cast<size_t>(v)] == 2) std::cout << ' ' << v;
    std::cout << '\n';
    if (pos.pending_offer)
        std::cout << "offer: " << pos.pending_offer->first << ' ' << pos.pending_offer->second
                  << '\n';
}

int cmd_play(const PlayOptions& opt) {
    Hypergraph h = parse_hypergraph(read_file(opt.file));
    Convention conv;
    conv.kind = parse_kind(opt.game_kind);
    conv.first = parse_player(opt.first, conv.kind);
    conv.lone_vertex = opt.lone == "to-waiter" ? LoneVertexRule::ToWaiter : LoneVertexRule::ToClient;
    Player human = parse_player(opt.as, conv.kind);

    GamePosition pos = initial_position(h, conv);
    while (true) {
        if (auto w = terminal_winner(h, pos, conv)) {
            std::cout << "result: " << to_string(*w) << '\n';
            return kExitOk;
        }
        Player mover = conv.kind == GameKind::ClientWaiter
                           ? (pos.pending_offer ? Player::One : Player::Two)
                           : pos.to_move;
        std::vector<Move> moves = legal_moves(pos, conv);
        if (moves.empty()) {
            std::cout << "no legal moves\n";
            return kExitOk;
        }
        if (mover == human) {
            print_board(h, pos);
            std::cout << "your move (vertex id" << (conv.kind == GameKind::ClientWaiter ? ", or two ids to offer" : "")
                      << "): " << std::flush;
            std::string line;
            if (!std::getline(std::cin, line)) {
                std::cout << "\nbye\n";
                return kExitOk;
            }
            std::istringstream ls(line);
            Move m{};
            if (!(ls >> m.v)) {
                std::cout << "could not read a vertex id\n";
                continue;
            }
            ls >> m.w;
            try {
                pos = play_move(pos, conv, m);
            } catch (const PreconditionError& e) {
                std::cout << "illegal: " << e.what() << '\n';
                continue;
            }
        } else {
            // Engine: pick the first move with the best solved value.
            Move best = moves.front();
            bool have = false;
            GameOutcome best_out;
            for (Move m : moves) {
                GameOutcome out = solve_position(h, conv, play_move(pos, conv, m), opt.budget);
                if (!out.exact) continue;
                auto rank = [&](GameWinner w) {
                    // Rank outcomes from the engine's perspective.
                    bool engine_is_one = mover == Player::One;
                    switch (w) {
                    case GameWinner::MakerWin:
                    case GameWinner::FirstWin:
                    case GameWinner::AvoiderWin:
                    case GameWinner::ClientWin: return engine_is_one ? 2 : 0;
                    case GameWinner::Draw: return 1;
                    default: return engine_is_one ? 0 : 2;
                    }
                };
                if (!have || rank(*out.winner) > rank(*best_out.winner)) {
                    best = m;
                    best_out = out;
                    have = true;
                }
            }
            if (!have) std::cout << "(engine move under budget; playing first legal)\n";
            std::cout << "engine plays " << best.v;
            if (best.w != 0) std::cout << ' ' << best.w;
            std::cout << '\n';
            pos = play_move(pos, conv, best);
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-degree QBF and positional-game toolkit"};
    app.require_subcommand(1);

    SolveOptions so;
    auto* solve = app.add_subcommand("solve", "decide a formula or a positional game");
    solve->add_option("--qbf", so.qbf, "QDIMACS file");
    solve->add_option("--psat", so.psat, "paired-SAT file");
    solve->add_option("--game", so.game_kind, "convention (mb, mm, ae, cw)");
    solve->add_option("file", so.game_file, "board file for --game");
    solve->add_option("--first", so.first, "who claims first (role name)");
    solve->add_option("--budget", so.budget, "node budget");
    solve->add_option("--lone-vertex", so.lone, "client-waiter lone vertex rule");
    solve->add_flag("--timings", so.timings, "print wall-clock time");

    ReduceOptions ro;
    auto* reduce = app.add_subcommand("reduce", "apply an instance transformation");
    reduce->add_option("--kind", ro.kind, "3qbf3, ae, psat, cw, mb_bounded, mm")->required();
    reduce->add_option("--in", ro.in, "input file")->required();
    reduce->add_option("--out", ro.out, "output file")->required();
    reduce->add_option("--trace", ro.trace, "write the provenance trace (JSON)");

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "run reduction/engine verification");
    verify->add_option("--kind", vo.kind, "3qbf3, ae, psat, cw, mb_bounded, mm, engine")->required();
    verify->add_option("--seed", vo.seed, "random seed");
    verify->add_option("--count", vo.count, "instance count");
    verify->add_option("--budget", vo.budget, "node budget override");
    verify->add_option("--playouts", vo.playouts, "forcing playouts per Maker-win instance");
    verify->add_flag("--full", vo.full, "run the full canonical families");
    verify->add_flag("--timings", vo.timings, "include elapsed times in the report");
    verify->add_option("--out", vo.out, "also write the JSON report here");

    GenOptions go;
    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("what", go.what, "qbf or hypergraph")->required();
    gen->add_option("--seed", go.seed, "random seed");
    gen->add_option("--vars", go.vars, "variable count (qbf)");
    gen->add_option("--clauses", go.clauses, "clause count (qbf)");
    gen->add_option("--rank", go.rank, "max clause/edge size");
    gen->add_option("--degree", go.degree, "max degree (qbf)");
    gen->add_option("--pattern", go.pattern, "random, alternate, alternate-forall, exists, forall");
    gen->add_option("--vertices", go.vertices, "vertex count (hypergraph)");
    gen->add_option("--edges", go.edges, "edge count (hypergraph)");
    gen->add_flag("--uniform", go.uniform, "make every edge exactly rank-sized");
    gen->add_option("--out", go.out, "output file (stdout if omitted)");

    std::string stats_file;
    auto* stats = app.add_subcommand("stats", "print structural metrics of a file");
    stats->add_option("file", stats_file, "input file")->required();

    PlayOptions po;
    auto* play = app.add_subcommand("play", "play a convention against the exact solver");
    play->add_option("--game", po.game_kind, "convention (mb, mm, ae, cw)")->required();
    play->add_option("file", po.file, "board file")->required();
    play->add_option("--first", po.first, "who claims first");
    play->add_option("--as", po.as, "which side you play");
    play->add_option("--lone-vertex", po.lone, "client-waiter lone vertex rule");
    play->add_option("--budget", po.budget, "node budget per engine move");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (solve->parsed()) {
            int selected = (!so.qbf.empty()) + (!so.psat.empty()) + (!so.game_kind.empty());
            if (selected != 1) {
                std::cerr << "solve needs exactly one of --qbf, --psat, --game\n";
                return kExitUsage;
            }
            if (!so.game_kind.empty() && so.game_file.empty()) {
                std::cerr << "solve --game needs a board file\n";
                return kExitUsage;
            }
            return cmd_solve(so);
        }
        if (reduce->parsed()) return cmd_reduce(ro);
        if (verify->parsed()) return cmd_verify(vo);
        if (gen->parsed()) return cmd_gen(go);
        if (stats->parsed()) return cmd_stats(stats_file);
        if (play->parsed()) return cmd_play(po);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBudget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitLogical;
    }
    return kExitUsage;
}
