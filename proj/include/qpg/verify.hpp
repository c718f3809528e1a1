#ifndef QPG_VERIFY_HPP
#define QPG_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpg/formula.hpp"
#include "qpg/game.hpp"
#include "qpg/game_reductions.hpp"
#include "qpg/hypergraph.hpp"

#include "json.hpp"

namespace qpg {

// Seeded generators, canonical small families, convention calibration and
// reduction verification. Everything here is deterministic per seed.

enum class QuantPattern { Random, AlternateExistsFirst, AlternateForallFirst, AllExists, AllForall };

/// Random formula within the requested structural bounds: clause sizes in
/// 1..rank, distinct variables per clause, every degree <= max_degree.
/// Throws PreconditionError when the parameters are infeasible.
QbfFormula gen_random_qbf(std::uint64_t seed, int num_vars, int num_clauses,
                          int rank, int max_degree, QuantPattern pattern);

Hypergraph gen_random_hypergraph(std::uint64_t seed, int num_vertices, int num_edges,
                                 int rank, bool uniform);

/// Random Paired SAT instance with clause sizes in 1..max_clause_size and
/// every clause anchored on at least one Satisfier variable.
PairedSatInstance gen_random_paired_sat(std::uint64_t seed, int num_pairs,
                                        int num_clauses, int max_clause_size,
                                        int max_degree);

// Canonical exhaustive families (sorted-encoding enumeration, stable
// order). These back the repo's versioned small-instance fixtures; tests
// pin their sizes and fingerprints.
std::vector<QbfFormula> enumerate_qbf2_family(int max_vars, int max_clauses,
                                              int max_clause_size);
/// Alternating exists-first formulas on 2n variables over all clause
/// multisets of size <= max_clauses (clauses never repeat a variable).
std::vector<QbfFormula> enumerate_alternating_family(int n_pairs, int max_clauses,
                                                     int max_clause_size);
std::vector<Hypergraph> enumerate_small_hypergraphs(int max_vertices, int max_edges);

std::string fingerprint(const std::string& canonical_text);
std::string fingerprint(const QbfFormula& f);
std::string fingerprint(const PairedSatInstance& inst);
std::string fingerprint(const Hypergraph& h);

// --- Avoider-Enforcer convention calibration ---------------------------

struct AeConfig {
    Player first_player = Player::One;  // Player::One is Avoider
    bool satisfier_is_avoider = true;
};

struct AeCalibration {
    std::vector<AeConfig> consistent; // all settings matching the sample
    std::optional<AeConfig> frozen;   // present iff exactly one survived
    int sample_size = 0;
};

/// Sweeps every (first player x player mapping) setting of the strict
/// Avoider-Enforcer solver against QBF oracle outcomes on the sample and
/// freezes the unique consistent one. Zero or several survivors are
/// reported, never silently resolved.
AeCalibration calibrate_ae_convention(const std::vector<QbfFormula>& sample,
                                      std::uint64_t game_budget = 1ull << 24);

// --- verification reports ----------------------------------------------

enum class CheckStatus { Pass, Fail, Unknown };

struct CheckRecord {
    std::string check;
    std::string instance; // fingerprint
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string observed;
    std::uint64_t nodes = 0;
    double elapsed_ms = 0.0;
};

struct VerificationReport {
    std::vector<CheckRecord> checks;
    std::optional<AeConfig> frozen_ae;
    LoneVertexRule cw_lone_vertex = LoneVertexRule::ToClient;
    int passed = 0;
    int failed = 0;
    int unknown = 0;

    void add(CheckRecord rec);
    void sort_records();
    bool ok() const { return failed == 0; }
};

nlohmann::json report_to_json(const VerificationReport& report, bool with_timings);

struct Budgets {
    std::uint64_t qbf_oracle = 1ull << 24;
    std::uint64_t game = 1ull << 22;
    int playouts_per_instance = 200;
};

enum class ReductionKind { ThreeQbf3, AvoiderEnforcer, PairedSat, ClientWaiter, MbBounded, MakerMaker };

/// How much of the canonical exhaustive families to run: Full for the
/// acceptance suite, Sampled (seeded subsets) for quick CLI runs.
enum class FamilyScope { Full, Sampled };

/// Structural-bound checks always run; oracle-equivalence runs where both
/// sides solve exactly within budget (budget-bound results are recorded as
/// unknown, which is not a failure); the Maker-Breaker kind additionally
/// runs pairing-coverage and forcing-playout checks. Avoider-Enforcer
/// equivalence refuses to run without a frozen calibration, which this
/// runner performs first and records in the report.
VerificationReport run_verification(ReductionKind kind, std::uint64_t seed, int count,
                                    const Budgets& budgets,
                                    FamilyScope scope = FamilyScope::Sampled);

/// Engine sanity: solver monotonicity properties and format round-trips
/// over seeded random boards.
VerificationReport run_engine_checks(std::uint64_t seed, int count, const Budgets& budgets);

} // namespace qpg

#endif
