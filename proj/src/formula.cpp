#include "qpg/formula.hpp"

#include <algorithm>
#include <sstream>

namespace qpg {

namespace {

// Canonical literal order: ascending variable, positive before negative.
bool lit_less(Lit a, Lit b) {
    if (var_of(a) != var_of(b)) return var_of(a) < var_of(b);
    return positive(a) && !positive(b);
}

} // namespace

Clause::Clause(std::vector<Lit> ls) : lits(std::move(ls)) {
    for (Lit l : lits) {
        if (l == 0) throw PreconditionError("literal 0 is not a literal");
    }
    std::sort(lits.begin(), lits.end(), lit_less);
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

bool Clause::tautological() const {
    for (size_t i = 1; i < lits.size(); ++i) {
        if (var_of(lits[i]) == var_of(lits[i - 1])) return true;
    }
    return false;
}

bool Clause::contains(Lit l) const {
    return std::find(lits.begin(), lits.end(), l) != lits.end();
}

std::vector<Var> Clause::variables() const {
    std::vector<Var> vs;
    vs.reserve(lits.size());
    for (Lit l : lits) {
        if (vs.empty() || vs.back() != var_of(l)) vs.push_back(var_of(l));
    }
    return vs;
}

void CnfMatrix::validate() const {
    if (num_vars < 0) throw PreconditionError("negative variable count");
    for (size_t i = 0; i < clauses.size(); ++i) {
        for (Lit l : clauses[i].lits) {
            if (var_of(l) > num_vars) {
                throw PreconditionError("clause " + std::to_string(i + 1) +
                                        " references variable " + std::to_string(var_of(l)) +
                                        " > " + std::to_string(num_vars));
            }
        }
    }
}

void QbfFormula::validate() const {
    matrix.validate();
    std::vector<char> seen(static_cast<size_t>(matrix.num_vars) + 1, 0);
    if (prefix.size() != static_cast<size_t>(matrix.num_vars)) {
        throw PreconditionError("prefix covers " + std::to_string(prefix.size()) +
                                " variables, matrix declares " + std::to_string(matrix.num_vars));
    }
    for (const auto& e : prefix) {
        if (e.var < 1 || e.var > matrix.num_vars)
            throw PreconditionError("prefix variable " + std::to_string(e.var) + " out of range");
        if (seen[static_cast<size_t>(e.var)])
            throw PreconditionError("variable " + std::to_string(e.var) + " quantified twice");
        seen[static_cast<size_t>(e.var)] = 1;
    }
}

void PairedSatInstance::validate() const {
    matrix.validate();
    std::vector<char> seen(static_cast<size_t>(matrix.num_vars) + 1, 0);
    for (const auto& [a, b] : pairs) {
        for (Var v : {a, b}) {
            if (v < 1 || v > matrix.num_vars)
                throw PreconditionError("pair variable " + std::to_string(v) + " out of range");
            if (seen[static_cast<size_t>(v)])
                throw PreconditionError("variable " + std::to_string(v) + " occurs in two pair positions");
            seen[static_cast<size_t>(v)] = 1;
        }
    }
    for (Var v = 1; v <= matrix.num_vars; ++v) {
        if (!seen[static_cast<size_t>(v)])
            throw PreconditionError("variable " + std::to_string(v) + " is in no pair");
    }
}

DegreeProfile degree_profile(const CnfMatrix& matrix) {
    DegreeProfile p;
    p.degree.assign(static_cast<size_t>(matrix.num_vars) + 1, 0);
    p.num_clauses = static_cast<int>(matrix.clauses.size());
    for (const Clause& c : matrix.clauses) {
        p.rank = std::max(p.rank, c.size());
        for (Var v : c.variables()) ++p.degree[static_cast<size_t>(v)];
    }
    if (!matrix.clauses.empty()) {
        p.min_clause_size = matrix.clauses.front().size();
        for (const Clause& c : matrix.clauses)
            p.min_clause_size = std::min(p.min_clause_size, c.size());
    }
    for (Var v = 1; v <= matrix.num_vars; ++v)
        p.max_degree = std::max(p.max_degree, p.degree[static_cast<size_t>(v)]);
    return p;
}

bool DegreeProfile::is_uniform(int k) const {
    if (num_clauses == 0) return true;
    return rank == k && min_clause_size == k;
}

bool DegreeProfile::is_regular(int k) const {
    for (size_t v = 1; v < degree.size(); ++v) {
        if (degree[v] != k) return false;
    }
    return true;
}

ClassCheck check_class(const QbfFormula& f, int max_rank, int max_degree,
                       bool require_uniform, bool require_regular) {
    ClassCheck out;
    const auto& m = f.matrix;
    for (size_t i = 0; i < m.clauses.size(); ++i) {
        int sz = m.clauses[i].size();
        if (sz > max_rank) {
            out.violations.push_back("clause " + std::to_string(i + 1) + " has size " +
                                     std::to_string(sz) + " > " + std::to_string(max_rank));
        } else if (require_uniform && sz != max_rank) {
            out.violations.push_back("clause " + std::to_string(i + 1) + " has size " +
                                     std::to_string(sz) + " != " + std::to_string(max_rank));
        }
    }
    DegreeProfile p = degree_profile(m);
    for (Var v = 1; v <= m.num_vars; ++v) {
        int d = p.degree[static_cast<size_t>(v)];
        if (d > max_degree) {
            out.violations.push_back("variable " + std::to_string(v) + " has degree " +
                                     std::to_string(d) + " > " + std::to_string(max_degree));
        } else if (require_regular && d != max_degree) {
            out.violations.push_back("variable " + std::to_string(v) + " has degree " +
                                     std::to_string(d) + " != " + std::to_string(max_degree));
        }
    }
    out.ok = out.violations.empty();
    return out;
}

// --- parsing ------------------------------------------------------------

namespace {

struct LineTokens {
    int lineno;
    std::vector<std::string> toks;
};

std::vector<LineTokens> tokenize_lines(std::string_view text) {
    std::vector<LineTokens> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        LineTokens lt{lineno, {}};
        std::string tok;
        while (ls >> tok) lt.toks.push_back(tok);
        if (lt.toks.empty()) continue;
        out.push_back(std::move(lt));
    }
    return out;
}

int parse_int(const std::string& tok, int lineno) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok + "'");
    }
    if (pos != tok.size())
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok + "'");
    return value;
}

// Reads "<int>... 0" with nothing after the terminator.
std::vector<int> zero_terminated(const LineTokens& lt, size_t from) {
    std::vector<int> vals;
    bool terminated = false;
    for (size_t i = from; i < lt.toks.size(); ++i) {
        int v = parse_int(lt.toks[i], lt.lineno);
        if (v == 0) {
            if (i + 1 != lt.toks.size())
                throw ParseError("line " + std::to_string(lt.lineno) + ": tokens after terminating 0");
            terminated = true;
            break;
        }
        vals.push_back(v);
    }
    if (!terminated)
        throw ParseError("line " + std::to_string(lt.lineno) + ": missing terminating 0");
    return vals;
}

} // namespace

QbfFormula parse_qdimacs(std::string_view text) {
    bool have_header = false;
    int num_vars = 0;
    QuantifierPrefix prefix;
    std::vector<char> quantified;
    std::vector<Clause> clauses;
    bool in_clauses = false;

    for (const auto& lt : tokenize_lines(text)) {
        const std::string& head = lt.toks[0];
        if (head == "c") continue;
        if (head == "p") {
            if (have_header) throw ParseError("line " + std::to_string(lt.lineno) + ": duplicate header");
            if (lt.toks.size() != 4 || lt.toks[1] != "cnf")
                throw ParseError("line " + std::to_string(lt.lineno) + ": malformed header, want 'p cnf <n> <m>'");
            num_vars = parse_int(lt.toks[2], lt.lineno);
            int num_clauses = parse_int(lt.toks[3], lt.lineno);
            if (num_vars < 0 || num_clauses < 0)
                throw ParseError("line " + std::to_string(lt.lineno) + ": negative header counts");
            quantified.assign(static_cast<size_t>(num_vars) + 1, 0);
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError("line " + std::to_string(lt.lineno) + ": content before 'p cnf' header");
        if (head == "e" || head == "a") {
            if (in_clauses)
                throw ParseError("line " + std::to_string(lt.lineno) + ": quantifier line after clauses");
            Quantifier q = head == "e" ? Quantifier::Exists : Quantifier::Forall;
            for (int v : zero_terminated(lt, 1)) {
                if (v < 1 || v > num_vars)
                    throw ParseError("line " + std::to_string(lt.lineno) + ": quantified variable " +
                                     std::to_string(v) + " out of range");
                if (quantified[static_cast<size_t>(v)])
                    throw ParseError("line " + std::to_string(lt.lineno) + ": variable " +
                                     std::to_string(v) + " quantified twice");
                quantified[static_cast<size_t>(v)] = 1;
                prefix.push_back({v, q});
            }
            continue;
        }
        // clause line
        in_clauses = true;
        std::vector<Lit> lits = zero_terminated(lt, 0);
        for (Lit l : lits) {
            if (var_of(l) > num_vars)
                throw ParseError("line " + std::to_string(lt.lineno) + ": literal " + std::to_string(l) +
                                 " out of range (n=" + std::to_string(num_vars) + ")");
        }
        clauses.emplace_back(std::move(lits));
    }
    if (!have_header) throw ParseError("missing 'p cnf' header");

    // Free variables become outermost existentials, in id order.
    QuantifierPrefix full;
    for (Var v = 1; v <= num_vars; ++v) {
        if (!quantified[static_cast<size_t>(v)]) full.push_back({v, Quantifier::Exists});
    }
    full.insert(full.end(), prefix.begin(), prefix.end());

    QbfFormula f{std::move(full), CnfMatrix{num_vars, std::move(clauses)}};
    f.validate();
    return f;
}

std::string emit_qdimacs(const QbfFormula& f) {
    std::ostringstream out;
    out << "p cnf " << f.matrix.num_vars << ' ' << f.matrix.clauses.size() << '\n';
    size_t i = 0;
    while (i < f.prefix.size()) {
        Quantifier q = f.prefix[i].q;
        out << (q == Quantifier::Exists ? 'e' : 'a');
        while (i < f.prefix.size() && f.prefix[i].q == q) {
            out << ' ' << f.prefix[i].var;
            ++i;
        }
        out << " 0\n";
    }
    for (const Clause& c : f.matrix.clauses) {
        for (Lit l : c.lits) out << l << ' ';
        out << "0\n";
    }
    return out.str();
}

PairedSatInstance parse_psat(std::string_view text) {
    bool have_header = false;
    int num_vars = 0, num_pairs = 0;
    std::vector<std::pair<Var, Var>> pairs;
    std::vector<Clause> clauses;
    bool in_clauses = false;

    for (const auto& lt : tokenize_lines(text)) {
        const std::string& head = lt.toks[0];
        if (head == "c") continue;
        if (head == "p") {
            if (have_header) throw ParseError("line " + std::to_string(lt.lineno) + ": duplicate header");
            if (lt.toks.size() != 5 || lt.toks[1] != "psat")
                throw ParseError("line " + std::to_string(lt.lineno) + ": malformed header, want 'p psat <n> <m> <k>'");
            num_vars = parse_int(lt.toks[2], lt.lineno);
            num_pairs = parse_int(lt.toks[4], lt.lineno);
            if (num_vars < 0 || num_pairs < 0)
                throw ParseError("line " + std::to_string(lt.lineno) + ": negative header counts");
            have_header = true;
            continue;
        }
        if (!have_header)
            throw ParseError("line " + std::to_string(lt.lineno) + ": content before 'p psat' header");
        if (head == "d") {
            if (in_clauses)
                throw ParseError("line " + std::to_string(lt.lineno) + ": pair line after clauses");
            std::vector<int> vs = zero_terminated(lt, 1);
            if (vs.size() != 2)
                throw ParseError("line " + std::to_string(lt.lineno) + ": pair line needs exactly two variables");
            pairs.emplace_back(vs[0], vs[1]);
            continue;
        }
        in_clauses = true;
        std::vector<Lit> lits = zero_terminated(lt, 0);
        for (Lit l : lits) {
            if (var_of(l) > num_vars)
                throw ParseError("line " + std::to_string(lt.lineno) + ": literal " + std::to_string(l) +
                                 " out of range (n=" + std::to_string(num_vars) + ")");
        }
        clauses.emplace_back(std::move(lits));
    }
    if (!have_header) throw ParseError("missing 'p psat' header");
    if (static_cast<int>(pairs.size()) != num_pairs)
        throw ParseError("header declares " + std::to_string(num_pairs) + " pairs, found " +
                         std::to_string(pairs.size()));

    PairedSatInstance inst{CnfMatrix{num_vars, std::move(clauses)}, std::move(pairs)};
    try {
        inst.validate();
    } catch (const PreconditionError& e) {
        throw ParseError(e.what());
    }
    return inst;
}

std::string emit_psat(const PairedSatInstance& inst) {
    std::ostringstream out;
    out << "p psat " << inst.matrix.num_vars << ' ' << inst.matrix.clauses.size() << ' '
        << inst.pairs.size() << '\n';
    for (const auto& [a, b] : inst.pairs) out << "d " << a << ' ' << b << " 0\n";
    for (const Clause& c : inst.matrix.clauses) {
        for (Lit l : c.lits) out << l << ' ';
        out << "0\n";
    }
    return out.str();
}

} // namespace qpg
