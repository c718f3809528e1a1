#ifndef QPG_ERRORS_HPP
#define QPG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qpg {

/// Malformed input text (QDIMACS, psat or hypergraph files).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called on an instance that violates its stated
/// preconditions. The message names the offending variable/clause/edge.
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A budgeted computation that must deliver a definite result ran out of
/// node budget (only thrown where "unknown" is not a representable answer,
/// e.g. strategy extraction).
struct BudgetExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace qpg

#endif
