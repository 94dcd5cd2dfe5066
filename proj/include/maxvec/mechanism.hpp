/**
 * @file mechanism.hpp
 * @brief Winner determination and vector payments for strategic maxima.
 *
 * Two mechanisms share the same skeleton: remove duplicated bids entirely,
 * determine winners, and charge each winner a reference point of an
 * opponent set that her bid weakly dominates.
 *
 *  - StrictMaxima: winners are the maxima of the remaining bids; agent i's
 *    candidate payments come from the reference points of all other bids.
 *  - WeakMaxima: every remaining agent whose bid weakly dominates a
 *    reference point of MAX(B) minus her own bid wins; the winning bids
 *    are exactly the weakly nondominated bids.
 *
 * Dimension 1 degenerates to a second-price auction: the only reference
 * point of the opponents' bids is their maximum.
 */

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "maxvec/vec.hpp"

namespace maxvec {

enum class MechanismKind {
    StrictMaxima,  ///< CLI name "m"
    WeakMaxima,    ///< CLI name "m-prime"
};

/**
 * @brief How one payment is picked from the candidate set.
 *
 * Candidates are kept in lexicographic order; LexMin and LexMax take the
 * two extremes, Indexed takes position (index mod candidate count).
 */
struct PaymentPolicy {
    enum class Kind { LexMin, LexMax, Indexed };

    Kind kind = Kind::LexMin;
    std::size_t index = 0;

    static PaymentPolicy lex_min() { return {}; }
    static PaymentPolicy lex_max() { return {Kind::LexMax, 0}; }
    static PaymentPolicy indexed(std::size_t i) { return {Kind::Indexed, i}; }
};

/**
 * @brief One market: a dimension, one bid per agent, and optionally the
 *        agents' true valuations.
 *
 * Agents are identified by their position (0-based). Mechanism runs
 * require every bid to be strictly positive in every coordinate.
 */
struct Instance {
    std::size_t k = 0;
    VectorSet bids;
    std::optional<VectorSet> valuations;
};

/// Per-agent result of a mechanism run.
struct AgentOutcome {
    bool removed_as_duplicate = false;
    bool winner = false;
    VectorSet pay_candidates;  ///< lexicographically sorted; empty for losers of StrictMaxima
    Vec payment;               ///< zero vector unless winner
    Vec utility;               ///< valuation minus payment for winners, else zero
};

struct MechanismOutcome {
    MechanismKind kind = MechanismKind::StrictMaxima;
    std::size_t k = 0;
    std::vector<AgentOutcome> agents;
};

/// Result of duplicate removal: agent indices that stay and agent indices
/// removed because they shared a bid vector with someone else.
struct DedupResult {
    std::vector<std::size_t> kept;
    std::vector<std::size_t> removed;
};

/**
 * @brief Removes every group of agents sharing an identical bid vector.
 *
 * Groups of size one are kept; groups of size two or more are removed
 * entirely, including all copies.
 */
DedupResult dedup(const VectorSet& bids);

/**
 * @brief Runs the strict-maxima mechanism.
 *
 * Winners are the agents whose bids are maxima of the post-dedup bid set;
 * each winner's candidate payments are the reference points of the other
 * remaining bids that her bid weakly dominates (never empty). Throws
 * NonPositiveError for bids outside the strictly positive orthant,
 * EmptyMarketError when nothing remains after dedup and SingleAgentError
 * when a single bid remains.
 */
MechanismOutcome run_mechanism_m(const Instance& instance,
                                 const PaymentPolicy& policy = PaymentPolicy::lex_min());

/**
 * @brief Runs the weak-maxima mechanism.
 *
 * Every remaining agent receives candidate payments from the reference
 * points of MAX(B) minus her own bid; the winners are those with a
 * nonempty candidate set, and their bids form exactly wmax_set(B). When an
 * agent's bid is the unique maximum, the opponent maxima set is empty and
 * its only reference point is the zero vector.
 */
MechanismOutcome run_mechanism_m_prime(const Instance& instance,
                                       const PaymentPolicy& policy = PaymentPolicy::lex_min());

/// Dispatches on kind.
MechanismOutcome run_mechanism(const Instance& instance, MechanismKind kind,
                               const PaymentPolicy& policy = PaymentPolicy::lex_min());

/**
 * @brief Utility vectors for a finished run: valuation minus payment for
 *        winners, the zero vector for losers and removed agents.
 *
 * Throws MissingValuationError unless one valuation per agent is given.
 */
std::vector<Vec> utilities(const MechanismOutcome& outcome, const VectorSet& valuations);

/// One coordinate-level collision between two agents' vectors.
struct DvViolation {
    std::size_t agent_a = 0;
    std::size_t agent_b = 0;
    std::size_t dim = 0;
};

/// Result of the distinct-values check.
struct DvReport {
    bool holds = true;
    std::vector<DvViolation> violations;
};

/**
 * @brief Checks the distinct-values (DV) property: no two agents share a
 *        value in any single dimension.
 *
 * Valuations are checked when present, bids otherwise.
 */
DvReport check_dv(const Instance& instance);

}  // namespace maxvec
