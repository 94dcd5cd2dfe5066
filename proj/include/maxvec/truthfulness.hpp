/**
 * @file truthfulness.hpp
 * @brief Incentive-property testing: deviation search, impossibility
 *        counterexample replays, and separation constructions.
 *
 * A mechanism is equilibria-truthful when no agent can reach a utility
 * vector that dominates her truthful utility, assuming everyone else bids
 * truthfully. Payments depend on bids only through the grid of reported
 * coordinate values, so a finite deviation grid (grid values, midpoints
 * between adjacent values, and one step beyond the maximum) exercises one
 * bid per region of constant behavior.
 */

#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

#include "maxvec/mechanism.hpp"
#include "maxvec/vec.hpp"

namespace maxvec {

/// How a truthful utility u relates to a deviation utility u'.
enum class UtilityComparison {
    TruthWeaklyBetter,      ///< u weakly dominates u'
    MutuallyIncomparable,   ///< neither weakly dominates the other
    DeviationBetter,        ///< u' dominates u: a truthfulness violation
};

UtilityComparison classify_utilities(const Vec& truthful, const Vec& deviated);
std::string to_string(UtilityComparison c);

/// One tested deviation of one agent.
struct DeviationReport {
    std::size_t agent = 0;  ///< 0-based agent index
    Vec truthful_utility;
    Vec deviation_bid;
    Vec deviation_utility;
    UtilityComparison verdict = UtilityComparison::TruthWeaklyBetter;
};

struct DeviationGridConfig {
    std::size_t max_deviations = 10'000;  ///< cap; larger grids are subsampled
    std::uint64_t seed = 1;               ///< subsampling seed
};

/**
 * @brief The deviation grid of an instance: the product, over dimensions,
 *        of every reported coordinate value, every midpoint between
 *        adjacent values (including 0 below the smallest), and the largest
 *        value plus one. All grid bids are strictly positive.
 */
VectorSet deviation_grid(const Instance& instance, const DeviationGridConfig& config = {});

/**
 * @brief Exhaustive deviation search with all other agents truthful.
 *
 * For each agent i and each deviation d, evaluates agent i's utility when
 * she reports d while everyone else reports their valuation, and compares
 * it with her utility under a fully truthful profile. The instance must
 * carry valuations, and bids are ignored: the truthful profile is the
 * valuation profile.
 *
 * Returns one report per (agent, deviation) pair.
 */
std::vector<DeviationReport> verify_equilibria_truthfulness(
    const Instance& instance, MechanismKind kind, const PaymentPolicy& policy,
    const VectorSet& deviations);

/**
 * @brief Replays the three-agent counterexample showing that no mechanism
 *        of this family is truthful.
 *
 * Bids are (3,1), (1,3) and (2,2); `payment_choice` is any payment for the
 * third agent consistent with individual rationality (0 <= p <= (2,2)).
 * Depending on where the payment falls, agent 3's valuation and profitable
 * deviation are constructed per the case split; the verdict is always
 * DeviationBetter. Throws PreconditionError if the payment is not weakly
 * dominated by (2,2) or has a negative coordinate.
 */
DeviationReport replay_impossibility_truthful(const Vec& payment_choice);

/**
 * @brief Replays the same construction with agents 1 and 2 truthful,
 *        showing equilibria-truthfulness also fails once two agents may
 *        share a coordinate value.
 *
 * `proof_case` 1 charges (1,2) (valuation (1,2.5) profits by reporting
 * (2,2)); case 2 charges (2,1) (valuation (2.5,1) likewise). In both cases
 * the constructed valuation shares a coordinate with a truthful agent, so
 * the distinct-values property fails.
 */
DeviationReport replay_impossibility_dv(int proof_case);

/**
 * @brief A strictly positive shift keeping p incomparable to every member
 *        of t.
 *
 * Requires p incomparable to each member (PreconditionError otherwise).
 * Each coordinate gets half the smallest slack of the members assigned to
 * it, or 1/2 when no member constrains it; the postcondition is verified
 * before returning.
 */
Vec separation_delta_incomparable(const Vec& p, const VectorSet& t);

/**
 * @brief A strictly positive shift preserving a mixed relation profile:
 *        members of t_incomparable stay incomparable to p + delta, and
 *        members of t_dominating still dominate or are incomparable to it.
 *
 * Requires every member of t_incomparable incomparable to p and every
 * member of t_dominating dominating p.
 */
Vec separation_delta_bipartition(const Vec& p, const VectorSet& t_incomparable,
                                 const VectorSet& t_dominating);

/**
 * @brief A constructed scenario demonstrating that a payment differing
 *        from every reference point of the opponents' bids invites lying.
 */
struct AdversarialScenario {
    enum class Kind {
        PaymentIncomparable,        ///< payment incomparable to all reference points
        PaymentDominated,           ///< some reference point dominates the payment
        PaymentStronglyDominating,  ///< payment strongly dominates a reference point
        NotCovered,                 ///< payment equals or merely dominates a reference point
    };

    Kind kind = Kind::NotCovered;
    std::optional<Vec> valuation;         ///< adversarial true valuation of agent i
    std::optional<Vec> deviation;         ///< report that beats telling the truth
    std::optional<Vec> midpoint_witness;  ///< alternative witness bid (strongly-dominating case)
};

/**
 * @brief Builds the adversarial valuation for a hypothetical payment rule
 *        charging `payment` to `bid` against the fixed opponent bids.
 *
 * Preconditions: `bid` is maximal among opponents plus itself, and
 * `payment` is weakly dominated by `bid`. In the incomparable and
 * dominated cases the returned valuation loses when reported truthfully
 * yet the deviation to `bid` nets utility payment-shift, which strongly
 * dominates zero. When the payment strongly dominates a reference point,
 * the profitable deviation is the payment itself (with a midpoint witness
 * as fallback). A payment that equals or merely dominates a reference
 * point is reported as NotCovered.
 */
AdversarialScenario adversarial_valuation(const Vec& bid, const Vec& payment,
                                          const VectorSet& others);

}  // namespace maxvec
