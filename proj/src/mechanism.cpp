#include "maxvec/mechanism.hpp"

#include <algorithm>
#include <map>

#include "maxvec/errors.hpp"
#include "maxvec/pareto.hpp"
#include "maxvec/reference_points.hpp"

namespace maxvec {

namespace {

void validate_instance(const Instance& instance) {
    if (instance.k == 0) {
        throw DimensionError("instance dimension must be at least 1");
    }
    for (std::size_t i = 0; i < instance.bids.size(); ++i) {
        if (instance.bids[i].dim() != instance.k) {
            throw DimensionError("bid of agent " + std::to_string(i + 1) +
                                 " has wrong dimension");
        }
        if (!instance.bids[i].strictly_positive()) {
            throw NonPositiveError("bid of agent " + std::to_string(i + 1) +
                                   " is not strictly positive");
        }
    }
    if (instance.valuations) {
        if (instance.valuations->size() != instance.bids.size()) {
            throw MissingValuationError("valuation count does not match agent count");
        }
        for (const Vec& v : *instance.valuations) {
            if (v.dim() != instance.k) {
                throw DimensionError("valuation has wrong dimension");
            }
        }
    }
}

// Reference points with the cheap staircase route when it applies.
VectorSet opponent_reference_points(const VectorSet& opponents, std::size_t k) {
    if (k == 2) return reference_points_2d(opponents).points;
    return reference_points(opponents).points;
}

const Vec& select_payment(const VectorSet& sorted_candidates, const PaymentPolicy& policy) {
    switch (policy.kind) {
        case PaymentPolicy::Kind::LexMin: return sorted_candidates.front();
        case PaymentPolicy::Kind::LexMax: return sorted_candidates.back();
        case PaymentPolicy::Kind::Indexed:
            return sorted_candidates[policy.index % sorted_candidates.size()];
    }
    return sorted_candidates.front();
}

void settle_winner(AgentOutcome& agent, const Instance& instance, std::size_t i,
                   VectorSet pay_candidates, const PaymentPolicy& policy) {
    if (pay_candidates.empty()) {
        throw std::logic_error("winner with empty candidate payment set");
    }
    agent.winner = true;
    agent.pay_candidates = std::move(pay_candidates);
    agent.payment = select_payment(agent.pay_candidates, policy);
    if (instance.valuations) {
        agent.utility = (*instance.valuations)[i] - agent.payment;
    }
}

MechanismOutcome prepare_outcome(const Instance& instance, MechanismKind kind,
                                 const DedupResult& groups) {
    MechanismOutcome outcome;
    outcome.kind = kind;
    outcome.k = instance.k;
    outcome.agents.resize(instance.bids.size());
    for (AgentOutcome& agent : outcome.agents) {
        agent.payment = Vec::zero(instance.k);
        agent.utility = Vec::zero(instance.k);
    }
    for (std::size_t i : groups.removed) {
        outcome.agents[i].removed_as_duplicate = true;
    }
    return outcome;
}

}  // namespace

DedupResult dedup(const VectorSet& bids) {
    std::map<std::vector<Rational>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < bids.size(); ++i) {
        groups[bids[i].coords()].push_back(i);
    }
    DedupResult result;
    for (const auto& [coords, members] : groups) {
        auto& target = members.size() == 1 ? result.kept : result.removed;
        target.insert(target.end(), members.begin(), members.end());
    }
    std::sort(result.kept.begin(), result.kept.end());
    std::sort(result.removed.begin(), result.removed.end());
    return result;
}

MechanismOutcome run_mechanism_m(const Instance& instance, const PaymentPolicy& policy) {
    validate_instance(instance);
    const DedupResult groups = dedup(instance.bids);
    if (groups.kept.empty()) {
        throw EmptyMarketError("no bids remain after duplicate removal");
    }
    if (groups.kept.size() == 1) {
        throw SingleAgentError("a single bid remains after duplicate removal");
    }

    MechanismOutcome outcome = prepare_outcome(instance, MechanismKind::StrictMaxima, groups);

    VectorSet remaining;
    remaining.reserve(groups.kept.size());
    for (std::size_t i : groups.kept) remaining.push_back(instance.bids[i]);
    const VectorSet maxima = distinct_sorted(max_set_fast(remaining));

    for (std::size_t i : groups.kept) {
        const Vec& bid = instance.bids[i];
        if (!sorted_contains(maxima, bid)) continue;

        VectorSet opponents;
        opponents.reserve(remaining.size() - 1);
        for (const Vec& other : remaining) {
            if (other != bid) opponents.push_back(other);
        }
        VectorSet pay;
        for (const Vec& t : opponent_reference_points(opponents, instance.k)) {
            if (weakly_dominates(bid, t)) pay.push_back(t);
        }
        settle_winner(outcome.agents[i], instance, i, std::move(pay), policy);
    }
    return outcome;
}

MechanismOutcome run_mechanism_m_prime(const Instance& instance, const PaymentPolicy& policy) {
    validate_instance(instance);
    const DedupResult groups = dedup(instance.bids);
    if (groups.kept.empty()) {
        throw EmptyMarketError("no bids remain after duplicate removal");
    }
    if (groups.kept.size() == 1) {
        throw SingleAgentError("a single bid remains after duplicate removal");
    }

    MechanismOutcome outcome = prepare_outcome(instance, MechanismKind::WeakMaxima, groups);

    VectorSet remaining;
    remaining.reserve(groups.kept.size());
    for (std::size_t i : groups.kept) remaining.push_back(instance.bids[i]);
    const VectorSet maxima = distinct_sorted(max_set_fast(remaining));

    // Agents outside the maxima all share the same opponent set, hence the
    // same reference points; compute those once.
    const VectorSet shared_points = opponent_reference_points(maxima, instance.k);

    for (std::size_t i : groups.kept) {
        const Vec& bid = instance.bids[i];
        VectorSet points;
        if (!sorted_contains(maxima, bid)) {
            points = shared_points;
        } else if (maxima.size() == 1) {
            // Unique maximum: the opponent maxima set is empty, whose only
            // reference point is the origin.
            points.push_back(Vec::zero(instance.k));
        } else {
            VectorSet opponents;
            opponents.reserve(maxima.size() - 1);
            for (const Vec& other : maxima) {
                if (other != bid) opponents.push_back(other);
            }
            points = opponent_reference_points(opponents, instance.k);
        }

        VectorSet pay;
        for (const Vec& t : points) {
            if (weakly_dominates(bid, t)) pay.push_back(t);
        }
        if (!pay.empty()) {
            settle_winner(outcome.agents[i], instance, i, std::move(pay), policy);
        }
    }
    return outcome;
}

MechanismOutcome run_mechanism(const Instance& instance, MechanismKind kind,
                               const PaymentPolicy& policy) {
    return kind == MechanismKind::StrictMaxima ? run_mechanism_m(instance, policy)
                                               : run_mechanism_m_prime(instance, policy);
}

std::vector<Vec> utilities(const MechanismOutcome& outcome, const VectorSet& valuations) {
    if (valuations.size() != outcome.agents.size()) {
        throw MissingValuationError("need exactly one valuation per agent");
    }
    std::vector<Vec> result;
    result.reserve(outcome.agents.size());
    for (std::size_t i = 0; i < outcome.agents.size(); ++i) {
        if (valuations[i].dim() != outcome.k) {
            throw DimensionError("valuation has wrong dimension");
        }
        if (outcome.agents[i].winner) {
            result.push_back(valuations[i] - outcome.agents[i].payment);
        } else {
            result.push_back(Vec::zero(outcome.k));
        }
    }
    return result;
}

DvReport check_dv(const Instance& instance) {
    const VectorSet& values = instance.valuations ? *instance.valuations : instance.bids;
    DvReport report;
    for (std::size_t a = 0; a < values.size(); ++a) {
        for (std::size_t b = a + 1; b < values.size(); ++b) {
            for (std::size_t j = 0; j < std::min(values[a].dim(), values[b].dim()); ++j) {
                if (values[a][j] == values[b][j]) {
                    report.violations.push_back({a, b, j});
                }
            }
        }
    }
    report.holds = report.violations.empty();
    return report;
}

}  // namespace maxvec
