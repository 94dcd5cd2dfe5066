#include "maxvec/truthfulness.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "maxvec/errors.hpp"
#include "maxvec/pareto.hpp"
#include "maxvec/random.hpp"
#include "maxvec/reference_points.hpp"

namespace maxvec {

namespace {

VectorSet points_for(const VectorSet& opponents, std::size_t k) {
    if (k == 2) return reference_points_2d(opponents).points;
    return reference_points(opponents).points;
}

const Vec& select_from(const VectorSet& sorted_candidates, const PaymentPolicy& policy) {
    switch (policy.kind) {
        case PaymentPolicy::Kind::LexMin: return sorted_candidates.front();
        case PaymentPolicy::Kind::LexMax: return sorted_candidates.back();
        case PaymentPolicy::Kind::Indexed:
            return sorted_candidates[policy.index % sorted_candidates.size()];
    }
    return sorted_candidates.front();
}

/// Agent i's utility in the strict-maxima mechanism when she reports
/// `report` against fixed truthful opponents. Equivalent to a full
/// mechanism run restricted to agent i's outcome: the opponents' distinct
/// bids and their reference points do not depend on the report.
struct StrictMaximaAgentView {
    Vec valuation;
    VectorSet opponents_all;   // lex-sorted multiset of the other reports
    VectorSet opponents_kept;  // after whole-group duplicate removal
    VectorSet points;          // reference points of opponents_kept

    Vec evaluate(const Vec& report, const PaymentPolicy& policy, std::size_t k) const {
        if (sorted_contains(opponents_all, report)) {
            return Vec::zero(k);  // duplicate group, removed with its twins
        }
        for (const Vec& opponent : opponents_kept) {
            if (dominates(opponent, report)) return Vec::zero(k);
        }
        VectorSet pay;
        for (const Vec& t : points) {
            if (weakly_dominates(report, t)) pay.push_back(t);
        }
        if (pay.empty()) {
            throw std::logic_error("maximal report with empty candidate payment set");
        }
        return valuation - select_from(pay, policy);
    }
};

void require_positive_profile(const VectorSet& profile, std::size_t k, const char* what) {
    for (std::size_t i = 0; i < profile.size(); ++i) {
        if (profile[i].dim() != k) {
            throw DimensionError(std::string(what) + " " + std::to_string(i + 1) +
                                 " has wrong dimension");
        }
        if (!profile[i].strictly_positive()) {
            throw NonPositiveError(std::string(what) + " " + std::to_string(i + 1) +
                                   " is not strictly positive");
        }
    }
}

}  // namespace

UtilityComparison classify_utilities(const Vec& truthful, const Vec& deviated) {
    switch (compare(truthful, deviated)) {
        case DominanceRelation::Equal:
        case DominanceRelation::StronglyDominates:
        case DominanceRelation::DominatesNotStrongly:
            return UtilityComparison::TruthWeaklyBetter;
        case DominanceRelation::Incomparable:
            return UtilityComparison::MutuallyIncomparable;
        default:
            return UtilityComparison::DeviationBetter;
    }
}

std::string to_string(UtilityComparison c) {
    switch (c) {
        case UtilityComparison::TruthWeaklyBetter: return "truth-weakly-better";
        case UtilityComparison::MutuallyIncomparable: return "incomparable";
        case UtilityComparison::DeviationBetter: return "deviation-better";
    }
    return "?";
}

VectorSet deviation_grid(const Instance& instance, const DeviationGridConfig& config) {
    const VectorSet& profile = instance.valuations ? *instance.valuations : instance.bids;
    if (profile.empty()) {
        throw EmptySetError("deviation grid of an empty instance");
    }
    const std::size_t k = instance.k;
    require_positive_profile(profile, k, "profile vector");

    std::vector<std::vector<Rational>> axis(k);
    for (std::size_t j = 0; j < k; ++j) {
        std::vector<Rational> base;
        base.push_back(Rational(0));
        for (const Vec& v : profile) base.push_back(v[j]);
        std::sort(base.begin(), base.end());
        base.erase(std::unique(base.begin(), base.end()), base.end());

        std::vector<Rational>& values = axis[j];
        for (std::size_t i = 0; i + 1 < base.size(); ++i) {
            values.push_back(midpoint(base[i], base[i + 1]));
        }
        values.insert(values.end(), base.begin() + 1, base.end());
        values.push_back(base.back() + Rational(1));
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
    }

    // Saturating product of the axis sizes.
    std::size_t total = 1;
    for (const auto& values : axis) {
        if (total > config.max_deviations / values.size()) {
            total = config.max_deviations + 1;
            break;
        }
        total *= values.size();
    }

    VectorSet grid;
    if (total <= config.max_deviations) {
        grid.reserve(total);
        std::vector<std::size_t> digit(k, 0);
        while (true) {
            std::vector<Rational> coords;
            coords.reserve(k);
            for (std::size_t j = 0; j < k; ++j) coords.push_back(axis[j][digit[j]]);
            grid.push_back(Vec(std::move(coords)));

            std::size_t pos = k;
            while (pos > 0 && ++digit[pos - 1] == axis[pos - 1].size()) {
                digit[pos - 1] = 0;
                --pos;
            }
            if (pos == 0) break;
        }
    } else {
        std::mt19937_64 rng(config.seed);
        std::set<std::vector<std::size_t>> chosen;
        while (chosen.size() < config.max_deviations) {
            std::vector<std::size_t> digit(k);
            for (std::size_t j = 0; j < k; ++j) {
                digit[j] = uniform_below(rng, axis[j].size());
            }
            chosen.insert(std::move(digit));
        }
        grid.reserve(chosen.size());
        for (const auto& digit : chosen) {
            std::vector<Rational> coords;
            coords.reserve(k);
            for (std::size_t j = 0; j < k; ++j) coords.push_back(axis[j][digit[j]]);
            grid.push_back(Vec(std::move(coords)));
        }
    }
    return grid;
}

std::vector<DeviationReport> verify_equilibria_truthfulness(
    const Instance& instance, MechanismKind kind, const PaymentPolicy& policy,
    const VectorSet& deviations) {
    if (!instance.valuations) {
        throw MissingValuationError("deviation search requires valuations");
    }
    const VectorSet& profile = *instance.valuations;
    const std::size_t k = instance.k;
    const std::size_t n = profile.size();
    require_positive_profile(profile, k, "valuation");
    require_positive_profile(deviations, k, "deviation");

    std::vector<DeviationReport> reports;
    reports.reserve(n * deviations.size());

    if (kind == MechanismKind::StrictMaxima) {
        for (std::size_t i = 0; i < n; ++i) {
            StrictMaximaAgentView view;
            view.valuation = profile[i];
            for (std::size_t z = 0; z < n; ++z) {
                if (z != i) view.opponents_all.push_back(profile[z]);
            }
            view.opponents_all = sorted_lex(std::move(view.opponents_all));
            const DedupResult groups = dedup(view.opponents_all);
            for (std::size_t idx : groups.kept) {
                view.opponents_kept.push_back(view.opponents_all[idx]);
            }
            if (view.opponents_kept.empty()) {
                throw SingleAgentError("deviation search needs a distinct opponent bid");
            }
            view.points = points_for(view.opponents_kept, k);

            const Vec truthful_utility = view.evaluate(profile[i], policy, k);
            for (const Vec& d : deviations) {
                DeviationReport report;
                report.agent = i;
                report.truthful_utility = truthful_utility;
                report.deviation_bid = d;
                report.deviation_utility = view.evaluate(d, policy, k);
                report.verdict = classify_utilities(truthful_utility, report.deviation_utility);
                reports.push_back(std::move(report));
            }
        }
        return reports;
    }

    // Weak-maxima route: replay the full mechanism per deviation, since the
    // opponent maxima depend on the report. A report that duplicates an
    // opponent's bid removes the agent outright, so it scores zero without
    // a run (the shrunken market may not even be runnable).
    Instance truthful = instance;
    truthful.bids = profile;
    const MechanismOutcome base = run_mechanism(truthful, kind, policy);
    for (std::size_t i = 0; i < n; ++i) {
        VectorSet opponents;
        for (std::size_t z = 0; z < n; ++z) {
            if (z != i) opponents.push_back(profile[z]);
        }
        opponents = sorted_lex(std::move(opponents));
        for (const Vec& d : deviations) {
            DeviationReport report;
            report.agent = i;
            report.truthful_utility = base.agents[i].utility;
            report.deviation_bid = d;
            if (sorted_contains(opponents, d)) {
                report.deviation_utility = Vec::zero(k);
            } else {
                Instance deviated = truthful;
                deviated.bids[i] = d;
                const MechanismOutcome run = run_mechanism(deviated, kind, policy);
                report.deviation_utility = run.agents[i].utility;
            }
            report.verdict = classify_utilities(report.truthful_utility, report.deviation_utility);
            reports.push_back(std::move(report));
        }
    }
    return reports;
}

DeviationReport replay_impossibility_truthful(const Vec& payment_choice) {
    const Vec cap{Rational(2), Rational(2)};
    if (payment_choice.dim() != 2 || !weakly_dominates(cap, payment_choice) ||
        payment_choice[0].is_negative() || payment_choice[1].is_negative()) {
        throw PreconditionError(
            "payment must lie between the zero vector and (2,2)");
    }
    const Vec b1{Rational(3), Rational(1)};
    const Vec b2{Rational(1), Rational(3)};
    const Vec base_bid = cap;  // agent 3 bids (2,2)
    const Rational one(1);

    DeviationReport report;
    report.agent = 2;

    if (payment_choice[0] > one && payment_choice[1] > one) {
        // Interior region: valuation (2,2); shading the bid halfway towards
        // (1,1) keeps it maximal and caps the new payment below the old one.
        const Vec valuation = base_bid;
        const Vec shaded{midpoint(one, payment_choice[0]), midpoint(one, payment_choice[1])};
        if (max_set({b1, b2, shaded}).size() != 3) {
            throw std::logic_error("shaded bid fell out of the maxima");
        }
        report.truthful_utility = valuation - payment_choice;
        report.deviation_bid = shaded;
        // Even the worst individually rational payment, the shaded bid
        // itself, improves on the original payment.
        report.deviation_utility = valuation - shaded;
    } else {
        const bool low_first = payment_choice[0] <= one;  // else second coordinate is low
        const Vec valuation = low_first
                                  ? Vec{Rational(1), Rational(5, 2)}
                                  : Vec{Rational(5, 2), Rational(1)};
        const VectorSet truthful_market = {b1, b2, valuation};
        if (max_set(truthful_market).size() == 3) {
            throw std::logic_error("constructed valuation should lose when reported");
        }
        report.truthful_utility = Vec::zero(2);
        report.deviation_bid = base_bid;
        report.deviation_utility = valuation - payment_choice;
    }
    report.verdict = classify_utilities(report.truthful_utility, report.deviation_utility);
    return report;
}

DeviationReport replay_impossibility_dv(int proof_case) {
    if (proof_case != 1 && proof_case != 2) {
        throw PreconditionError("proof case must be 1 or 2");
    }
    // Agents 1 and 2 report their true vectors (3,1) and (1,3); the
    // constructed third valuation shares a coordinate value with one of
    // them, so the distinct-values property fails for this market.
    const Vec payment = proof_case == 1 ? Vec{Rational(1), Rational(2)}
                                        : Vec{Rational(2), Rational(1)};
    return replay_impossibility_truthful(payment);
}

namespace {

std::vector<std::optional<Rational>> incomparable_slacks(const Vec& p, const VectorSet& t) {
    std::vector<std::optional<Rational>> eps(p.dim());
    for (const Vec& s : t) {
        if (s.dim() != p.dim()) {
            throw DimensionError("set member dimension mismatch");
        }
        if (!incomparable(s, p)) {
            throw PreconditionError("every member must be incomparable to the base point");
        }
        std::size_t l = 0;
        while (s[l] <= p[l]) ++l;  // exists: s exceeds p somewhere
        const Rational slack = s[l] - p[l];
        if (!eps[l] || slack < *eps[l]) eps[l] = slack;
    }
    return eps;
}

Vec half_of(const std::vector<std::optional<Rational>>& eps) {
    std::vector<Rational> coords;
    coords.reserve(eps.size());
    for (const auto& e : eps) {
        coords.push_back((e ? *e : Rational(1)) / Rational(2));
    }
    return Vec(std::move(coords));
}

}  // namespace

Vec separation_delta_incomparable(const Vec& p, const VectorSet& t) {
    const Vec delta = half_of(incomparable_slacks(p, t));
    const Vec shifted = p + delta;
    for (const Vec& s : t) {
        if (!incomparable(s, shifted)) {
            throw std::logic_error("separation shift broke incomparability");
        }
    }
    return delta;
}

Vec separation_delta_bipartition(const Vec& p, const VectorSet& t_incomparable,
                                 const VectorSet& t_dominating) {
    std::vector<std::optional<Rational>> eps = incomparable_slacks(p, t_incomparable);
    for (const Vec& s : t_dominating) {
        if (s.dim() != p.dim()) {
            throw DimensionError("set member dimension mismatch");
        }
        if (!dominates(s, p)) {
            throw PreconditionError("every member of the dominating part must dominate the base point");
        }
        for (std::size_t j = 0; j < p.dim(); ++j) {
            if (s[j] > p[j]) {
                const Rational slack = s[j] - p[j];
                if (!eps[j] || slack < *eps[j]) eps[j] = slack;
            }
        }
    }
    const Vec delta = half_of(eps);
    const Vec shifted = p + delta;
    for (const Vec& s : t_incomparable) {
        if (!incomparable(s, shifted)) {
            throw std::logic_error("separation shift broke incomparability");
        }
    }
    for (const Vec& s : t_dominating) {
        if (!dominates(s, shifted) && !incomparable(s, shifted)) {
            throw std::logic_error("separation shift inverted a dominance");
        }
    }
    return delta;
}

AdversarialScenario adversarial_valuation(const Vec& bid, const Vec& payment,
                                          const VectorSet& others) {
    if (others.empty()) {
        throw PreconditionError("opponent set must be nonempty");
    }
    const std::size_t k = uniform_dimension(others);
    if (bid.dim() != k || payment.dim() != k) {
        throw DimensionError("bid and payment must match the opponent dimension");
    }
    require_positive_profile(others, k, "opponent bid");
    if (!bid.strictly_positive()) {
        throw PreconditionError("bid must be strictly positive");
    }
    for (std::size_t j = 0; j < k; ++j) {
        if (payment[j].is_negative()) {
            throw PreconditionError("payment coordinates must be nonnegative");
        }
    }
    for (const Vec& o : others) {
        if (dominates(o, bid)) {
            throw PreconditionError("bid must be maximal among the opponents");
        }
    }
    if (!weakly_dominates(bid, payment)) {
        throw PreconditionError("payment must be weakly dominated by the bid");
    }

    const VectorSet points = points_for(distinct_sorted(others), k);

    AdversarialScenario scenario;
    for (const Vec& t : points) {
        if (payment == t) return scenario;  // the rule already charges a reference point
    }

    VectorSet strongly_below;
    for (const Vec& t : points) {
        if (strongly_dominates(payment, t)) strongly_below.push_back(t);
    }
    if (!strongly_below.empty()) {
        // Deviating to the payment keeps the agent maximal; if the rule
        // charges the deviation less, lying profits, and the halfway bid
        // towards the dominated reference point witnesses the remaining
        // subcase.
        scenario.kind = AdversarialScenario::Kind::PaymentStronglyDominating;
        scenario.valuation = bid;
        scenario.deviation = payment;
        const Vec& t = strongly_below.front();  // lex-least, points are sorted
        std::vector<Rational> mid;
        mid.reserve(k);
        for (std::size_t j = 0; j < k; ++j) mid.push_back(midpoint(payment[j], t[j]));
        scenario.midpoint_witness = Vec(std::move(mid));
        return scenario;
    }

    for (const Vec& t : points) {
        if (dominates(payment, t)) return scenario;  // only a tie-limit argument remains
    }

    VectorSet dominating, incomparable_part;
    for (const Vec& t : points) {
        if (dominates(t, payment)) {
            dominating.push_back(t);
        } else {
            incomparable_part.push_back(t);
        }
    }

    if (dominating.empty()) {
        scenario.kind = AdversarialScenario::Kind::PaymentIncomparable;
        scenario.valuation = payment + separation_delta_incomparable(payment, points);
    } else {
        scenario.kind = AdversarialScenario::Kind::PaymentDominated;
        scenario.valuation =
            payment + separation_delta_bipartition(payment, incomparable_part, dominating);
    }
    scenario.deviation = bid;
    return scenario;
}

}  // namespace maxvec
