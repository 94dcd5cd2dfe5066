#include <doctest.h>

#include <random>

#include "maxvec/errors.hpp"
#include "maxvec/pareto.hpp"
#include "maxvec/truthfulness.hpp"
#include "testutil.hpp"

using namespace maxvec;
using testutil::V;
using testutil::VS;
using testutil::rows;

namespace {

Instance truthful_instance(const VectorSet& valuations) {
    Instance instance;
    instance.k = valuations.front().dim();
    instance.bids = valuations;
    instance.valuations = valuations;
    return instance;
}

std::size_t count_violations(const std::vector<DeviationReport>& reports) {
    std::size_t violations = 0;
    for (const DeviationReport& r : reports) {
        if (r.verdict == UtilityComparison::DeviationBetter) ++violations;
    }
    return violations;
}

}  // namespace

TEST_CASE("utility comparisons classify by dominance") {
    CHECK(classify_utilities(V({1, 1}), V({1, 1})) == UtilityComparison::TruthWeaklyBetter);
    CHECK(classify_utilities(V({2, 2}), V({1, 1})) == UtilityComparison::TruthWeaklyBetter);
    CHECK(classify_utilities(V({1, 2}), V({2, 1})) == UtilityComparison::MutuallyIncomparable);
    CHECK(classify_utilities(V({1, 1}), V({2, 1})) == UtilityComparison::DeviationBetter);
    CHECK(classify_utilities(V({0, 0}), V({1, 1})) == UtilityComparison::DeviationBetter);
}

TEST_CASE("deviation grid holds values, midpoints, and a step beyond") {
    const Instance instance = truthful_instance(rows({{1, 3}, {2, 1}}));
    const VectorSet grid = deviation_grid(instance);
    // Axis 0: values {1,2}, midpoints {0.5, 1.5}, beyond 3 -> 5 values.
    // Axis 1: values {1,3}, midpoints {0.5, 2}, beyond 4 -> 5 values.
    CHECK(grid.size() == 25);
    const VectorSet sorted = sorted_lex(grid);
    for (const Vec& d : grid) CHECK(d.strictly_positive());
    CHECK(sorted_contains(sorted, VS({"0.5", "0.5"})));
    CHECK(sorted_contains(sorted, VS({"1.5", "2"})));
    CHECK(sorted_contains(sorted, V({3, 4})));
    CHECK(sorted_contains(sorted, V({1, 1})));
    CHECK_FALSE(sorted_contains(sorted, V({4, 4})));
}

TEST_CASE("oversized deviation grids are subsampled deterministically") {
    std::mt19937_64 rng(41);
    const Instance instance = testutil::random_dv_instance(rng, 9, 4, 50);
    DeviationGridConfig config;
    config.max_deviations = 500;
    config.seed = 7;
    const VectorSet grid = deviation_grid(instance, config);
    CHECK(grid.size() == 500);
    CHECK(grid == deviation_grid(instance, config));
    for (const Vec& d : grid) CHECK(d.strictly_positive());
}

TEST_CASE("no profitable deviation in the staircase market") {
    const Instance instance =
        truthful_instance(rows({{1, 7}, {3, 5}, {5, 3}, {7, 1}, {4, 4}}));
    const VectorSet deviations = rows({{2, 6}, {6, 6}, {6, 2}});
    for (const PaymentPolicy& policy :
         {PaymentPolicy::lex_min(), PaymentPolicy::lex_max()}) {
        const std::vector<DeviationReport> reports = verify_equilibria_truthfulness(
            instance, MechanismKind::StrictMaxima, policy, deviations);
        CHECK(reports.size() == 15);
        CHECK(count_violations(reports) == 0);
        // The last agent values (4,4), pays (3,3) when truthful, and every
        // listed deviation leaves her utility incomparable to (1,1).
        for (const DeviationReport& r : reports) {
            if (r.agent == 4) {
                CHECK(r.truthful_utility == V({1, 1}));
                CHECK(r.verdict == UtilityComparison::MutuallyIncomparable);
            }
        }
    }
}

TEST_CASE("reporting the valuation itself is never a deviation") {
    const Instance instance = truthful_instance(rows({{3, 1}, {1, 3}, {2, 2}}));
    const std::vector<DeviationReport> reports = verify_equilibria_truthfulness(
        instance, MechanismKind::StrictMaxima, PaymentPolicy::lex_min(),
        {instance.bids[0], instance.bids[1], instance.bids[2]});
    for (const DeviationReport& r : reports) {
        if (r.deviation_bid == instance.bids[r.agent]) {
            CHECK(r.verdict == UtilityComparison::TruthWeaklyBetter);
            CHECK(r.truthful_utility == r.deviation_utility);
        }
    }
}

TEST_CASE("reference-point payments leave no profitable grid deviation") {
    const Instance instance = truthful_instance(rows({{3, 1}, {1, 3}, {2, 2}}));
    const std::vector<DeviationReport> reports = verify_equilibria_truthfulness(
        instance, MechanismKind::StrictMaxima, PaymentPolicy::lex_min(),
        deviation_grid(instance));
    CHECK(count_violations(reports) == 0);
}

TEST_CASE("the agent-view shortcut matches full mechanism reruns") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 25; ++iter) {
        const std::size_t n = 4 + uniform_below(rng, 3);
        const std::size_t k = 1 + uniform_below(rng, 3);
        const Instance instance = testutil::random_dv_instance(rng, n, k, 30);
        DeviationGridConfig config;
        config.max_deviations = 60;
        config.seed = iter;
        const VectorSet deviations = deviation_grid(instance, config);

        const std::vector<DeviationReport> fast = verify_equilibria_truthfulness(
            instance, MechanismKind::StrictMaxima, PaymentPolicy::lex_min(), deviations);

        std::size_t r = 0;
        for (std::size_t i = 0; i < n; ++i) {
            Instance base = instance;
            base.bids = *instance.valuations;
            const MechanismOutcome truthful = run_mechanism_m(base);
            for (const Vec& d : deviations) {
                Instance deviated = base;
                deviated.bids[i] = d;
                const MechanismOutcome run = run_mechanism_m(deviated);
                REQUIRE(r < fast.size());
                CHECK(fast[r].agent == i);
                CHECK(fast[r].truthful_utility == truthful.agents[i].utility);
                CHECK(fast[r].deviation_utility == run.agents[i].utility);
                ++r;
            }
        }
    }
}

TEST_CASE("weak-maxima deviation search runs through full replays") {
    const Instance instance = truthful_instance(rows({{1, 1}, {2, 2}, {3, 1}}));
    const VectorSet grid = deviation_grid(instance);
    const std::vector<DeviationReport> reports = verify_equilibria_truthfulness(
        instance, MechanismKind::WeakMaxima, PaymentPolicy::lex_min(), grid);
    REQUIRE(reports.size() == grid.size() * 3);
    for (const DeviationReport& r : reports) {
        CHECK(r.verdict == classify_utilities(r.truthful_utility, r.deviation_utility));
    }
    // The weak mechanism pays from the reference points of the *reported*
    // maxima, so a losing agent can profit by overbidding until only one
    // opponent stays maximal; the search must surface that.
    bool found = false;
    for (const DeviationReport& r : reports) {
        if (r.agent == 0 && r.deviation_bid == VS({"2.5", "3"})) {
            CHECK(r.verdict == UtilityComparison::DeviationBetter);
            CHECK(r.deviation_utility == V({1, 0}));
            found = true;
        }
    }
    CHECK(found);
}

TEST_CASE("interior payments invite shading the bid") {
    const DeviationReport r = replay_impossibility_truthful(VS({"1.5", "1.5"}));
    CHECK(r.agent == 2);
    CHECK(r.truthful_utility == VS({"0.5", "0.5"}));
    CHECK(r.deviation_bid == VS({"1.25", "1.25"}));
    CHECK(r.deviation_utility == VS({"0.75", "0.75"}));
    CHECK(r.verdict == UtilityComparison::DeviationBetter);
}

TEST_CASE("edge payments invite overbidding a losing valuation") {
    const DeviationReport low_first = replay_impossibility_truthful(V({1, 2}));
    CHECK(low_first.truthful_utility == Vec::zero(2));
    CHECK(low_first.deviation_bid == V({2, 2}));
    CHECK(low_first.deviation_utility == VS({"0", "0.5"}));
    CHECK(low_first.verdict == UtilityComparison::DeviationBetter);

    const DeviationReport low_second = replay_impossibility_truthful(V({2, 1}));
    CHECK(low_second.deviation_utility == VS({"0.5", "0"}));
    CHECK(low_second.verdict == UtilityComparison::DeviationBetter);
}

TEST_CASE("a coarse payment sweep always finds a profitable lie") {
    for (int a = 0; a <= 20; a += 2) {
        for (int b = 0; b <= 20; b += 2) {
            const DeviationReport r =
                replay_impossibility_truthful(Vec{Rational(a, 10), Rational(b, 10)});
            CHECK(r.verdict == UtilityComparison::DeviationBetter);
        }
    }
}

TEST_CASE("payments above the bid are rejected") {
    CHECK_THROWS_AS(replay_impossibility_truthful(V({3, 1})), PreconditionError);
    CHECK_THROWS_AS(replay_impossibility_truthful(VS({"-0.5", "1"})), PreconditionError);
    CHECK_THROWS_AS(replay_impossibility_truthful(V({1, 2, 3})), PreconditionError);
}

TEST_CASE("the two-truthful-agents replay violates in both cases") {
    const DeviationReport case1 = replay_impossibility_dv(1);
    CHECK(case1.verdict == UtilityComparison::DeviationBetter);
    CHECK(case1.deviation_utility == VS({"0", "0.5"}));

    const DeviationReport case2 = replay_impossibility_dv(2);
    CHECK(case2.verdict == UtilityComparison::DeviationBetter);
    CHECK(case2.deviation_utility == VS({"0.5", "0"}));

    CHECK_THROWS_AS(replay_impossibility_dv(3), PreconditionError);

    // The constructed valuations collide with a truthful agent's
    // coordinate, so these markets fail the distinct-values check.
    Instance market1;
    market1.k = 2;
    market1.bids = {V({3, 1}), V({1, 3}), VS({"1", "2.5"})};
    CHECK_FALSE(check_dv(market1).holds);
    Instance market2;
    market2.k = 2;
    market2.bids = {V({3, 1}), V({1, 3}), VS({"2.5", "1"})};
    CHECK_FALSE(check_dv(market2).holds);
}

TEST_CASE("incomparability-preserving shift on known inputs") {
    const Vec delta = separation_delta_incomparable(V({2, 2}), rows({{1, 3}, {3, 1}}));
    CHECK(delta == VS({"0.5", "0.5"}));
    CHECK(incomparable(V({2, 2}) + delta, V({1, 3})));
    CHECK(incomparable(V({2, 2}) + delta, V({3, 1})));

    CHECK(separation_delta_incomparable(V({1, 4}), {}) == VS({"0.5", "0.5"}));
    CHECK(separation_delta_incomparable(V({1, 4}), rows({{2, 3}})) == VS({"0.5", "0.5"}));

    CHECK_THROWS_AS(separation_delta_incomparable(V({1, 1}), rows({{2, 2}})),
                    PreconditionError);
}

TEST_CASE("bipartition shift on known inputs") {
    const Vec delta =
        separation_delta_bipartition(V({1, 1}), rows({{0, 3}}), rows({{2, 2}}));
    CHECK(delta == VS({"0.5", "0.5"}));
    CHECK(incomparable(V({0, 3}), V({1, 1}) + delta));
    CHECK(dominates(V({2, 2}), V({1, 1}) + delta));

    // Degenerate bipartitions.
    const Vec only_dominating =
        separation_delta_bipartition(V({1, 1}), {}, rows({{2, 2}}));
    CHECK(dominates(V({2, 2}), V({1, 1}) + only_dominating));

    CHECK_THROWS_AS(separation_delta_bipartition(V({1, 1}), rows({{2, 2}}), {}),
                    PreconditionError);
    CHECK_THROWS_AS(separation_delta_bipartition(V({1, 1}), {}, rows({{0, 3}})),
                    PreconditionError);
}

TEST_CASE("bipartition shift with nothing dominating equals the plain shift") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 200; ++iter) {
        const std::size_t k = 2 + uniform_below(rng, 3);
        const Vec p = testutil::random_set(rng, 1, k, 8).front();
        VectorSet t;
        for (const Vec& cand :
             distinct_sorted(max_set(testutil::random_set(rng, 6, k, 8)))) {
            if (incomparable(cand, p)) t.push_back(cand);
        }
        CHECK(separation_delta_bipartition(p, t, {}) ==
              separation_delta_incomparable(p, t));
    }
}

TEST_CASE("separation shifts satisfy their contracts on random inputs") {
    std::mt19937_64 rng(44);
    int checked = 0;
    for (int iter = 0; iter < 400; ++iter) {
        const std::size_t k = 2 + uniform_below(rng, 3);
        const Vec p = testutil::random_set(rng, 1, k, 9).front();
        VectorSet incomparable_part, dominating_part;
        for (const Vec& cand :
             distinct_sorted(max_set(testutil::random_set(rng, 7, k, 9)))) {
            if (incomparable(cand, p)) {
                incomparable_part.push_back(cand);
            } else if (dominates(cand, p)) {
                dominating_part.push_back(cand);
            }
        }
        // Postconditions are asserted inside the operations themselves;
        // additionally check strict positivity here.
        CHECK(separation_delta_incomparable(p, incomparable_part).strictly_positive());
        CHECK(separation_delta_bipartition(p, incomparable_part, dominating_part)
                  .strictly_positive());
        ++checked;
    }
    CHECK(checked == 400);
}

TEST_CASE("adversarial valuation, incomparable-payment case") {
    const VectorSet others = rows({{1, 7}, {3, 5}, {5, 3}, {7, 1}});
    const AdversarialScenario s =
        adversarial_valuation(V({6, 6}), VS({"3.7", "1.7"}), others);
    CHECK(s.kind == AdversarialScenario::Kind::PaymentIncomparable);
    REQUIRE(s.valuation.has_value());
    CHECK(*s.valuation == VS({"4.35", "2.35"}));
    CHECK(*s.deviation == V({6, 6}));

    // Reported truthfully, the valuation loses: it is dominated.
    Instance market;
    market.k = 2;
    market.bids = others;
    market.bids.push_back(*s.valuation);
    market.valuations = market.bids;
    const MechanismOutcome outcome = run_mechanism_m(market);
    CHECK_FALSE(outcome.agents[4].winner);
    // Lying nets the shift itself, strictly positive everywhere.
    CHECK((*s.valuation - VS({"3.7", "1.7"})).strictly_positive());
}

TEST_CASE("adversarial valuation, dominated-payment case") {
    const VectorSet others = rows({{1, 7}, {3, 5}, {5, 3}, {7, 1}});
    const AdversarialScenario s = adversarial_valuation(V({6, 6}), V({2, 1}), others);
    CHECK(s.kind == AdversarialScenario::Kind::PaymentDominated);
    REQUIRE(s.valuation.has_value());
    CHECK(*s.valuation == VS({"2.5", "2"}));
    CHECK(*s.deviation == V({6, 6}));

    Instance market;
    market.k = 2;
    market.bids = others;
    market.bids.push_back(*s.valuation);
    market.valuations = market.bids;
    CHECK_FALSE(run_mechanism_m(market).agents[4].winner);
}

TEST_CASE("adversarial valuation, strongly-dominating payment case") {
    const VectorSet others = rows({{1, 7}, {3, 5}, {5, 3}, {7, 1}});
    const AdversarialScenario s = adversarial_valuation(V({6, 6}), V({4, 4}), others);
    CHECK(s.kind == AdversarialScenario::Kind::PaymentStronglyDominating);
    CHECK(*s.valuation == V({6, 6}));
    CHECK(*s.deviation == V({4, 4}));
    CHECK(*s.midpoint_witness == VS({"3.5", "3.5"}));
    // The witness stays maximal: it strongly dominates a reference point.
    Instance market;
    market.k = 2;
    market.bids = others;
    market.bids.push_back(*s.midpoint_witness);
    const MechanismOutcome outcome = run_mechanism_m(market);
    CHECK(outcome.agents[4].winner);
}

TEST_CASE("adversarial valuation, uncovered payments") {
    const VectorSet others = rows({{1, 7}, {3, 5}, {5, 3}, {7, 1}});
    CHECK(adversarial_valuation(V({6, 6}), V({3, 3}), others).kind ==
          AdversarialScenario::Kind::NotCovered);
    CHECK(adversarial_valuation(V({6, 6}), V({3, 4}), others).kind ==
          AdversarialScenario::Kind::NotCovered);
}

TEST_CASE("adversarial valuation preconditions") {
    const VectorSet others = rows({{1, 7}, {3, 5}});
    CHECK_THROWS_AS(adversarial_valuation(V({2, 4}), V({1, 1}), others),
                    PreconditionError);  // bid dominated by (3,5)
    CHECK_THROWS_AS(adversarial_valuation(V({6, 6}), V({7, 1}), others),
                    PreconditionError);  // payment not below the bid
    CHECK_THROWS_AS(adversarial_valuation(V({6, 6}), V({1, 1}), {}),
                    PreconditionError);  // no opponents
}
