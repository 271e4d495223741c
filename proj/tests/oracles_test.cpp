#include <gtest/gtest.h>

#include <random>

#include "ivq/oracles.hpp"
#include "support/helpers.hpp"

using namespace ivq;
using ivq::testing::A;

namespace {

const TypeSet kOpen(TypeSet::kOpen);
const TypeSet kPoints(TypeSet::kPoint);

// Independent statement of the halving rule: a window of the new length
// centred on the hidden value, slid inside the current area with a margin
// of one hundredth of the new length.
Area expected_halve(const Rational& shrink, const Rational& hidden, const Area& current) {
    const auto len = shrink * current.length();
    const auto margin = len / Rational(100);
    auto lo = hidden - len / Rational(2);
    lo = std::max(lo, current.lo() + margin);
    lo = std::min(lo, current.hi() - margin - len);
    return Area::open(lo, lo + len);
}

}  // namespace

TEST(GroundTruthRespond, ExactReturnsHiddenPoint) {
    EXPECT_EQ(ground_truth_respond(ExactPolicy{}, kPoints, 3, A("(2,6)"), 1), A("3"));
}

TEST(GroundTruthRespond, HalveCentresOnHiddenValue) {
    EXPECT_EQ(ground_truth_respond(HalvePolicy{}, kOpen, 3, A("(0,10)"), 1), A("(1/2,11/2)"));
}

TEST(GroundTruthRespond, HalveClipsWithMarginOfOneHundredthOfLength) {
    const auto r = ground_truth_respond(HalvePolicy{}, kOpen, Rational(1, 2), A("(0,10)"), 1);
    EXPECT_EQ(r, A("(1/20,101/20)"));
    EXPECT_TRUE(contains(A("(0,10)"), r));
    EXPECT_TRUE(r.contains_value(Rational(1, 2)));
}

TEST(GroundTruthRespond, PointOnlyReturnsIgnorePolicy) {
    EXPECT_EQ(ground_truth_respond(HalvePolicy{}, kPoints, 4, A("(2,6)"), 1), A("4"));
}

TEST(GroundTruthRespond, RejectsBadInputs) {
    EXPECT_THROW(ground_truth_respond(ExactPolicy{}, kOpen, 3, A("(2,6)"), 1), std::invalid_argument);
    EXPECT_THROW(ground_truth_respond(ExactPolicy{}, kPoints, 7, A("(2,6)"), 1), std::invalid_argument);
    EXPECT_THROW(ground_truth_respond(HalvePolicy{Rational(1)}, kOpen, 3, A("(2,6)"), 1), std::invalid_argument);
    EXPECT_THROW(ground_truth_respond(ExactPolicy{}, kPoints, 3, A("3"), 1), OracleRejected);
}

TEST(GroundTruthRespond, HalveChainsStaySoundAndShrink) {
    std::mt19937_64 rng(5);
    const std::vector<TypeSet> return_sets = {TypeSet::parse("O"), TypeSet::parse("C"), TypeSet::parse("OC"),
                                              TypeSet::parse("OP")};
    for (int round = 0; round < 300; ++round) {
        const std::int64_t lo = static_cast<std::int64_t>(rng() % 20);
        const std::int64_t width = 2 + static_cast<std::int64_t>(rng() % 10);
        Area current = Area::open(lo, lo + width);
        const Rational hidden(lo * 97 + 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(width * 97 - 1)),
                              97);
        const Rational shrink(1 + static_cast<std::int64_t>(rng() % 7), 8);
        const auto returns = return_sets[rng() % return_sets.size()];
        const ModelSpec spec{TypeSet::parse("OC"), returns};
        for (std::size_t count = 1; !current.is_point() && current.length() > Rational(1, std::int64_t{1} << 20); ++count) {
            const auto next = ground_truth_respond(HalvePolicy{shrink}, returns, hidden, current, count);
            ASSERT_FALSE(validate_response(spec, current, next).has_value())
                << current.str() << " -> " << next.str();
            ASSERT_TRUE(next.contains_value(hidden));
            ASSERT_LT(next.length(), current.length());
            current = next;
        }
    }
}

TEST(GroundTruthRespond, HalveMatchesIndependentFormulaAwayFromEdges) {
    for (std::int64_t h = 1; h < 40; ++h) {
        const Rational hidden(h, 4);
        const auto current = A("(0,10)");
        for (const Rational shrink : {Rational(1, 2), Rational(1, 4), Rational(3, 4)}) {
            const auto got = ground_truth_respond(HalvePolicy{shrink}, kOpen, hidden, current, 1);
            const auto want = expected_halve(shrink, hidden, current);
            if (want.contains_value(hidden)) EXPECT_EQ(got, want) << hidden << " " << shrink;
        }
    }
}

TEST(GroundTruthOracle, NamesAndHints) {
    GroundTruthOracle exact(ExactPolicy{}, kPoints, {3});
    GroundTruthOracle halve(HalvePolicy{Rational(1, 8)}, kOpen, {3});
    EXPECT_EQ(exact.name(), "exact");
    EXPECT_EQ(halve.name(), "halve:1/8");
    EXPECT_EQ(exact.kind(), OracleKind::GroundTruth);
    EXPECT_GT(halve.refinement_hint(), exact.refinement_hint());
    EXPECT_THROW(exact.respond(1, 1, A("(2,6)")), OracleRejected);
}

TEST(ScriptedOracle, ReplaysPositionallyAndRunsDry) {
    ScriptedOracle script({{0, {A("[8,10]"), A("9")}}});
    EXPECT_EQ(script.respond(0, 1, A("[3,17]")), A("[8,10]"));
    EXPECT_EQ(script.respond(0, 2, A("[8,10]")), A("9"));
    EXPECT_THROW(script.respond(0, 3, A("[8,10]")), OracleExhausted);
    EXPECT_THROW(script.respond(1, 1, A("[14,19]")), OracleExhausted);
    EXPECT_THROW(script.respond(0, 1, A("4")), OracleRejected);
    EXPECT_EQ(script.refinement_hint(), 2u);
}

TEST(ReplayDeterminism, ClonesAnswerIdenticalSequences) {
    std::vector<std::unique_ptr<Oracle>> oracles;
    oracles.push_back(std::make_unique<GroundTruthOracle>(HalvePolicy{}, kOpen, std::vector<Rational>{3, 4, 5}));
    oracles.push_back(std::make_unique<MinTightAdversary>(2, 0));
    oracles.push_back(std::make_unique<CpAnomalyAdversary>(3));
    oracles.push_back(opo_counterexample_oracle());
    const std::vector<std::size_t> sequence = {0, 1, 0, 2, 1};
    for (const auto& original : oracles) {
        auto a = original->clone();
        auto b = original->clone();
        AreaVector areas_a;
        AreaVector areas_b;
        if (original->name() == "min-tight") {
            areas_a = {A("(1,5)"), A("(3,7)"), A("(3,7)")};
        } else if (original->name() == "cp-anomaly") {
            areas_a = AreaVector(3, A("[1,3]"));
        } else if (original->name() == "opo-counter") {
            areas_a = {A("(2,20)"), A("(19,21)"), A("(19,21)")};
        } else {
            areas_a = {A("(2,6)"), A("(2,6)"), A("(2,6)")};
        }
        areas_b = areas_a;
        std::vector<std::size_t> counts(3, 0);
        for (auto i : sequence) {
            if (original->name() == "opo-counter" && i == 2) continue;
            if (areas_a[i].is_point()) continue;
            ++counts[i];
            areas_a[i] = a->respond(i, counts[i], areas_a[i]);
            areas_b[i] = b->respond(i, counts[i], areas_b[i]);
            ASSERT_EQ(areas_a[i], areas_b[i]) << original->name();
        }
    }
}

TEST(MinTightAdversary, Examples) {
    MinTightAdversary adversary(3, 0);
    EXPECT_EQ(adversary.respond(0, 1, A("(1,5)")), A("(13/12,5)"));
    EXPECT_EQ(adversary.respond(2, 1, A("(3,7)")), A("(6,7)"));
    EXPECT_EQ(adversary.branch(), MinTightAdversary::Branch::Undecided);

    MinTightAdversary many_s(3, 0);
    EXPECT_EQ(many_s.respond(1, 1, A("(3,7)")), A("(6,7)"));
    EXPECT_EQ(many_s.respond(2, 1, A("(3,7)")), A("(6,7)"));
    EXPECT_EQ(many_s.respond(3, 1, A("(3,7)")), A("(3,4)"));
    EXPECT_EQ(many_s.branch(), MinTightAdversary::Branch::ManyS);
}

TEST(MinTightAdversary, EpsilonStepsOnA0) {
    MinTightAdversary adversary(2, 2);
    EXPECT_EQ(adversary.epsilon(), Rational(1, 8));
    Area a0 = A("(1,5)");
    for (std::size_t i = 1; i <= 2; ++i) {
        a0 = adversary.respond(2, i, a0);
        EXPECT_EQ(a0, Area::open(Rational(1) + Rational(static_cast<std::int64_t>(i), 8), 5));
    }
    EXPECT_EQ(adversary.branch(), MinTightAdversary::Branch::ManyA0);
    EXPECT_EQ(adversary.fixture_opt(), 2u);
}

TEST(MinTightAdversary, RejectsQueriesOutsideTheFixture) {
    MinTightAdversary adversary(2, 0);
    EXPECT_THROW(adversary.respond(3, 1, A("(3,7)")), OracleRejected);
    EXPECT_THROW(adversary.respond(1, 1, A("(3,8)")), OracleRejected);
    EXPECT_THROW(MinTightAdversary(2, 1), std::invalid_argument);
}

TEST(MinTightAdversary, OptFacingScriptFollowsTheBranch) {
    MinTightAdversary many_s(3, 0);
    for (std::size_t i = 1; i <= 3; ++i) many_s.respond(i, 1, A("(3,7)"));
    auto facing = many_s.opt_facing();
    EXPECT_EQ(facing->kind(), OracleKind::Scripted);
    Area a0 = A("(1,5)");
    for (std::size_t c = 1; c <= 3; ++c) a0 = facing->respond(0, c, a0);
    EXPECT_EQ(a0, A("(2,3)"));

    MinTightAdversary many_a0(3, 0);
    auto facing_a0 = many_a0.opt_facing();
    EXPECT_EQ(facing_a0->respond(1, 1, A("(3,7)")), A("(6,7)"));
}

TEST(KminPointAdversary, Examples) {
    KminPointAdversary points(3, true);
    EXPECT_EQ(points.respond(0, 1, A("(0,5)")), A("1"));
    EXPECT_EQ(points.respond(1, 1, A("(0,5)")), A("1"));
    EXPECT_EQ(points.respond(2, 1, A("(0,5)")), A("4"));
    EXPECT_EQ(points.designated(), 2u);

    KminPointAdversary intervals(3, false);
    intervals.respond(2, 1, A("(0,5)"));
    intervals.respond(0, 1, A("(0,5)"));
    EXPECT_EQ(intervals.respond(1, 1, A("(0,5)")), A("(7/2,9/2)"));
    EXPECT_EQ(intervals.designated(), 1u);

    EXPECT_THROW(points.respond(3, 1, A("3")), OracleRejected);
}

TEST(KminPointAdversary, OptFacingQueriesOnlyTheDesignatedArea) {
    KminPointAdversary adversary(2, true);
    adversary.respond(1, 1, A("(0,5)"));
    adversary.respond(0, 1, A("(0,5)"));
    auto facing = adversary.opt_facing();
    EXPECT_EQ(facing->respond(0, 1, A("(0,5)")), A("4"));
    EXPECT_EQ(facing->respond(1, 1, A("(0,5)")), A("1"));
    EXPECT_EQ(adversary.fixture_opt(), 1u);
}

TEST(CpAnomalyAdversary, Examples) {
    CpAnomalyAdversary adversary(4);
    EXPECT_EQ(adversary.respond(3, 1, A("[1,3]")), A("2"));
    EXPECT_EQ(adversary.respond(0, 1, A("[1,3]")), A("2"));
    EXPECT_EQ(adversary.respond(2, 1, A("[1,3]")), A("2"));
    EXPECT_EQ(adversary.respond(1, 1, A("[1,3]")), A("1"));
    EXPECT_EQ(adversary.designated(), 1u);
    auto facing = adversary.opt_facing();
    EXPECT_EQ(facing->respond(1, 1, A("[1,3]")), A("1"));
    EXPECT_EQ(facing->respond(0, 1, A("[1,3]")), A("2"));
}

TEST(OpoCounterexample, Examples) {
    auto oracle = opo_counterexample_oracle();
    EXPECT_EQ(oracle->respond(0, 1, A("(2,20)")), A("(37/2,20)"));
    EXPECT_EQ(oracle->respond(1, 1, A("(19,21)")), A("(41/2,21)"));
    EXPECT_EQ(oracle->respond(0, 5, A("(2,20)")), Area::open(Rational(19) - Rational(1, 6), 20));
    const auto spec = opo_counterexample_instance().model;
    Area i1 = A("(2,20)");
    for (std::size_t c = 1; c <= 6; ++c) {
        const auto next = oracle->respond(0, c, i1);
        ASSERT_FALSE(validate_response(spec, i1, next).has_value()) << c;
        i1 = next;
    }
}

TEST(Fixtures, InstancesMatchTheirAdversaries) {
    EXPECT_EQ(min_tight_instance(3).areas.size(), 4u);
    EXPECT_EQ(min_tight_instance(3, true).areas.back(), A("(1,5)"));
    const auto kp = kmin_point_instance(2);
    EXPECT_EQ(kp.areas, (AreaVector{A("(0,5)"), A("(0,5)"), A("3"), A("3")}));
    EXPECT_EQ(kp.model.str(), "OP-P");
    EXPECT_EQ(kmin_point_instance(2, false).model.str(), "OP-O");
    EXPECT_EQ(cp_anomaly_instance(3).areas, AreaVector(3, A("[1,3]")));
    EXPECT_EQ(opo_counterexample_instance().areas, (AreaVector{A("(2,20)"), A("(19,21)")}));
    for (const auto& inst : {min_tight_instance(2), kp, cp_anomaly_instance(3), opo_counterexample_instance()}) {
        EXPECT_TRUE(validate_instance(inst).ok());
    }
}

TEST(MiddleHalf, KeepsTheCentralHalf) {
    EXPECT_EQ(middle_half(A("(0,8)"), kOpen), A("(2,6)"));
    EXPECT_EQ(middle_half(A("(0,8)"), kPoints), A("4"));
    EXPECT_THROW(middle_half(A("3"), kOpen), OracleRejected);
}
