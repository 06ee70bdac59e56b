#include <gtest/gtest.h>

#include <random>

#include "osp/crystal.hpp"
#include "osp/osptab.hpp"

using namespace osp;

namespace {

Column col(std::initializer_list<int> ranks)
{
    Column c;
    for (int r : ranks)
        c.entries.push_back(Letter{r});
    return c;
}

Column named(const Alphabet& A, std::initializer_list<const char*> names)
{
    Column c;
    for (auto n : names)
        c.entries.push_back(A.parse(n));
    return c;
}

// A pair with unknown offset: the first a that classifies.
std::optional<OspPair> any_offset(const Alphabet& A, const Column& L, const Column& R)
{
    for (int a = 0; a <= static_cast<int>(L.height()); ++a)
        if (auto c = classify_pair(A, L, R, a))
            return c.value();
    return std::nullopt;
}

struct WorkedExample : ::testing::Test {
    Alphabet A{Family::super, 4, 8};
    OspPair T = classify_pair(A, col({0, 3, 4, 5, 5}), col({1, 2, 5, 6}), 3).value();
};

} // namespace

TEST_F(WorkedExample, SignatureAndResidue)
{
    EXPECT_EQ(sigma_pair(A, T.L(), T.R()), (Signature{2, 1}));
    EXPECT_EQ(T.residue, 1);
    EXPECT_EQ(T.t.shape(), (SkewTwoColShape{3, 2, 2}));
}

TEST_F(WorkedExample, Splits)
{
    auto [ls, rt] = lr_split(A, T);
    EXPECT_EQ(ls, named(A, {"b4", "1/2", "3/2"}));
    EXPECT_EQ(rt, named(A, {"b3", "b2", "b1", "3/2", "3/2", "5/2"}));
    auto [lstar, rstar] = star_split(A, T);
    EXPECT_EQ(lstar, named(A, {"b4", "b2", "b1", "1/2", "3/2", "3/2"}));
    EXPECT_EQ(rstar, named(A, {"b3", "3/2", "5/2"}));
}

TEST_F(WorkedExample, SlidingAgreesWithOperators)
{
    EXPECT_EQ(lr_split_sliding(A, T), lr_split(A, T));
    EXPECT_EQ(star_split_sliding(A, T), star_split(A, T));
}

TEST_F(WorkedExample, AdmissibleOverBothRightNeighbours)
{
    auto S1 = any_offset(A, col({3, 6, 7, 8}), col({2, 3, 7, 8}));
    ASSERT_TRUE(S1);
    auto S2 = classify_pair(A, col({1, 2, 3, 4, 5, 6, 7}), col({2, 3, 4, 5, 7, 8}), 1);
    ASSERT_TRUE(S2) << S2.error();
    EXPECT_EQ(S2.value().residue, 0);
    EXPECT_TRUE(is_admissible(A, Part{T}, Part{*S1}));
    EXPECT_TRUE(is_admissible(A, Part{T}, Part{S2.value()}));
    EXPECT_TRUE(is_admissible_sigma(A, Part{T}, Part{*S1}));
    EXPECT_TRUE(is_admissible_sigma(A, Part{T}, Part{S2.value()}));
}

TEST(Splits, SlidingAgreesOnAllSmallPairs)
{
    for (auto fam : {Family::classical, Family::super}) {
        Alphabet A(fam, 3, 2);
        std::size_t seen = 0;
        for (int a = 0; a <= 3; ++a)
            for (auto& T : pair_candidates(A, a, 7)) {
                ASSERT_EQ(lr_split_sliding(A, T), lr_split(A, T)) << part_text(A, T);
                if (T.residue == 1)
                    ASSERT_EQ(star_split_sliding(A, T), star_split(A, T)) << part_text(A, T);
                ++seen;
            }
        EXPECT_GT(seen, 400u);
    }
}

TEST(Splits, StarSplitNeedsResidueOne)
{
    Alphabet A(Family::classical, 2, 0);
    auto T = classify_pair(A, Column{}, Column{}, 0).value();
    EXPECT_EQ(T.residue, 0);
    EXPECT_THROW(star_split(A, T), std::invalid_argument);
}

TEST(Classify, RejectsOddBAndC)
{
    Alphabet A(Family::classical, 3, 0);
    EXPECT_FALSE(classify_pair(A, col({0}), Column{}, 0));
    EXPECT_FALSE(classify_pair(A, Column{}, col({0}), 0));
    EXPECT_TRUE(classify_pair(A, col({0}), Column{}, 1));
    EXPECT_FALSE(classify_pair(A, col({1, 0}), Column{}, 2));
    EXPECT_FALSE(classify_bar(A, TwoColumnTableau{col({0}), col({1}), 1}));
    EXPECT_FALSE(classify_bar(A, TwoColumnTableau{col({0, 1}), col({1}), 0}));
    EXPECT_TRUE(classify_bar(A, TwoColumnTableau{col({0}), col({0}), 0}));
    EXPECT_FALSE(classify_bar(A, TwoColumnTableau{col({0, 1, 2}), col({0}), 0}));
}

TEST(ShapePlan, Values)
{
    auto p = shape_plan({2, 1}, 3);
    EXPECT_EQ(p.sign, SpinSign::minus);
    EXPECT_EQ(p.q, 0);
    EXPECT_EQ(p.r, 1);
    EXPECT_EQ(p.M, 1);
    EXPECT_EQ(p.L, 1);
    EXPECT_EQ(p.heights, std::vector<int>{2});

    p = shape_plan({1, 1}, 2);
    EXPECT_EQ(p.sign, SpinSign::plus);
    EXPECT_EQ((std::vector<int>{p.q, p.r, p.M, p.L}), (std::vector<int>{0, 0, 1, 1}));
    EXPECT_EQ(p.heights, std::vector<int>{2});

    p = shape_plan({}, 1);
    EXPECT_EQ((std::vector<int>{p.q, p.r, p.M, p.L}), (std::vector<int>{0, 1, 0, 0}));
    EXPECT_EQ(p.kind(0), PartKind::spin);

    p = shape_plan({2}, 3);
    EXPECT_EQ(p.sign, SpinSign::minus);
    EXPECT_EQ(p.heights, std::vector<int>{1});

    p = shape_plan({}, 4);
    EXPECT_EQ((std::vector<int>{p.q, p.r, p.M, p.L}), (std::vector<int>{2, 0, 0, 2}));
    EXPECT_EQ(p.kind(1), PartKind::pair);

    p = shape_plan({3}, 4);
    EXPECT_EQ(p.sign, SpinSign::minus);
    EXPECT_EQ((std::vector<int>{p.q, p.r, p.M, p.L}), (std::vector<int>{1, 0, 1, 2}));
    EXPECT_EQ(p.kind(1), PartKind::bar);
}

TEST(ShapePlan, BoxCountMatchesLambda)
{
    // Sum of offsets equals |lambda| for + plans.
    for (auto [lam, ell] : std::vector<std::pair<Partition, int>>{{{1}, 2}, {{2, 1}, 4}, {{3, 2, 2}, 7}, {{1, 1, 1}, 3}}) {
        auto p = shape_plan(lam, ell);
        ASSERT_EQ(p.sign, SpinSign::plus);
        int s = 0;
        for (int h : p.heights)
            s += h;
        EXPECT_EQ(s, size_of(lam));
    }
}

TEST(ShapePlan, Errors)
{
    EXPECT_THROW(shape_plan({1, 2}, 5), std::invalid_argument);
    EXPECT_THROW(shape_plan({3}, 2), std::invalid_argument);
    EXPECT_THROW(shape_plan({}, -1), std::invalid_argument);
    Alphabet S(Family::super, 2, 1);
    EXPECT_THROW(shape_plan({2, 2, 2}, 4, S), std::invalid_argument);
    EXPECT_NO_THROW(shape_plan({2, 2, 1}, 4, S));
}

TEST(Validate, ReportsTheFirstProblem)
{
    Alphabet A(Family::classical, 3, 0);
    auto plan = shape_plan({1, 1}, 2, A);
    EXPECT_FALSE(validate(A, plan, {}));
    EXPECT_FALSE(validate(A, plan, {SpinColumn{}}));
    auto wrong_offset = validate(A, plan, {OspPair{TwoColumnTableau{col({0}), Column{}, 1}, 0}});
    ASSERT_FALSE(wrong_offset);
    EXPECT_NE(wrong_offset.error().find("offset"), std::string::npos);
    auto good = validate(A, plan, {OspPair{TwoColumnTableau{col({0, 1}), Column{}, 2}, 0}});
    ASSERT_TRUE(good) << good.error();
    EXPECT_THROW(validate(A, plan, {}).value(), std::invalid_argument);

    auto spin = shape_plan({}, 1, A);
    EXPECT_FALSE(validate(A, spin, {SpinColumn{col({0})}}));
    EXPECT_TRUE(validate(A, spin, {SpinColumn{col({0, 1})}}));
}

TEST(Validate, ChecksAdmissibilityBetweenNeighbours)
{
    Alphabet A(Family::classical, 3, 0);
    auto plan = shape_plan({}, 2, A);
    ASSERT_EQ(plan.num_parts(), 1);
    auto q2 = shape_plan({}, 4, A);
    ASSERT_EQ(q2.num_parts(), 2);
    auto empty = OspPair{TwoColumnTableau{}, 0};
    auto tall = OspPair{TwoColumnTableau{col({0, 1}), col({0, 1}), 0}, 0};
    // T_2 to the left of T_1: a taller right column on T_2 than the left column of T_1 is not allowed.
    EXPECT_FALSE(validate(A, q2, {empty, tall}));
    EXPECT_TRUE(validate(A, q2, {tall, empty}));
}

TEST(Enumerate, DeterministicAndThreadInvariant)
{
    for (auto fam : {Family::classical, Family::super}) {
        Alphabet A(fam, 2, 1);
        auto plan = shape_plan({1, 1}, 2, A);
        auto one = enumerate(A, plan, EnumerateOptions{6, 1, {}});
        auto again = enumerate(A, plan, EnumerateOptions{6, 1, {}});
        auto four = enumerate(A, plan, EnumerateOptions{6, 4, {}});
        EXPECT_EQ(one, again);
        EXPECT_EQ(one, four);
        EXPECT_TRUE(std::is_sorted(one.begin(), one.end(), canonical_less));
        std::set<std::vector<std::vector<int>>> keys;
        for (auto& T : one) {
            EXPECT_TRUE(validate(A, plan, T.parts));
            EXPECT_LE(T.total_boxes(), 6u);
            keys.insert(column_key(T));
        }
        EXPECT_EQ(keys.size(), one.size());
    }
}

TEST(Enumerate, SuperNeedsBound)
{
    Alphabet S(Family::super, 2, 2);
    EXPECT_THROW(enumerate(S, shape_plan({}, 1, S)), std::invalid_argument);
    EXPECT_THROW(enumerate(S, shape_plan({}, 1, S), EnumerateOptions{-1, 1, {}}), std::invalid_argument);
}

TEST(Enumerate, BoundIsMonotone)
{
    Alphabet S(Family::super, 2, 2);
    auto plan = shape_plan({1}, 1, S);
    std::size_t prev = 0;
    for (int b = 0; b <= 6; ++b) {
        auto n = enumerate(S, plan, EnumerateOptions{b, 1, {}}).size();
        EXPECT_GE(n, prev);
        prev = n;
    }
    EXPECT_EQ(prev, 36u);
}

TEST(HighestWeight, ElementHasTheHighestWeight)
{
    struct Case {
        Alphabet A;
        Partition lam;
        int ell;
    };
    std::vector<Case> cases{{Alphabet(Family::classical, 4, 0), {}, 1},     {Alphabet(Family::classical, 4, 0), {2, 1}, 3},
                            {Alphabet(Family::classical, 3, 0), {1, 1}, 2}, {Alphabet(Family::classical, 4, 0), {}, 4},
                            {Alphabet(Family::super, 2, 2), {1, 1}, 2},     {Alphabet(Family::super, 2, 2), {2, 1}, 3},
                            {Alphabet(Family::super, 2, 2), {3, 2, 1}, 6}};
    for (auto& [A, lam, ell] : cases) {
        auto plan = shape_plan(lam, ell, A);
        auto H = highest_weight_element(A, plan);
        EXPECT_EQ(weight(A, H), A.highest_weight(lam, ell));
        for (Color c : A.colors())
            EXPECT_FALSE(e_osp(A, H, c)) << A.color_name(c) << " on " << osp_text(A, H);
    }
}

TEST(Admissibility, RejectsIllegalKindCombinations)
{
    Alphabet A(Family::classical, 2, 0);
    Part spin = SpinColumn{};
    Part odd_spin = SpinColumn{col({0})};
    Part pair = OspPair{TwoColumnTableau{}, 0};
    Part bar = BarPair{TwoColumnTableau{col({0}), col({0}), 0}};
    EXPECT_THROW(is_admissible(A, spin, pair), std::invalid_argument);
    EXPECT_THROW(is_admissible(A, bar, pair), std::invalid_argument);
    EXPECT_THROW(is_admissible(A, bar, spin), std::invalid_argument);
    EXPECT_NO_THROW(is_admissible(A, bar, odd_spin));
    Part high = OspPair{TwoColumnTableau{col({0}), Column{}, 1}, 0};
    // A bar sits at a' = 1, like an odd spin column.
    EXPECT_THROW(is_admissible(A, pair, bar), std::invalid_argument);
    EXPECT_NO_THROW(is_admissible(A, high, bar));
    EXPECT_THROW(is_admissible(A, pair, high), std::invalid_argument);
}

TEST(Admissibility, LiteralAndSignatureFormsAgree)
{
    std::mt19937 rng(21);
    for (auto fam : {Family::classical, Family::super}) {
        Alphabet A(fam, 3, 2);
        std::vector<std::vector<OspPair>> by_a;
        for (int a = 0; a <= 2; ++a)
            by_a.push_back(pair_candidates(A, a, 6));
        std::size_t yes = 0, total = 0;
        for (int t = 0; t < 4000; ++t) {
            std::uniform_int_distribution<int> pa(0, 2);
            int a1 = pa(rng), a2 = pa(rng);
            if (a1 < a2)
                std::swap(a1, a2);
            auto& L = by_a[static_cast<std::size_t>(a1)];
            auto& R = by_a[static_cast<std::size_t>(a2)];
            std::uniform_int_distribution<std::size_t> il(0, L.size() - 1), ir(0, R.size() - 1);
            Part T = L[il(rng)], S = R[ir(rng)];
            bool lit = is_admissible(A, T, S);
            ASSERT_EQ(lit, is_admissible_sigma(A, T, S)) << part_text(A, T) << " over " << part_text(A, S);
            yes += lit;
            ++total;
        }
        EXPECT_GT(yes, 0u);
        EXPECT_LT(yes, total);
    }
}

TEST(Admissibility, StrictHeightMutationShrinksTheSet)
{
    Alphabet A(Family::classical, 4, 0);
    auto plan = shape_plan({2}, 3, A);
    auto normal = enumerate(A, plan);
    auto mutated = enumerate(A, plan, EnumerateOptions{std::nullopt, 1, AdmissibilityOptions{true}});
    EXPECT_EQ(normal.size(), 224u);
    EXPECT_LT(mutated.size(), normal.size());
}

TEST(Text, OneLineForm)
{
    Alphabet A(Family::super, 2, 2);
    auto plan = shape_plan({1, 1}, 2, A);
    auto H = highest_weight_element(A, plan);
    EXPECT_EQ(osp_text(A, H), "[b2 b1][]a=2");
    EXPECT_EQ(part_text(A, SpinColumn{col({0, 2})}), "[b2 1/2]");
}
