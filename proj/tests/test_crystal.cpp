#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "osp/crystal.hpp"

using namespace osp;

namespace {

std::vector<int> mult_of(const Alphabet& A, const Column& c)
{
    std::vector<int> m(static_cast<std::size_t>(A.size()), 0);
    for (Letter x : c.entries)
        ++m[static_cast<std::size_t>(x.rank)];
    return m;
}

const Column& spin_of(const OspTableau& T) { return std::get<SpinColumn>(T.parts.front()).col; }

} // namespace

TEST(Crystal, LetterOperators)
{
    Alphabet A(Family::classical, 3, 1);
    EXPECT_EQ(f_letter(A, Letter{0}, Color{1}), Letter{1});
    EXPECT_EQ(e_letter(A, Letter{1}, Color{1}), Letter{0});
    EXPECT_FALSE(f_letter(A, Letter{1}, Color{1}));
    EXPECT_FALSE(e_letter(A, Letter{0}, Color{1}));
    EXPECT_THROW(f_letter(A, Letter{0}, Color{0}), std::invalid_argument);
    EXPECT_THROW(f_letter(A, Letter{0}, Color{9}), std::out_of_range);
}

TEST(Crystal, SingleColumnsMatchMultiplicityRules)
{
    struct Case {
        Alphabet A;
        Partition lam;
        int ell;
        std::optional<int> bound;
    };
    std::vector<Case> cases{{Alphabet(Family::classical, 4, 0), {}, 1, std::nullopt},
                            {Alphabet(Family::classical, 4, 0), {1}, 1, std::nullopt},
                            {Alphabet(Family::classical, 3, 2), {1}, 1, std::nullopt},
                            {Alphabet(Family::super, 2, 2), {}, 1, 6},
                            {Alphabet(Family::super, 3, 2), {1}, 1, 7}};
    for (auto& [A, lam, ell, bound] : cases) {
        auto plan = shape_plan(lam, ell, A);
        ASSERT_EQ(plan.num_parts(), 1);
        std::size_t moves = 0;
        for (auto& T : enumerate(A, plan, EnumerateOptions{bound, 1, {}})) {
            auto m = mult_of(A, spin_of(T));
            for (Color c : A.colors()) {
                auto f = f_osp(A, T, c);
                auto want_f = oracle::column_f(A, m, c.index);
                ASSERT_EQ(f.has_value(), want_f.has_value()) << "f_" << A.color_name(c) << " on " << osp_text(A, T);
                if (f) {
                    EXPECT_EQ(mult_of(A, spin_of(*f)), *want_f);
                    ++moves;
                }
                auto e = e_osp(A, T, c);
                auto want_e = oracle::column_e(A, m, c.index);
                ASSERT_EQ(e.has_value(), want_e.has_value()) << "e_" << A.color_name(c) << " on " << osp_text(A, T);
                if (e)
                    EXPECT_EQ(mult_of(A, spin_of(*e)), *want_e);
            }
        }
        EXPECT_GT(moves, 0u);
    }
}

TEST(Crystal, StringLengthsGiveTheCorootPairing)
{
    for (auto [rank, lam, ell] : std::vector<std::tuple<int, Partition, int>>{
             {3, {1}, 1}, {4, {1, 1}, 2}, {4, {2}, 3}, {3, {2, 1}, 3}, {4, {}, 2}}) {
        Alphabet A(Family::classical, rank, 0);
        auto plan = shape_plan(lam, ell, A);
        for (auto& T : enumerate(A, plan)) {
            auto w = weight(A, T);
            for (Color c : A.colors())
                EXPECT_EQ(phi(A, T, c) - epsilon(A, T, c), A.coroot_pairing(c, w)) << A.color_name(c) << " on " << osp_text(A, T);
        }
    }
}

TEST(Crystal, WordOperatorsAreInverse)
{
    std::mt19937 rng(23);
    for (auto fam : {Family::classical, Family::super}) {
        Alphabet A(fam, 3, 2);
        std::uniform_int_distribution<int> pick(0, A.size() - 1);
        std::size_t acted = 0;
        for (int trial = 0; trial < 1500; ++trial) {
            std::vector<Letter> w(static_cast<std::size_t>(1 + trial % 9));
            for (auto& x : w)
                x = Letter{pick(rng)};
            for (auto reading : {Reading::word, Reading::reverse_word})
                for (Color c : A.colors()) {
                    if (Alphabet::is_spin(c))
                        continue;
                    if (auto f = f_word(A, w, c, reading)) {
                        EXPECT_EQ(e_word(A, *f, c, reading), w);
                        ++acted;
                    }
                    if (auto e = e_word(A, w, c, reading))
                        EXPECT_EQ(f_word(A, *e, c, reading), w);
                }
        }
        EXPECT_GT(acted, 1000u);
    }
}

TEST(Crystal, EdgesMoveWeightBySimpleRoots)
{
    Alphabet A(Family::super, 2, 2);
    auto g = explore(A, shape_plan({1, 1}, 2, A), ExploreOptions{6, 1, {}});
    ASSERT_FALSE(g.edges.empty());
    for (auto& e : g.edges)
        EXPECT_EQ(g.weights[e.dst], g.weights[e.src] - A.simple_root(e.color));
    EXPECT_TRUE(g.escapes.empty());
    EXPECT_FALSE(g.truncated.empty());
}

TEST(Crystal, ExploreIsThreadInvariant)
{
    Alphabet A(Family::classical, 4, 0);
    auto plan = shape_plan({1, 1}, 2, A);
    auto one = explore(A, plan);
    auto three = explore(A, plan, ExploreOptions{std::nullopt, 3, {}});
    EXPECT_EQ(one.vertices, three.vertices);
    auto key = [](const CrystalGraph& g) {
        std::set<std::tuple<std::size_t, int, std::size_t>> s;
        for (auto& e : g.edges)
            s.insert({e.src, e.color.index, e.dst});
        return s;
    };
    EXPECT_EQ(key(one), key(three));
    EXPECT_EQ(one.sources, three.sources);
    EXPECT_EQ(one.components, 1);
    EXPECT_EQ(one.vertices.size(), 28u);
}

TEST(Crystal, RaisingReachesTheHighestElement)
{
    Alphabet A(Family::classical, 3, 0);
    auto plan = shape_plan({2, 1}, 3, A);
    auto g = explore(A, plan);
    auto h = g.find(highest_weight_element(A, plan));
    ASSERT_TRUE(h);
    auto seen = reaches_by_raising(g, *h);
    EXPECT_EQ(std::count(seen.begin(), seen.end(), true), static_cast<long>(g.vertices.size()));
}

TEST(Crystal, SpinColumnOperators)
{
    SpinColumn empty{};
    auto f = f_spin_bar(empty);
    ASSERT_TRUE(f);
    EXPECT_EQ(f->col, (Column{Letter{0}, Letter{1}}));
    EXPECT_EQ(e_spin_bar(*f), empty);
    EXPECT_FALSE(f_spin_bar(*f));
    EXPECT_FALSE(e_spin_bar(SpinColumn{Column{Letter{1}, Letter{2}}}));
}

TEST(Crystal, PsiPlusRoundTrip)
{
    Alphabet A(Family::super, 2, 2);
    for (auto& c : all_columns(A, 4)) {
        auto m = psi_plus_inverse(A, SpinColumn{c});
        EXPECT_EQ(psi_plus(A, m).col, c);
    }
    EXPECT_THROW(psi_plus(A, BiwordMatrix{{{}, {}}}), std::invalid_argument);
    EXPECT_THROW(psi_plus(A, BiwordMatrix{{{Letter{0}, Letter{0}}}}), std::invalid_argument);
}
