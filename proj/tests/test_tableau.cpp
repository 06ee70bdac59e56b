#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "osp/character.hpp"

using namespace osp;

namespace {

std::map<std::vector<int>, long long> weights_of(const Alphabet& A, const std::vector<SkewTableau>& ts)
{
    std::map<std::vector<int>, long long> out;
    for (auto& t : ts)
        ++out[weight_of(A, t).mult];
    return out;
}

BiwordMatrix random_matrix(const Alphabet& A, int ell, std::mt19937& rng)
{
    BiwordMatrix m;
    m.cols.resize(static_cast<std::size_t>(ell));
    std::uniform_int_distribution<int> mult(0, 2);
    for (auto& col : m.cols)
        for (Letter x : A.letters()) {
            int k = A.is_odd(x) ? mult(rng) : mult(rng) % 2;
            for (int t = 0; t < k; ++t)
                col.push_back(x);
        }
    return m;
}

} // namespace

TEST(Tableau, SemistandardCountsMatchBruteForce)
{
    struct Case {
        Alphabet A;
        Partition mu;
    };
    std::vector<Case> cases{{Alphabet(Family::classical, 3, 0), {2, 1}},   {Alphabet(Family::classical, 2, 2), {2, 2}},
                            {Alphabet(Family::classical, 4, 0), {1, 1, 1}}, {Alphabet(Family::super, 2, 1), {2, 1}},
                            {Alphabet(Family::super, 2, 2), {3, 1}},       {Alphabet(Family::super, 2, 2), {2, 2, 1}}};
    for (auto& [A, mu] : cases) {
        auto ours = semistandard_tableaux(A, mu, size_of(mu));
        for (auto& t : ours)
            EXPECT_TRUE(is_semistandard(A, t));
        EXPECT_EQ(weights_of(A, ours), oracle::brute_sst(A, mu));
    }
}

TEST(Tableau, SuperNeedsDegreeBound)
{
    Alphabet S(Family::super, 2, 1);
    EXPECT_THROW(semistandard_tableaux(S, {1}), std::invalid_argument);
    EXPECT_TRUE(semistandard_tableaux(S, {2, 1}, 2).empty());
    EXPECT_EQ(semistandard_tableaux(S, {}, 0).size(), 1u);
}

TEST(Tableau, ColumnsRoundTrip)
{
    Alphabet A(Family::super, 2, 2);
    for (auto& t : semistandard_tableaux(A, {3, 2, 1}, 6)) {
        auto cols = columns_of(t);
        EXPECT_EQ(cols.size(), 3u);
        EXPECT_EQ(from_columns(cols), t);
    }
}

TEST(Tableau, RowsOkRespectsOffset)
{
    Alphabet A(Family::classical, 3, 0);
    Column left{Letter{0}, Letter{1}, Letter{2}};
    Column right{Letter{1}};
    // Offset 0 compares the bottoms: 2 left of 1 fails.
    EXPECT_FALSE(rows_ok(A, left, right, 0));
    // Offset 1 compares left(2) = 1 with right(1) = 1, allowed for an even letter.
    EXPECT_TRUE(rows_ok(A, left, right, 1));
    EXPECT_TRUE(rows_ok(A, left, right, 3));
}

TEST(Tableau, TwoColumnShape)
{
    TwoColumnTableau t{Column{Letter{0}, Letter{1}, Letter{2}, Letter{3}}, Column{Letter{1}, Letter{2}}, 1};
    auto s = t.shape();
    EXPECT_EQ(s, (SkewTwoColShape{1, -1, 3}));
    EXPECT_FALSE(t.shape_ok());
    t.offset = 2;
    EXPECT_EQ(t.shape(), (SkewTwoColShape{2, 0, 2}));
    EXPECT_TRUE(t.shape_ok());
}

TEST(Tableau, BumpRules)
{
    Alphabet A(Family::super, 2, 2);
    Letter even{1}, odd{2};
    EXPECT_TRUE(bumps(A, even, even));
    EXPECT_FALSE(bumps(A, odd, odd));
    EXPECT_TRUE(bumps(A, odd, Letter{3}));
    EXPECT_FALSE(bumps(A, odd, Letter{0}));
}

TEST(Tableau, ColumnInsertionKeepsSemistandard)
{
    std::mt19937 rng(7);
    for (auto fam : {Family::classical, Family::super}) {
        Alphabet A(fam, 2, 2);
        std::uniform_int_distribution<int> pick(0, A.size() - 1);
        for (int trial = 0; trial < 200; ++trial) {
            SkewTableau t;
            for (int k = 0; k < 8; ++k) {
                t = column_insert(A, t, Letter{pick(rng)});
                ASSERT_TRUE(is_semistandard(A, t));
            }
            EXPECT_EQ(t.boxes(), 8u);
        }
    }
}

TEST(Tableau, RskRoundTrip)
{
    std::mt19937 rng(11);
    for (auto fam : {Family::classical, Family::super})
        for (int ell : {1, 2, 3, 5}) {
            Alphabet A(fam, 3, 2);
            for (int trial = 0; trial < 150; ++trial) {
                auto m = random_matrix(A, ell, rng);
                auto [P, Q] = rsk(A, m);
                ASSERT_TRUE(is_semistandard(A, P));
                ASSERT_TRUE(is_semistandard(Q, ell));
                EXPECT_EQ(normalized(Q.shape()), conjugate(normalized(P.shape.outer)));
                EXPECT_EQ(weight_of(A, P), column_sums(A, m));
                // Row j of Q lists, with multiplicity, the columns that fed column j of P.
                std::vector<int> fed(static_cast<std::size_t>(ell), 0);
                for (auto& row : Q.rows)
                    for (int v : row)
                        ++fed[static_cast<std::size_t>(v - 1)];
                for (int k = 0; k < ell; ++k)
                    EXPECT_EQ(fed[static_cast<std::size_t>(k)], static_cast<int>(m.cols[static_cast<std::size_t>(k)].size()));
                EXPECT_EQ(inverse_rsk(A, P, Q, ell), m);
            }
        }
}

TEST(Tableau, InverseRskRejectsBadInput)
{
    Alphabet A(Family::classical, 2, 1);
    SkewTableau P = from_columns({Column{Letter{0}, Letter{1}}});
    IntTableau Q{{{1, 1}}};
    EXPECT_NO_THROW(inverse_rsk(A, P, Q, 1));
    EXPECT_THROW(inverse_rsk(A, P, IntTableau{{{1}, {1}}}, 1), std::invalid_argument);
    EXPECT_THROW(inverse_rsk(A, P, IntTableau{{{1}}}, 1), std::invalid_argument);
    EXPECT_THROW(rsk(A, BiwordMatrix{{{Letter{0}, Letter{0}}}}), std::invalid_argument);
}

TEST(Tableau, IntTableauxCountsMatchKostkaSums)
{
    for (auto [nu, n] : std::vector<std::pair<Partition, int>>{{{2, 1}, 3}, {{2, 2}, 3}, {{3, 1}, 4}, {{1, 1, 1}, 5}}) {
        auto ts = int_tableaux(nu, n);
        for (auto& t : ts)
            EXPECT_TRUE(is_semistandard(t, n));
        Alphabet A(Family::classical, n, 0);
        EXPECT_EQ(static_cast<long long>(ts.size()), oracle::brute_sst_count(A, nu));
    }
}
