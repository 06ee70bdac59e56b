#include <gtest/gtest.h>

#include <random>

#include "osp/signature.hpp"

using namespace osp;

namespace {

// Delete adjacent (+, -) pairs, ignoring dots, until none are left.
Signature brute_signature(const SignSeq& s)
{
    std::vector<Sign> v;
    for (Sign x : s)
        if (x != Sign::dot)
            v.push_back(x);
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t p = 0; p + 1 < v.size(); ++p)
            if (v[p] == Sign::plus && v[p + 1] == Sign::minus) {
                v.erase(v.begin() + static_cast<long>(p), v.begin() + static_cast<long>(p) + 2);
                changed = true;
                break;
            }
    }
    Signature sig;
    for (Sign x : v)
        ++(x == Sign::minus ? sig.minus : sig.plus);
    return sig;
}

IntTableau draw_int_tableau(std::mt19937& rng, int n)
{
    std::uniform_int_distribution<int> shape(0, 4);
    Partition nu;
    for (int len = shape(rng) + 1; len > 0 && nu.size() < 3; len = std::min(len, shape(rng)))
        nu.push_back(len);
    IntTableau q;
    std::uniform_int_distribution<int> bump(0, 1);
    for (std::size_t r = 0; r < nu.size(); ++r) {
        q.rows.emplace_back();
        for (int c = 0; c < nu[r]; ++c) {
            int lo = 1;
            if (c > 0)
                lo = std::max(lo, q.rows[r][static_cast<std::size_t>(c - 1)]);
            if (r > 0)
                lo = std::max(lo, q.rows[r - 1][static_cast<std::size_t>(c)] + 1);
            q.rows[r].push_back(lo + bump(rng));
        }
    }
    return q;
}

SignSeq random_signs(std::mt19937& rng, std::size_t n)
{
    std::uniform_int_distribution<int> d(0, 2);
    SignSeq s;
    const Sign pick[] = {Sign::minus, Sign::plus, Sign::dot};
    for (std::size_t i = 0; i < n; ++i)
        s.push_back(pick[d(rng)]);
    return s;
}

// Random semistandard tableau with at most 3 rows over 1..n; retries until the fill is legal.
IntTableau random_int_tableau(std::mt19937& rng, int n)
{
    for (;;) {
        auto q = draw_int_tableau(rng, n);
        if (is_semistandard(q, n))
            return q;
    }
}

} // namespace

TEST(Signature, BracketMatchesRepeatedCancellation)
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 2000; ++trial) {
        auto s = random_signs(rng, static_cast<std::size_t>(trial % 17));
        auto b = bracket(s);
        EXPECT_EQ(b.signature(), brute_signature(s));
        // Unmatched minus signs all sit left of unmatched plus signs.
        if (!b.minus.empty() && !b.plus.empty())
            EXPECT_LT(b.minus.back(), b.plus.front());
        auto r = reduce(s);
        EXPECT_EQ(bracket(r).signature(), b.signature());
    }
}

TEST(Signature, SmallBrackets)
{
    using enum Sign;
    EXPECT_EQ(bracket(SignSeq{plus, minus}).signature(), (Signature{0, 0}));
    EXPECT_EQ(bracket(SignSeq{minus, plus}).signature(), (Signature{1, 1}));
    EXPECT_EQ(bracket(SignSeq{plus, dot, plus, minus, minus, minus}).signature(), (Signature{1, 0}));
    EXPECT_EQ(bracket(SignSeq{}).signature(), (Signature{0, 0}));
}

TEST(Signature, SigmaPairTies)
{
    Alphabet C(Family::classical, 2, 0);
    Column x{Letter{1}};
    // Even tie: V first, so + before - and they cancel.
    EXPECT_EQ(sigma_pair(C, x, x), (Signature{0, 0}));
    Alphabet S(Family::super, 2, 1);
    Column h{Letter{2}};
    // Odd tie: U first, nothing cancels.
    EXPECT_EQ(sigma_pair(S, h, h), (Signature{1, 1}));
    // Distinct letters: larger first.
    EXPECT_EQ(sigma_pair(C, Column{Letter{0}}, Column{Letter{1}}), (Signature{0, 0}));
    EXPECT_EQ(sigma_pair(C, Column{Letter{1}}, Column{Letter{0}}), (Signature{1, 1}));
}

TEST(Signature, WordOperatorsAreInverse)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> d(1, 4);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<int> w(static_cast<std::size_t>(trial % 12));
        for (auto& x : w)
            x = d(rng);
        for (int i = 1; i <= 3; ++i) {
            auto sig = sigma_word(w, i);
            if (auto f = gl_F(w, i)) {
                EXPECT_EQ(gl_E(*f, i), w);
                EXPECT_EQ(sigma_word(*f, i), (Signature{sig.minus + 1, sig.plus - 1}));
            } else {
                EXPECT_EQ(sig.plus, 0);
            }
            if (auto e = gl_E(w, i))
                EXPECT_EQ(gl_F(*e, i), w);
            else
                EXPECT_EQ(sig.minus, 0);
        }
    }
}

TEST(Signature, TableauOperatorsStaySemistandard)
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 1000; ++trial) {
        auto q = random_int_tableau(rng, 5);
        ASSERT_TRUE(is_semistandard(q, 5));
        for (int i = 1; i <= 4; ++i) {
            auto sig = sigma_tableau(q, i);
            int k = 0;
            for (auto x = std::optional<IntTableau>(q); (x = gl_F(*x, i)); ++k) {
                ASSERT_TRUE(is_semistandard(*x, 5));
                EXPECT_EQ(gl_E(*x, i).value(), gl_F_pow<IntTableau>(q, i, k).value());
            }
            EXPECT_EQ(k, sig.plus);
            EXPECT_EQ(gl_E_pow<IntTableau>(q, i, sig.minus + 1), std::nullopt);
            EXPECT_TRUE(gl_E_pow<IntTableau>(q, i, sig.minus).has_value());
        }
    }
}

TEST(Signature, MatrixOperatorsAreInverse)
{
    std::mt19937 rng(13);
    for (auto fam : {Family::classical, Family::super}) {
        Alphabet A(fam, 2, 2);
        std::uniform_int_distribution<int> mult(0, 2);
        for (int trial = 0; trial < 500; ++trial) {
            BiwordMatrix m;
            m.cols.resize(3);
            for (auto& col : m.cols)
                for (Letter x : A.letters())
                    for (int t = A.is_odd(x) ? mult(rng) : mult(rng) % 2; t > 0; --t)
                        col.push_back(x);
            for (int i = 1; i <= 2; ++i) {
                auto sig = sigma_matrix(A, m, i);
                if (auto f = gl_F(A, m, i)) {
                    ASSERT_TRUE(is_valid(A, *f));
                    EXPECT_EQ(column_sums(A, *f), column_sums(A, m));
                    EXPECT_EQ(gl_E(A, *f, i), m);
                } else {
                    EXPECT_EQ(sig.plus, 0);
                }
                if (auto e = gl_E(A, m, i)) {
                    ASSERT_TRUE(is_valid(A, *e));
                    EXPECT_EQ(gl_F(A, *e, i), m);
                } else {
                    EXPECT_EQ(sig.minus, 0);
                }
            }
        }
    }
}

TEST(Signature, TensorRuleMatchesFlatBracket)
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> d(0, 2);
    for (int trial = 0; trial < 2000; ++trial) {
        std::vector<SlotSigns> slots(static_cast<std::size_t>(1 + trial % 5));
        SignSeq flat;
        std::vector<std::size_t> owner;
        for (std::size_t j = 0; j < slots.size(); ++j) {
            slots[j] = {d(rng), d(rng)};
            for (int t = 0; t < slots[j].eps; ++t) {
                flat.push_back(Sign::minus);
                owner.push_back(j);
            }
            for (int t = 0; t < slots[j].phi; ++t) {
                flat.push_back(Sign::plus);
                owner.push_back(j);
            }
        }
        auto act = tensor_rule(slots);
        auto sig = brute_signature(flat);
        EXPECT_EQ(act.epsilon, sig.minus);
        EXPECT_EQ(act.phi, sig.plus);
        EXPECT_EQ(act.e_slot.has_value(), sig.minus > 0);
        EXPECT_EQ(act.f_slot.has_value(), sig.plus > 0);
        // f acts on the leftmost slot whose plus survives.
        if (act.f_slot) {
            auto red = reduce(flat);
            auto first = std::find(red.begin(), red.end(), Sign::plus) - red.begin();
            EXPECT_EQ(*act.f_slot, owner[static_cast<std::size_t>(first)]);
        }
    }
}
