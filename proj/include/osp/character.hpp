#pragma once

#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "alphabet.hpp"
#include "osptab.hpp"
#include "signature.hpp"
#include "tableau.hpp"

namespace osp {

// Sum of coef * z^level x^mult.
class CharPoly {
public:
    void add(const Weight& w, long long coef = 1)
    {
        if (coef == 0)
            return;
        auto& c = terms_[w];
        c += coef;
        if (c == 0)
            terms_.erase(w);
    }

    CharPoly& operator+=(const CharPoly& o)
    {
        for (auto& [w, c] : o.terms_)
            add(w, c);
        return *this;
    }
    CharPoly& operator-=(const CharPoly& o)
    {
        for (auto& [w, c] : o.terms_)
            add(w, -c);
        return *this;
    }
    friend CharPoly operator+(CharPoly a, const CharPoly& b) { return a += b; }
    friend CharPoly operator-(CharPoly a, const CharPoly& b) { return a -= b; }
    friend bool operator==(const CharPoly&, const CharPoly&) = default;

    CharPoly scaled(long long k) const
    {
        CharPoly p;
        for (auto& [w, c] : terms_)
            p.add(w, c * k);
        return p;
    }

    // Multiply by z^ell.
    CharPoly with_level(int ell) const
    {
        CharPoly p;
        for (auto& [w, c] : terms_) {
            Weight v = w;
            v.level += ell;
            p.add(v, c);
        }
        return p;
    }

    // Keep terms of total x-degree at most d.
    CharPoly truncated(int d) const
    {
        CharPoly p;
        for (auto& [w, c] : terms_)
            if (degree(w) <= d)
                p.add(w, c);
        return p;
    }

    static int degree(const Weight& w) { return std::accumulate(w.mult.begin(), w.mult.end(), 0); }

    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::map<Weight, long long>& terms() const noexcept { return terms_; }
    long long coefficient(const Weight& w) const
    {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

private:
    std::map<Weight, long long> terms_;
};

// SST_A(mu) built column by column.
inline std::vector<SkewTableau> semistandard_tableaux(const Alphabet& A, const Partition& mu, std::optional<int> max_degree = std::nullopt)
{
    Partition p = normalized(mu);
    if (!is_partition(p))
        throw std::invalid_argument("mu is not a partition");
    if (A.is_super() && !max_degree)
        throw std::invalid_argument("super alphabets need a degree bound");
    if (max_degree && size_of(p) > *max_degree)
        return {};
    Partition heights = conjugate(p);
    int tallest = heights.empty() ? 0 : heights.front();
    std::map<int, std::vector<Column>> by_height;
    for (auto& c : all_columns(A, tallest))
        by_height[static_cast<int>(c.height())].push_back(c);
    std::vector<SkewTableau> out;
    std::vector<Column> chosen;
    auto rec = [&](auto&& self, std::size_t j) -> void {
        if (j == heights.size()) {
            out.push_back(from_columns(chosen));
            return;
        }
        for (const auto& c : by_height[heights[j]]) {
            if (j > 0) {
                const auto& prev = chosen.back();
                bool ok = true;
                for (std::size_t i = 0; i < c.height() && ok; ++i)
                    ok = A.row_ok(prev.entries[i], c.entries[i]);
                if (!ok)
                    continue;
            }
            chosen.push_back(c);
            self(self, j + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    if (p.empty())
        return {SkewTableau{}};
    return out;
}

inline CharPoly super_schur(const Alphabet& A, const Partition& mu, std::optional<int> max_degree = std::nullopt)
{
    CharPoly p;
    for (auto& t : semistandard_tableaux(A, mu, max_degree))
        p.add(weight_of(A, t));
    return p;
}

inline CharPoly s_character(const Alphabet& A, const ShapePlan& plan, std::optional<int> max_boxes = std::nullopt, int jobs = 1)
{
    CharPoly p;
    Weight lvl(static_cast<std::size_t>(A.size()));
    for (auto& T : enumerate(A, plan, EnumerateOptions{max_boxes, jobs, {}})) {
        Weight w(static_cast<std::size_t>(A.size()));
        for (auto& part : T.parts)
            std::visit(
                [&](const auto& x) {
                    if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SpinColumn>)
                        w += weight_of(A, x.col);
                    else {
                        w += weight_of(A, x.t.left);
                        w += weight_of(A, x.t.right);
                    }
                },
                part);
        w.level = plan.ell;
        p.add(w);
    }
    return p;
}

// Number of columns of the matrix attached to an element: T_0 in column 1, T_k^R in column 2k, T_k^L in 2k+1.
inline int matrix_width(const ShapePlan& plan) { return 2 * plan.L + 1; }

inline BiwordMatrix tableau_to_matrix(const ShapePlan& plan, const OspTableau& T)
{
    BiwordMatrix m;
    m.cols.resize(static_cast<std::size_t>(matrix_width(plan)));
    for (int k = plan.first_index(); k <= plan.L; ++k)
        std::visit(
            [&](const auto& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SpinColumn>)
                    m.cols[0] = x.col.entries;
                else {
                    m.cols[static_cast<std::size_t>(2 * k - 1)] = x.t.right.entries;
                    m.cols[static_cast<std::size_t>(2 * k)] = x.t.left.entries;
                }
            },
            T.part(k));
    return m;
}

// Conditions on a recording tableau Q over {1, ..., 2L+1}. Each predicate is self-contained.
namespace kcond {

struct Data {
    const ShapePlan& plan;
    const IntTableau& Q;
    std::vector<int> cnt;  // cnt[k] = number of k's in Q

    Data(const ShapePlan& p, const IntTableau& q) : plan(p), Q(q), cnt(static_cast<std::size_t>(matrix_width(p) + 2), 0)
    {
        for (auto& row : q.rows)
            for (int v : row)
                if (v >= 1 && v <= matrix_width(p))
                    ++cnt[static_cast<std::size_t>(v)];
    }
    int c(int k) const { return cnt.at(static_cast<std::size_t>(k)); }
    int a(int k) const { return plan.heights.at(static_cast<std::size_t>(k - 1)); }
    int mL(int k) const { return c(2 * plan.q + 2 * k + 1); }
    int mR(int k) const { return c(2 * plan.q + 2 * k); }
    int r0() const { return plan.sign == SpinSign::minus ? 1 : 0; }
    // Middle columns 1..2q+1; column 1 exists only when r = 1.
    int lo() const { return plan.r == 1 ? 1 : 2; }
};

inline std::optional<IntTableau> E_pow(std::optional<IntTableau> q, int i, int k) { return gl_E_pow(std::move(q), i, k); }
inline std::optional<IntTableau> F_pow(std::optional<IntTableau> q, int i, int k) { return gl_F_pow(std::move(q), i, k); }

inline bool slack_match(const Signature& s, int A, int B)
{
    int p = A - s.minus;
    return p >= 0 && s.plus == B - p;
}

// Entries in range, and column 1 empty when there is no spin part.
inline bool q0(const ShapePlan& plan, const IntTableau& Q)
{
    if (!is_semistandard(Q, matrix_width(plan)))
        return false;
    Data d(plan, Q);
    return plan.r == 1 || d.c(1) == 0;
}

inline bool q1(const ShapePlan& plan, const IntTableau& Q)
{
    Data d(plan, Q);
    for (int k = 1; k <= plan.M; ++k) {
        int c = d.mL(k) - d.a(k);
        if (c < 0 || c % 2 || d.mR(k) % 2)
            return false;
    }
    return true;
}

inline bool q2(const ShapePlan& plan, const IntTableau& Q)
{
    Data d(plan, Q);
    for (int k = 1; k <= plan.M; ++k)
        if (d.mL(k) - d.a(k) > d.mR(k))
            return false;
    return true;
}

// Residues r_1..r_M forced by the signature at the pair columns; index 0 holds r_0.
inline std::optional<std::vector<int>> residues(const ShapePlan& plan, const IntTableau& Q)
{
    Data d(plan, Q);
    std::vector<int> r(static_cast<std::size_t>(plan.M + 1), 0);
    r[0] = d.r0();
    for (int k = 1; k <= plan.M; ++k) {
        auto s = sigma_tableau(Q, 2 * plan.q + 2 * k);
        bool found = false;
        for (int rk = 0; rk <= 1 && !found; ++rk)
            if (s == Signature{d.a(k) - rk, d.mR(k) - d.mL(k) + d.a(k) - rk}) {
                r[static_cast<std::size_t>(k)] = rk;
                found = true;
            }
        if (!found)
            return std::nullopt;
    }
    return r;
}

inline bool q3(const ShapePlan& plan, const IntTableau& Q) { return residues(plan, Q).has_value(); }

inline bool q4(const ShapePlan& plan, const IntTableau& Q)
{
    auto r = residues(plan, Q);
    if (!r)
        return false;
    Data d(plan, Q);
    for (int k = 1; k < plan.M; ++k)
        if (d.mR(k + 1) > d.mL(k) - d.a(k) + 2 * (*r)[k] * (*r)[k + 1])
            return false;
    return true;
}

inline bool q5(const ShapePlan& plan, const IntTableau& Q)
{
    auto r = residues(plan, Q);
    if (!r)
        return false;
    Data d(plan, Q);
    int q = plan.q;
    for (int k = 1; k < plan.M; ++k) {
        int rk = (*r)[k], rk1 = (*r)[k + 1];
        auto Qk = F_pow(E_pow(Q, 2 * q + 2 * k, d.a(k) - rk), 2 * q + 2 * k + 2, rk * rk1);
        if (!Qk)
            return false;
        if (sigma_tableau(*Qk, 2 * q + 2 * k + 1) != Signature{0, d.mL(k) - d.mR(k + 1) - d.a(k) + rk * (rk1 + 1)})
            return false;
    }
    return true;
}

inline bool q6(const ShapePlan& plan, const IntTableau& Q)
{
    auto r = residues(plan, Q);
    if (!r)
        return false;
    Data d(plan, Q);
    int q = plan.q;
    for (int k = 1; k < plan.M; ++k) {
        int rk = (*r)[k], rk1 = (*r)[k + 1];
        auto Qb = F_pow(E_pow(Q, 2 * q + 2 * k + 2, d.a(k + 1) - rk1), 2 * q + 2 * k, rk * rk1);
        if (!Qb)
            return false;
        if (!slack_match(sigma_tableau(*Qb, 2 * q + 2 * k + 1), d.a(k + 1) - d.a(k),
                         d.mL(k) - d.mR(k + 1) - d.a(k) + rk1 * (rk + 1)))
            return false;
    }
    return true;
}

inline bool q7(const ShapePlan& plan, const IntTableau& Q)
{
    Data d(plan, Q);
    int parity = plan.sign == SpinSign::plus ? 0 : 1;
    for (int k = d.lo(); k <= 2 * plan.q + 1; ++k)
        if (d.c(k) % 2 != parity)
            return false;
    return true;
}

inline bool q8(const ShapePlan& plan, const IntTableau& Q)
{
    Data d(plan, Q);
    for (int k = d.lo(); k <= 2 * plan.q; ++k)
        if (d.c(k + 1) > d.c(k))
            return false;
    return true;
}

inline bool q9(const ShapePlan& plan, const IntTableau& Q)
{
    Data d(plan, Q);
    for (int k = d.lo(); k <= 2 * plan.q; ++k)
        if (sigma_tableau(Q, k) != Signature{0, d.c(k) - d.c(k + 1)})
            return false;
    return true;
}

// The link between T_{q+1} and the middle part below it applies only when both exist.
inline bool has_link(const ShapePlan& plan) { return plan.M >= 1 && (plan.q >= 1 || plan.r == 1); }

inline bool q10(const ShapePlan& plan, const IntTableau& Q)
{
    if (!has_link(plan))
        return true;
    auto r = residues(plan, Q);
    if (!r)
        return false;
    Data d(plan, Q);
    int r0 = (*r)[0], r1 = (*r)[1];
    return d.mR(1) <= d.c(2 * plan.q + 1) - r0 + 2 * r0 * r1;
}

inline bool q11(const ShapePlan& plan, const IntTableau& Q)
{
    if (!has_link(plan))
        return true;
    auto r = residues(plan, Q);
    if (!r)
        return false;
    Data d(plan, Q);
    int q = plan.q, r0 = (*r)[0], r1 = (*r)[1];
    auto Q0 = F_pow(Q, 2 * q + 2, r0 * r1);
    if (!Q0)
        return false;
    return sigma_tableau(*Q0, 2 * q + 1) == Signature{0, d.c(2 * q + 1) - d.mR(1) + r0 * r1};
}

inline bool q12(const ShapePlan& plan, const IntTableau& Q)
{
    if (!has_link(plan))
        return true;
    auto r = residues(plan, Q);
    if (!r)
        return false;
    Data d(plan, Q);
    int q = plan.q, r0 = (*r)[0], r1 = (*r)[1];
    auto Qb = E_pow(Q, 2 * q + 2, d.a(1) - r1);
    if (!Qb)
        return false;
    return slack_match(sigma_tableau(*Qb, 2 * q + 1), d.a(1) - r0 * (1 - r1),
                       d.c(2 * q + 1) - d.mR(1) - r0 + r1 * (r0 + 1));
}

using Predicate = bool (*)(const ShapePlan&, const IntTableau&);

struct Named {
    const char* name;
    Predicate fn;
};

inline const std::vector<Named>& all()
{
    static const std::vector<Named> list{{"Q0", q0}, {"Q1", q1}, {"Q2", q2},   {"Q3", q3},   {"Q4", q4},
                                         {"Q5", q5}, {"Q6", q6}, {"Q7", q7},   {"Q8", q8},   {"Q9", q9},
                                         {"Q10", q10}, {"Q11", q11}, {"Q12", q12}};
    return list;
}

} // namespace kcond

// Name of the first failing condition, or nullopt when Q is in the K-set.
inline std::optional<std::string> k_failure(const ShapePlan& plan, const IntTableau& Q)
{
    for (auto& c : kcond::all())
        if (!c.fn(plan, Q))
            return std::string(c.name);
    return std::nullopt;
}

inline bool in_k_set(const ShapePlan& plan, const IntTableau& Q) { return !k_failure(plan, Q); }

// Ordinary semistandard tableaux of shape nu with entries in 1..n.
inline std::vector<IntTableau> int_tableaux(const Partition& nu, int n)
{
    Partition p = normalized(nu);
    std::vector<IntTableau> out;
    IntTableau t;
    for (int len : p)
        t.rows.emplace_back(static_cast<std::size_t>(len), 0);
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t r = 0; r < p.size(); ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(p[r]); ++c)
            cells.emplace_back(r, c);
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            out.push_back(t);
            return;
        }
        auto [r, c] = cells[idx];
        int lo = 1;
        if (c > 0)
            lo = std::max(lo, t.rows[r][c - 1]);
        if (r > 0)
            lo = std::max(lo, t.rows[r - 1][c] + 1);
        // Leave room for the cells below in this column.
        int below = 0;
        for (std::size_t rr = r + 1; rr < p.size() && static_cast<std::size_t>(p[rr]) > c; ++rr)
            ++below;
        for (int v = lo; v <= n - below; ++v) {
            t.rows[r][c] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// Partitions of s with at most max_len parts and parts at most max_part.
inline std::vector<Partition> partitions(int s, int max_part, int max_len)
{
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_len)
            return;
        for (int k = std::min(left, cap); k >= 1; --k) {
            cur.push_back(k);
            self(self, left - k, k);
            cur.pop_back();
        }
    };
    rec(rec, s, max_part);
    return out;
}

// K_mu for |mu| <= max_size, mu_1 <= 2L+1 and at most max_len parts.
inline std::map<Partition, long long> k_coefficients(const ShapePlan& plan, int max_size, int max_len = 1 << 20)
{
    std::map<Partition, long long> K;
    int width = matrix_width(plan);
    for (int s = 0; s <= max_size; ++s)
        for (auto& mu : partitions(s, width, max_len)) {
            long long k = 0;
            for (auto& Q : int_tableaux(conjugate(mu), width))
                if (in_k_set(plan, Q))
                    ++k;
            if (k)
                K[mu] = k;
        }
    return K;
}

// z^ell sum_mu K_mu s_mu(x_A), truncated at max_degree for super alphabets.
inline CharPoly schur_sum(const Alphabet& A, const ShapePlan& plan, const std::map<Partition, long long>& K,
                          std::optional<int> max_degree = std::nullopt)
{
    CharPoly p;
    for (auto& [mu, k] : K) {
        if (max_degree && size_of(mu) > *max_degree)
            continue;
        if (!A.is_super() && static_cast<int>(mu.size()) > A.size())
            continue;
        p += super_schur(A, mu, max_degree ? max_degree : std::optional<int>(size_of(mu))).scaled(k);
    }
    return p.with_level(plan.ell);
}

struct PieriReport {
    std::size_t elements = 0;
    bool p_semistandard = true;
    bool q_in_k_set = true;
    bool injective = true;
    bool weight_preserving = true;
    bool surjective = true;
    long long expected = 0;  // sum_mu |SST(mu)| K_mu within the bound
    std::string first_failure;

    bool ok() const { return p_semistandard && q_in_k_set && injective && weight_preserving && surjective; }
};

inline PieriReport verify_pieri(const Alphabet& A, const ShapePlan& plan, std::optional<int> max_boxes = std::nullopt, int jobs = 1)
{
    if (A.is_super() && !max_boxes)
        throw std::invalid_argument("super alphabets need a box bound");
    int bound = max_boxes ? *max_boxes : default_box_bound(A, plan);
    PieriReport rep;
    auto elems = enumerate(A, plan, EnumerateOptions{bound, jobs, {}});
    rep.elements = elems.size();
    std::set<std::pair<std::vector<std::vector<int>>, IntTableau>> seen;
    auto fail = [&](bool& flag, const std::string& why) {
        if (flag && rep.first_failure.empty())
            rep.first_failure = why;
        flag = false;
    };
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
        const auto& T = elems[idx];
        auto m = tableau_to_matrix(plan, T);
        auto [P, Q] = rsk(A, m);
        std::string tag = "element #" + std::to_string(idx);
        if (!is_semistandard(A, P))
            fail(rep.p_semistandard, tag + ": P not semistandard");
        if (auto why = k_failure(plan, Q))
            fail(rep.q_in_k_set, tag + ": Q fails " + *why);
        if (weight_of(A, P) != column_sums(A, m))
            fail(rep.weight_preserving, tag + ": weight changed");
        std::vector<std::vector<int>> pkey;
        for (auto& row : P.rows) {
            std::vector<int> v;
            for (Letter x : row)
                v.push_back(x.rank);
            pkey.push_back(std::move(v));
        }
        if (!seen.emplace(std::move(pkey), Q).second)
            fail(rep.injective, tag + ": (P, Q) repeated");
    }
    int max_len = A.is_super() ? (1 << 20) : A.size();
    for (auto& [mu, k] : k_coefficients(plan, bound, max_len))
        rep.expected += k * static_cast<long long>(semistandard_tableaux(A, mu, bound).size());
    if (rep.expected != static_cast<long long>(elems.size()))
        fail(rep.surjective, "count " + std::to_string(elems.size()) + " but the K-expansion gives " + std::to_string(rep.expected));
    return rep;
}

// Weyl dimension of the irreducible D_rank module of highest weight Lambda(lambda, ell).
inline unsigned long long weyl_dim_D(int ell, const Partition& lambda, int rank)
{
    if (rank < 2)
        throw std::invalid_argument("rank must be at least 2");
    Partition lam = normalized(lambda);
    if (!is_partition(lam) || static_cast<int>(lam.size()) > rank)
        throw std::invalid_argument("lambda must be a partition with at most rank parts");
    int l1 = lam.size() > 0 ? lam[0] : 0;
    int l2 = lam.size() > 1 ? lam[1] : 0;
    if (ell - l1 - l2 < 0)
        throw std::invalid_argument("weight is not dominant");
    lam.resize(static_cast<std::size_t>(rank), 0);
    using big = __int128;
    big num = 1, den = 1;
    auto reduce = [&] {
        big a = num < 0 ? -num : num, b = den;
        while (b) {
            big t = a % b;
            a = b;
            b = t;
        }
        if (a > 1) {
            num /= a;
            den /= a;
        }
    };
    for (int p = 0; p < rank; ++p)
        for (int q = 0; q < p; ++q) {
            big Xp = ell - 2 * lam[static_cast<std::size_t>(p)] + 2 * p;
            big Xq = ell - 2 * lam[static_cast<std::size_t>(q)] + 2 * q;
            big Yp = 2 * p, Yq = 2 * q;
            num *= (Xp - Xq) * (Xp + Xq);
            den *= (Yp - Yq) * (Yp + Yq);
            reduce();
        }
    if (den != 1 || num <= 0)
        throw std::logic_error("Weyl dimension is not a positive integer");
    return static_cast<unsigned long long>(num);
}

} // namespace osp
