#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

#include "alphabet.hpp"
#include "signature.hpp"
#include "tableau.hpp"

namespace osp {

// Either a value or the reason it was rejected.
template <class T>
class Result {
public:
    Result(T value) : v_(std::move(value)) {}
    static Result fail(std::string reason)
    {
        Result r;
        r.v_ = std::move(reason);
        return r;
    }

    bool ok() const noexcept { return v_.index() == 0; }
    explicit operator bool() const noexcept { return ok(); }

    const T& value() const
    {
        if (!ok())
            throw std::invalid_argument(error());
        return std::get<0>(v_);
    }
    T& value()
    {
        if (!ok())
            throw std::invalid_argument(error());
        return std::get<0>(v_);
    }
    const std::string& error() const { return std::get<1>(v_); }

private:
    Result() = default;
    std::variant<T, std::string> v_;
};

enum class SpinSign { plus, minus };

struct SpinColumn {
    Column col;
    SpinSign sign() const noexcept { return col.height() % 2 == 0 ? SpinSign::plus : SpinSign::minus; }
    int residue() const noexcept { return static_cast<int>(col.height() % 2); }
    friend bool operator==(const SpinColumn&, const SpinColumn&) = default;
};

// An element of T(a): shape lambda(a,b,c) with b, c even and sigma(T^L, T^R) = (a-r, b-r).
struct OspPair {
    TwoColumnTableau t;
    int residue = 0;

    int a() const noexcept { return t.offset; }
    const Column& L() const noexcept { return t.left; }
    const Column& R() const noexcept { return t.right; }
    friend bool operator==(const OspPair&, const OspPair&) = default;
};

// An element of T-bar(0): bottom-aligned, both heights odd, right column at least as tall.
struct BarPair {
    TwoColumnTableau t;

    const Column& L() const noexcept { return t.left; }
    const Column& R() const noexcept { return t.right; }
    friend bool operator==(const BarPair&, const BarPair&) = default;
};

using Part = std::variant<SpinColumn, OspPair, BarPair>;

inline std::size_t boxes(const Part& p)
{
    return std::visit(
        [](const auto& x) -> std::size_t {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SpinColumn>)
                return x.col.height();
            else
                return x.t.boxes();
        },
        p);
}

inline Result<OspPair> classify_pair(const Alphabet& A, const TwoColumnTableau& t)
{
    if (!is_column(A, t.left) || !is_column(A, t.right))
        return Result<OspPair>::fail("columns are not semistandard");
    if (!t.shape_ok())
        return Result<OspPair>::fail("offset does not give a skew two-column shape");
    auto s = t.shape();
    if (s.b % 2 != 0)
        return Result<OspPair>::fail("b = " + std::to_string(s.b) + " is odd");
    if (s.c % 2 != 0)
        return Result<OspPair>::fail("c = " + std::to_string(s.c) + " is odd");
    if (!rows_ok(A, t.left, t.right, t.offset))
        return Result<OspPair>::fail("rows are not semistandard");
    auto sig = sigma_pair(A, t.left, t.right);
    for (int r = 0; r <= 1; ++r)
        if (sig == Signature{s.a - r, s.b - r})
            return OspPair{t, r};
    return Result<OspPair>::fail("signature (" + std::to_string(sig.minus) + "," + std::to_string(sig.plus) +
                                 ") does not match (a-r, b-r)");
}

inline Result<OspPair> classify_pair(const Alphabet& A, Column L, Column R, int a)
{
    return classify_pair(A, TwoColumnTableau{std::move(L), std::move(R), a});
}

inline Result<BarPair> classify_bar(const Alphabet& A, const TwoColumnTableau& t)
{
    if (t.offset != 0)
        return Result<BarPair>::fail("bar pairs are bottom-aligned");
    if (!is_column(A, t.left) || !is_column(A, t.right))
        return Result<BarPair>::fail("columns are not semistandard");
    if (t.left.height() % 2 == 0 || t.right.height() % 2 == 0)
        return Result<BarPair>::fail("bar pair columns need odd heights");
    if (t.right.height() < t.left.height())
        return Result<BarPair>::fail("right column shorter than left");
    if (!rows_ok(A, t.left, t.right, 0))
        return Result<BarPair>::fail("rows are not semistandard");
    return BarPair{t};
}

inline Result<SpinColumn> classify_spin(const Alphabet& A, const Column& c)
{
    if (!is_column(A, c))
        return Result<SpinColumn>::fail("column is not semistandard");
    return SpinColumn{c};
}

// Largest k such that sliding T^R down k rows keeps the tableau semistandard (only k = 0, 1 tried).
inline int slide_residue(const Alphabet& A, const OspPair& T)
{
    TwoColumnTableau down = T.t;
    down.offset -= 1;
    if (down.shape_ok() && rows_ok(A, down.left, down.right, down.offset))
        return 1;
    return 0;
}

namespace detail {
inline BiwordMatrix pair_matrix(const Column& L, const Column& R) { return BiwordMatrix{{R.entries, L.entries}}; }

inline std::pair<Column, Column> matrix_pair(const BiwordMatrix& m) { return {Column(m.cols[1]), Column(m.cols[0])}; }
} // namespace detail

// (^L T, ^R T) = E_1^{a - r} T, with T^L as column 2 and T^R as column 1.
inline std::pair<Column, Column> lr_split(const Alphabet& A, const OspPair& T)
{
    std::optional<BiwordMatrix> m = detail::pair_matrix(T.L(), T.R());
    for (int k = 0; k < T.a() - T.residue && m; ++k)
        m = gl_E(A, *m, 1);
    if (!m)
        throw std::logic_error("E_1 power vanished on an element of T(a)");
    return detail::matrix_pair(*m);
}

// (T^{L*}, T^{R*}) = F_1 T, defined for residue 1.
inline std::pair<Column, Column> star_split(const Alphabet& A, const OspPair& T)
{
    if (T.residue != 1)
        throw std::invalid_argument("star split needs residue 1");
    auto m = gl_F(A, detail::pair_matrix(T.L(), T.R()), 1);
    if (!m)
        throw std::logic_error("F_1 vanished on a residue-1 element");
    return detail::matrix_pair(*m);
}

namespace detail {
inline Column column_from_rows(const std::map<int, Letter>& rows)
{
    Column c;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        c.entries.push_back(it->second);
    return c;
}
} // namespace detail

// Slide the boxes of T^R down as far as the row rule allows, then move unpaired left boxes right.
// Rows are numbered from the bottom of T^L.
inline std::pair<Column, Column> lr_split_sliding(const Alphabet& A, const OspPair& T)
{
    const auto& L = T.L();
    const auto& R = T.R();
    int hL = static_cast<int>(L.height());
    int a = T.a();
    std::map<int, Letter> right;
    int bound = -1;
    for (int j = 0; j < static_cast<int>(R.height()); ++j) {
        Letter y = R.from_bottom(j + 1);
        int best = a + j;
        for (int t = best - 1; t > bound && t >= 0; --t) {
            if (t < hL && !A.row_ok(L.from_bottom(t + 1), y))
                break;
            best = t;
        }
        right[best] = y;
        bound = best;
    }
    std::map<int, Letter> left;
    for (int i = 0; i < hL; ++i) {
        if (right.count(i))
            left[i] = L.from_bottom(i + 1);
        else
            right[i] = L.from_bottom(i + 1);
    }
    return {detail::column_from_rows(left), detail::column_from_rows(right)};
}

// Slide the boxes of T^L up under the top of T^R, then move the lowest unpaired right box left.
inline std::pair<Column, Column> star_split_sliding(const Alphabet& A, const OspPair& T)
{
    if (T.residue != 1)
        throw std::invalid_argument("star split needs residue 1");
    const auto& L = T.L();
    const auto& R = T.R();
    int a = T.a();
    std::map<int, Letter> right;
    for (int j = 0; j < static_cast<int>(R.height()); ++j)
        right[a + j] = R.from_bottom(j + 1);
    int top = a + static_cast<int>(R.height()) - 1;
    std::map<int, Letter> left;
    int bound = top + 1;
    for (int i = static_cast<int>(L.height()) - 1; i >= 0; --i) {
        Letter x = L.from_bottom(i + 1);
        int best = i;
        for (int t = i + 1; t < bound && t <= top; ++t) {
            auto it = right.find(t);
            if (it != right.end() && !A.row_ok(x, it->second))
                break;
            best = t;
        }
        left[best] = x;
        bound = best;
    }
    for (auto it = right.begin(); it != right.end(); ++it)
        if (!left.count(it->first)) {
            left[it->first] = it->second;
            right.erase(it);
            break;
        }
    return {detail::column_from_rows(left), detail::column_from_rows(right)};
}

// Everything admissibility needs from one part. A spin column S has a' = r_S and S = S^L = ^L S = S^{L*}.
struct SplitView {
    enum class Kind { spin, pair, bar } kind = Kind::spin;
    Column L;
    Column R;
    int a = 0;
    int r = 0;
    Column LS;  // ^L S
    Column RT;  // ^R T
    std::optional<Column> Lstar;
    std::optional<Column> Rstar;

    bool sp_minus() const noexcept { return kind == Kind::spin && r == 1; }
};

inline SplitView spin_view(const Column& c)
{
    SplitView v;
    v.kind = SplitView::Kind::spin;
    v.L = c;
    v.r = static_cast<int>(c.height() % 2);
    v.a = v.r;
    v.LS = c;
    v.Lstar = c;
    return v;
}

inline SplitView split_view(const Alphabet& A, const Part& p)
{
    if (auto s = std::get_if<SpinColumn>(&p))
        return spin_view(s->col);
    if (auto b = std::get_if<BarPair>(&p)) {
        SplitView v;
        v.kind = SplitView::Kind::bar;
        v.L = b->L();
        v.R = b->R();
        return v;
    }
    const auto& T = std::get<OspPair>(p);
    SplitView v;
    v.kind = SplitView::Kind::pair;
    v.L = T.L();
    v.R = T.R();
    v.a = T.a();
    v.r = T.residue;
    std::tie(v.LS, v.RT) = lr_split(A, T);
    if (T.residue == 1) {
        auto [ls, rs] = star_split(A, T);
        v.Lstar = std::move(ls);
        v.Rstar = std::move(rs);
    }
    return v;
}

struct AdmissibilityOptions {
    // Test hook: makes the height condition strict.
    bool mutate_height = false;
};

namespace detail {
inline bool height_le(int lhs, int rhs, const AdmissibilityOptions& opt) { return opt.mutate_height ? lhs < rhs : lhs <= rhs; }

inline bool admissible_pair(const Alphabet& A, const SplitView& T, const SplitView& S, const AdmissibilityOptions& opt)
{
    if (T.a < S.a)
        throw std::invalid_argument("admissibility needs a >= a'");
    int hTR = static_cast<int>(T.R.height());
    int hSL = static_cast<int>(S.L.height());
    if (!height_le(hTR, hSL - S.a + 2 * S.r * T.r, opt))
        return false;
    if (S.r == 1 && T.r == 1) {
        int eps = S.sp_minus() ? 1 : 0;
        return rows_ok(A, *T.Rstar, S.LS, 0) && rows_ok(A, T.RT, *S.Lstar, T.a - S.a + eps);
    }
    return rows_ok(A, T.R, S.LS, 0) && rows_ok(A, T.RT, S.L, T.a - S.a);
}

inline bool admissible_bar(const Alphabet& A, const SplitView& T, const Column& SL, const AdmissibilityOptions& opt)
{
    return height_le(static_cast<int>(T.R.height()), static_cast<int>(SL.height()), opt) && rows_ok(A, T.R, SL, 0);
}

inline void check_kinds(const SplitView& T, const SplitView& S)
{
    using K = SplitView::Kind;
    if (T.kind == K::spin)
        throw std::invalid_argument("a spin column has no admissible successor");
    if (T.kind == K::bar && (S.kind == K::pair || (S.kind == K::spin && S.r == 0)))
        throw std::invalid_argument("a bar pair is compared only with bar pairs and odd spin columns");
}
} // namespace detail

// T < S for adjacent parts (T sits to the left of S).
inline bool is_admissible(const Alphabet& A, const SplitView& T, const SplitView& S, const AdmissibilityOptions& opt = {})
{
    using K = SplitView::Kind;
    detail::check_kinds(T, S);
    if (T.kind == K::bar)
        return detail::admissible_bar(A, T, S.L, opt);
    if (S.kind == K::bar)
        return detail::admissible_pair(A, T, spin_view(S.L), opt);
    return detail::admissible_pair(A, T, S, opt);
}

inline bool is_admissible(const Alphabet& A, const Part& T, const Part& S, const AdmissibilityOptions& opt = {})
{
    return is_admissible(A, split_view(A, T), split_view(A, S), opt);
}

namespace detail {
// sigma(U, V) = (A - p, B - p) for some p >= 0.
inline bool sigma_slack(const Alphabet& Al, const Column& U, const Column& V, int A, int B)
{
    auto s = sigma_pair(Al, U, V);
    int p = A - s.minus;
    return p >= 0 && s.plus == B - p;
}

inline bool admissible_pair_sigma(const Alphabet& A, const SplitView& T, const SplitView& S)
{
    if (T.a < S.a)
        throw std::invalid_argument("admissibility needs a >= a'");
    int hTR = static_cast<int>(T.R.height());
    int hSL = static_cast<int>(S.L.height());
    bool both = S.r == 1 && T.r == 1;
    int b2 = hSL - hTR - S.a + S.r * (T.r + 1);
    if (b2 < 0)
        return false;
    const Column& X = both ? *T.Rstar : T.R;
    if (sigma_pair(A, X, S.LS) != Signature{0, b2})
        return false;
    int eps = both && S.sp_minus() ? 1 : 0;
    int b3 = hSL - hTR - S.a + T.r * (S.r + 1);
    const Column& Y = both ? *S.Lstar : S.L;
    return sigma_slack(A, T.RT, Y, T.a - S.a + eps, b3);
}
} // namespace detail

// The same relation expressed through signatures only.
inline bool is_admissible_sigma(const Alphabet& A, const SplitView& T, const SplitView& S)
{
    using K = SplitView::Kind;
    detail::check_kinds(T, S);
    if (T.kind == K::bar) {
        int b = static_cast<int>(S.L.height()) - static_cast<int>(T.R.height());
        return b >= 0 && sigma_pair(A, T.R, S.L) == Signature{0, b};
    }
    if (S.kind == K::bar)
        return detail::admissible_pair_sigma(A, T, spin_view(S.L));
    return detail::admissible_pair_sigma(A, T, S);
}

inline bool is_admissible_sigma(const Alphabet& A, const Part& T, const Part& S)
{
    return is_admissible_sigma(A, split_view(A, T), split_view(A, S));
}

enum class PartKind { spin, pair, bar };

struct ShapePlan {
    Partition lambda;
    int ell = 0;
    SpinSign sign = SpinSign::plus;
    int q = 0;
    int r = 0;
    int M = 0;
    int L = 0;
    std::vector<int> heights;  // a_1 .. a_M

    int first_index() const noexcept { return r == 1 ? 0 : 1; }
    int num_parts() const noexcept { return L + r; }

    PartKind kind(int k) const
    {
        if (k == 0)
            return PartKind::spin;
        if (k <= q)
            return sign == SpinSign::plus ? PartKind::pair : PartKind::bar;
        return PartKind::pair;
    }
    // Offset required of T_k when it is a pair.
    int offset(int k) const { return k <= q ? 0 : heights.at(static_cast<std::size_t>(k - q - 1)); }

    friend bool operator==(const ShapePlan&, const ShapePlan&) = default;
};

inline ShapePlan shape_plan(const Partition& lambda, int ell)
{
    if (!is_partition(lambda))
        throw std::invalid_argument("lambda is not a partition");
    if (ell < 0)
        throw std::invalid_argument("ell must be non-negative");
    Partition lam = normalized(lambda);
    int l1 = lam.size() > 0 ? lam[0] : 0;
    int l2 = lam.size() > 1 ? lam[1] : 0;
    if (ell - l1 - l2 < 0)
        throw std::invalid_argument("(lambda, ell) needs ell - lambda_1 - lambda_2 >= 0");
    ShapePlan P;
    P.lambda = lam;
    P.ell = ell;
    Partition nu;
    if (ell - 2 * l1 >= 0) {
        P.sign = SpinSign::plus;
        P.q = (ell - 2 * l1) / 2;
        P.r = (ell - 2 * l1) % 2;
        P.M = l1;
        nu = conjugate(lam);
    } else {
        P.sign = SpinSign::minus;
        P.q = (2 * l1 - ell) / 2;
        P.r = (2 * l1 - ell) % 2;
        P.M = ell - l1;
        Partition bar = lam;
        bar[0] = ell - l1;
        nu = conjugate(normalized(bar));
    }
    P.L = P.M + P.q;
    for (int k = 1; k <= P.M; ++k)
        P.heights.push_back(nu[static_cast<std::size_t>(P.M - k)]);
    return P;
}

inline ShapePlan shape_plan(const Partition& lambda, int ell, const Alphabet& A)
{
    auto P = shape_plan(lambda, ell);
    if (!A.in_lattice(P.lambda))
        throw std::invalid_argument("(lambda, ell) does not lie in the weight lattice of this alphabet");
    return P;
}

// parts[j] is T_{j + first_index()}, so parts.front() is T_0 (or T_1) and parts.back() is T_L.
struct OspTableau {
    ShapePlan plan;
    std::vector<Part> parts;

    const Part& part(int k) const { return parts.at(static_cast<std::size_t>(k - plan.first_index())); }
    std::size_t total_boxes() const
    {
        std::size_t s = 0;
        for (auto& p : parts)
            s += boxes(p);
        return s;
    }
    friend bool operator==(const OspTableau&, const OspTableau&) = default;
};

inline std::string part_label(int k) { return "T_" + std::to_string(k); }

// Re-derives residues, so incoming residues need not be set.
inline Result<OspTableau> validate(const Alphabet& A, const ShapePlan& plan, const std::vector<Part>& parts,
                                   const AdmissibilityOptions& opt = {})
{
    using R = Result<OspTableau>;
    if (static_cast<int>(parts.size()) != plan.num_parts())
        return R::fail("expected " + std::to_string(plan.num_parts()) + " parts, got " + std::to_string(parts.size()));
    OspTableau out{plan, {}};
    for (int j = 0; j < static_cast<int>(parts.size()); ++j) {
        int k = j + plan.first_index();
        const Part& p = parts[static_cast<std::size_t>(j)];
        switch (plan.kind(k)) {
        case PartKind::spin: {
            auto s = std::get_if<SpinColumn>(&p);
            if (!s)
                return R::fail(part_label(k) + ": expected a spin column");
            if (!is_column(A, s->col))
                return R::fail(part_label(k) + ": column is not semistandard");
            if (s->sign() != plan.sign)
                return R::fail(part_label(k) + ": spin column has the wrong sign");
            out.parts.push_back(*s);
            break;
        }
        case PartKind::pair: {
            auto s = std::get_if<OspPair>(&p);
            if (!s)
                return R::fail(part_label(k) + ": expected a two-column pair");
            if (s->a() != plan.offset(k))
                return R::fail(part_label(k) + ": offset " + std::to_string(s->a()) + " but the plan needs " +
                               std::to_string(plan.offset(k)));
            auto c = classify_pair(A, s->t);
            if (!c)
                return R::fail(part_label(k) + ": " + c.error());
            out.parts.push_back(c.value());
            break;
        }
        case PartKind::bar: {
            auto s = std::get_if<BarPair>(&p);
            if (!s)
                return R::fail(part_label(k) + ": expected a bar pair");
            auto c = classify_bar(A, s->t);
            if (!c)
                return R::fail(part_label(k) + ": " + c.error());
            out.parts.push_back(c.value());
            break;
        }
        }
    }
    for (std::size_t j = 1; j < out.parts.size(); ++j) {
        int k = static_cast<int>(j) + plan.first_index();
        if (!is_admissible(A, out.parts[j], out.parts[j - 1], opt))
            return R::fail(part_label(k) + " is not admissible over " + part_label(k - 1));
    }
    return out;
}

// All columns over the alphabet with at most max_height boxes.
inline std::vector<Column> all_columns(const Alphabet& A, int max_height)
{
    std::vector<Column> out;
    int m_even = A.is_super() ? A.m() : A.size();
    std::vector<Column> evens;
    for (unsigned mask = 0; mask < (1u << m_even); ++mask) {
        Column c;
        for (int k = 0; k < m_even; ++k)
            if (mask & (1u << k))
                c.entries.push_back(Letter{k});
        if (static_cast<int>(c.height()) <= max_height)
            evens.push_back(std::move(c));
    }
    if (!A.is_super())
        return evens;
    // Odd parts: multisets over the odd letters.
    std::vector<Column> odds{Column{}};
    for (int k = A.m(); k < A.size(); ++k) {
        std::vector<Column> next;
        for (const auto& c : odds)
            for (int t = 0; static_cast<int>(c.height()) + t <= max_height; ++t) {
                Column d = c;
                d.entries.insert(d.entries.end(), static_cast<std::size_t>(t), Letter{k});
                next.push_back(std::move(d));
            }
        odds = std::move(next);
    }
    for (const auto& e : evens)
        for (const auto& o : odds)
            if (static_cast<int>(e.height() + o.height()) <= max_height) {
                Column c = e;
                c.entries.insert(c.entries.end(), o.entries.begin(), o.entries.end());
                out.push_back(std::move(c));
            }
    return out;
}

inline std::vector<SpinColumn> spin_candidates(const Alphabet& A, SpinSign sign, int max_boxes)
{
    std::vector<SpinColumn> out;
    for (auto& c : all_columns(A, max_boxes))
        if (SpinColumn{c}.sign() == sign)
            out.push_back(SpinColumn{c});
    return out;
}

inline std::vector<OspPair> pair_candidates(const Alphabet& A, int a, int max_boxes)
{
    std::vector<OspPair> out;
    auto cols = all_columns(A, max_boxes);
    for (const auto& L : cols) {
        int c = static_cast<int>(L.height()) - a;
        if (c < 0 || c % 2)
            continue;
        for (const auto& R : cols) {
            int b = static_cast<int>(R.height()) - c;
            if (b < 0 || b % 2 || static_cast<int>(L.height() + R.height()) > max_boxes)
                continue;
            if (auto p = classify_pair(A, L, R, a))
                out.push_back(p.value());
        }
    }
    return out;
}

inline std::vector<BarPair> bar_candidates(const Alphabet& A, int max_boxes)
{
    std::vector<BarPair> out;
    auto cols = all_columns(A, max_boxes);
    for (const auto& L : cols) {
        if (L.height() % 2 == 0)
            continue;
        for (const auto& R : cols) {
            if (R.height() % 2 == 0 || R.height() < L.height() || static_cast<int>(L.height() + R.height()) > max_boxes)
                continue;
            if (auto b = classify_bar(A, TwoColumnTableau{L, R, 0}))
                out.push_back(b.value());
        }
    }
    return out;
}

struct EnumerateOptions {
    std::optional<int> max_boxes;
    int jobs = 1;
    AdmissibilityOptions admissibility;
};

// Column words in display order T_L, ..., T_0 (left column before right).
inline std::vector<std::vector<int>> column_key(const OspTableau& T)
{
    std::vector<std::vector<int>> key;
    auto push = [&](const Column& c) {
        std::vector<int> v;
        for (Letter x : c.entries)
            v.push_back(x.rank);
        key.push_back(std::move(v));
    };
    for (auto it = T.parts.rbegin(); it != T.parts.rend(); ++it)
        std::visit(
            [&](const auto& p) {
                if constexpr (std::is_same_v<std::decay_t<decltype(p)>, SpinColumn>)
                    push(p.col);
                else {
                    push(p.t.left);
                    push(p.t.right);
                }
            },
            *it);
    return key;
}

inline bool canonical_less(const OspTableau& x, const OspTableau& y)
{
    auto bx = x.total_boxes();
    auto by = y.total_boxes();
    if (bx != by)
        return bx < by;
    return column_key(x) < column_key(y);
}

inline int default_box_bound(const Alphabet& A, const ShapePlan& plan)
{
    return A.size() * (2 * plan.L + plan.r);
}

// Every element of T(lambda, ell) with at most max_boxes boxes, in canonical order.
inline std::vector<OspTableau> enumerate(const Alphabet& A, const ShapePlan& plan, const EnumerateOptions& opt = {})
{
    if (A.is_super() && !opt.max_boxes)
        throw std::invalid_argument("enumeration over a super alphabet needs a box bound");
    int bound = opt.max_boxes ? *opt.max_boxes : default_box_bound(A, plan);
    if (bound < 0)
        throw std::invalid_argument("box bound must be non-negative");

    struct Candidate {
        Part part;
        SplitView view;
        int boxes;
    };
    std::map<std::pair<int, int>, std::vector<Candidate>> cache;
    auto slot_key = [&](int k) {
        PartKind kind = plan.kind(k);
        return std::make_pair(static_cast<int>(kind), kind == PartKind::pair ? plan.offset(k) : -1);
    };
    auto candidates = [&](int k) -> const std::vector<Candidate>& {
        PartKind kind = plan.kind(k);
        int a = kind == PartKind::pair ? plan.offset(k) : -1;
        auto key = slot_key(k);
        auto it = cache.find(key);
        if (it != cache.end())
            return it->second;
        std::vector<Candidate> out;
        auto add = [&](Part p) {
            auto v = split_view(A, p);
            int b = static_cast<int>(boxes(p));
            out.push_back({std::move(p), std::move(v), b});
        };
        if (kind == PartKind::spin)
            for (auto& s : spin_candidates(A, plan.sign, bound))
                add(s);
        else if (kind == PartKind::pair)
            for (auto& s : pair_candidates(A, a, bound))
                add(s);
        else
            for (auto& s : bar_candidates(A, bound))
                add(s);
        return cache.emplace(key, std::move(out)).first->second;
    };
    int first = plan.first_index();
    for (int k = first; k <= plan.L; ++k)
        candidates(k);

    if (plan.num_parts() == 0)
        return {OspTableau{plan, {}}};

    auto run = [&](std::size_t stripe, std::size_t stride, std::vector<OspTableau>& sink) {
        std::vector<const Candidate*> chosen;
        auto rec = [&](auto&& self, int k, int used) -> void {
            if (k > plan.L) {
                OspTableau T{plan, {}};
                for (auto* c : chosen)
                    T.parts.push_back(c->part);
                sink.push_back(std::move(T));
                return;
            }
            const auto& list = cache.at(slot_key(k));
            for (std::size_t idx = 0; idx < list.size(); ++idx) {
                if (k == first && idx % stride != stripe)
                    continue;
                const auto& c = list[idx];
                if (used + c.boxes > bound)
                    continue;
                if (!chosen.empty() && !is_admissible(A, c.view, chosen.back()->view, opt.admissibility))
                    continue;
                chosen.push_back(&c);
                self(self, k + 1, used + c.boxes);
                chosen.pop_back();
            }
        };
        rec(rec, first, 0);
    };

    std::vector<OspTableau> out;
    std::size_t jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
    if (jobs == 1) {
        run(0, 1, out);
    } else {
        std::vector<std::vector<OspTableau>> sinks(jobs);
        std::vector<std::thread> pool;
        for (std::size_t s = 0; s < jobs; ++s)
            pool.emplace_back([&, s] { run(s, jobs, sinks[s]); });
        for (auto& t : pool)
            t.join();
        for (auto& s : sinks)
            for (auto& T : s)
                out.push_back(std::move(T));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

// Row i <= m holds the even letter of rank i-1; below row m column j holds the j-th odd letter.
inline std::vector<Column> genuine_highest_columns(const Alphabet& A, const Partition& lambda)
{
    std::vector<Column> cols;
    Partition lc = conjugate(normalized(lambda));
    int even_rows = A.is_super() ? A.m() : A.size();
    for (std::size_t j = 0; j < lc.size(); ++j) {
        Column c;
        for (int i = 0; i < lc[j]; ++i)
            c.entries.push_back(Letter{i < even_rows ? i : A.m() + static_cast<int>(j)});
        cols.push_back(std::move(c));
    }
    return cols;
}

// The highest weight element: empty or minimal middle parts, and T_{q+k} holding column M+1-k of the
// highest weight tableau of shape lambda in its left column.
inline OspTableau highest_weight_element(const Alphabet& A, const ShapePlan& plan)
{
    if (!A.in_lattice(plan.lambda))
        throw std::invalid_argument("(lambda, ell) does not lie in the weight lattice of this alphabet");
    auto cols = genuine_highest_columns(A, plan.lambda);
    std::vector<Part> parts;
    for (int k = plan.first_index(); k <= plan.L; ++k) {
        switch (plan.kind(k)) {
        case PartKind::spin:
            parts.push_back(SpinColumn{plan.sign == SpinSign::plus ? Column{} : Column{Letter{0}}});
            break;
        case PartKind::bar:
            parts.push_back(BarPair{TwoColumnTableau{Column{Letter{0}}, Column{Letter{0}}, 0}});
            break;
        case PartKind::pair:
            if (k <= plan.q)
                parts.push_back(OspPair{TwoColumnTableau{Column{}, Column{}, 0}, 0});
            else
                parts.push_back(OspPair{TwoColumnTableau{cols.at(static_cast<std::size_t>(plan.M - (k - plan.q))), Column{},
                                                         plan.offset(k)},
                                        0});
            break;
        }
    }
    auto v = validate(A, plan, parts);
    if (!v)
        throw std::logic_error("highest weight element failed validation: " + v.error());
    return v.value();
}

inline std::string word_text(const Alphabet& A, const std::vector<Letter>& w)
{
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            s += ' ';
        s += A.name(w[i]);
    }
    return s;
}

inline std::string part_text(const Alphabet& A, const Part& p)
{
    std::string s;
    std::visit(
        [&](const auto& x) {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, SpinColumn>)
                s += "[" + word_text(A, x.col.entries) + "]";
            else if constexpr (std::is_same_v<X, OspPair>)
                s += "[" + word_text(A, x.L().entries) + "][" + word_text(A, x.R().entries) + "]a=" + std::to_string(x.a());
            else
                s += "[" + word_text(A, x.L().entries) + "][" + word_text(A, x.R().entries) + "]bar";
        },
        p);
    return s;
}

// Compact one-line text of an element, T_L first.
inline std::string osp_text(const Alphabet& A, const OspTableau& T)
{
    std::string s;
    for (auto it = T.parts.rbegin(); it != T.parts.rend(); ++it) {
        if (!s.empty())
            s += " | ";
        s += part_text(A, *it);
    }
    return s;
}

} // namespace osp
