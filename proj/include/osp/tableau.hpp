#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "alphabet.hpp"

namespace osp {

// Entries listed top to bottom.
struct Column {
    std::vector<Letter> entries;

    Column() = default;
    Column(std::initializer_list<Letter> e) : entries(e) {}
    explicit Column(std::vector<Letter> e) : entries(std::move(e)) {}

    std::size_t height() const noexcept { return entries.size(); }
    bool empty() const noexcept { return entries.empty(); }

    // i-th entry from the bottom, 1-based.
    Letter from_bottom(std::size_t i) const
    {
        if (i < 1 || i > entries.size())
            throw std::out_of_range("column index from bottom out of range");
        return entries[entries.size() - i];
    }

    std::optional<Letter> top() const
    {
        if (entries.empty())
            return std::nullopt;
        return entries.front();
    }

    int count(Letter a) const { return static_cast<int>(std::count(entries.begin(), entries.end(), a)); }
    bool contains(Letter a) const { return count(a) > 0; }

    // Keeps entries sorted.
    Column with(Letter a) const
    {
        Column c = *this;
        c.entries.insert(std::upper_bound(c.entries.begin(), c.entries.end(), a), a);
        return c;
    }
    Column without(Letter a) const
    {
        Column c = *this;
        auto it = std::find(c.entries.begin(), c.entries.end(), a);
        if (it == c.entries.end())
            throw std::invalid_argument("letter not in column");
        c.entries.erase(it);
        return c;
    }

    friend bool operator==(const Column&, const Column&) = default;
    friend auto operator<=>(const Column&, const Column&) = default;
};

inline bool is_column(const Alphabet& A, const Column& c)
{
    for (Letter x : c.entries)
        if (!A.contains(x))
            return false;
    for (std::size_t i = 0; i + 1 < c.entries.size(); ++i)
        if (!A.col_ok(c.entries[i], c.entries[i + 1]))
            return false;
    return true;
}

// left(i + offset) vs right(i), bottom-indexed, over rows where both exist.
inline bool rows_ok(const Alphabet& A, const Column& left, const Column& right, int offset)
{
    for (int i = 1; i <= static_cast<int>(right.height()); ++i) {
        int li = i + offset;
        if (li < 1)
            continue;
        if (li > static_cast<int>(left.height()))
            break;
        if (!A.row_ok(left.from_bottom(li), right.from_bottom(i)))
            return false;
    }
    return true;
}

// lambda(a,b,c) = (2^{b+c}, 1^a) / (1^b).
struct SkewTwoColShape {
    int a = 0;
    int b = 0;
    int c = 0;
    friend bool operator==(const SkewTwoColShape&, const SkewTwoColShape&) = default;
};

// The left column extends `offset` rows below the bottom of the right column.
struct TwoColumnTableau {
    Column left;
    Column right;
    int offset = 0;

    SkewTwoColShape shape() const
    {
        int c = static_cast<int>(left.height()) - offset;
        return {offset, static_cast<int>(right.height()) - c, c};
    }
    bool shape_ok() const
    {
        auto s = shape();
        return s.a >= 0 && s.c >= 0 && s.b >= 0;
    }
    std::size_t boxes() const { return left.height() + right.height(); }

    friend bool operator==(const TwoColumnTableau&, const TwoColumnTableau&) = default;
};

inline bool is_semistandard(const Alphabet& A, const TwoColumnTableau& t)
{
    return t.shape_ok() && is_column(A, t.left) && is_column(A, t.right) && rows_ok(A, t.left, t.right, t.offset);
}

struct SkewShape {
    Partition outer;
    Partition inner;
    friend bool operator==(const SkewShape&, const SkewShape&) = default;
};

// Rows top-down; row r holds the cells inner[r] .. outer[r]-1.
struct SkewTableau {
    SkewShape shape;
    std::vector<std::vector<Letter>> rows;

    int inner_at(std::size_t r) const { return r < shape.inner.size() ? shape.inner[r] : 0; }

    std::optional<Letter> at(std::size_t r, int c) const
    {
        if (r >= rows.size())
            return std::nullopt;
        int lo = inner_at(r);
        if (c < lo || c >= lo + static_cast<int>(rows[r].size()))
            return std::nullopt;
        return rows[r][c - lo];
    }

    std::size_t boxes() const
    {
        std::size_t s = 0;
        for (auto& r : rows)
            s += r.size();
        return s;
    }

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

inline bool shape_consistent(const SkewTableau& t)
{
    if (t.shape.outer.size() != t.rows.size() || !is_partition(t.shape.outer) || !is_partition(t.shape.inner))
        return false;
    if (t.shape.inner.size() > t.shape.outer.size())
        return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r)
        if (static_cast<int>(t.rows[r].size()) != t.shape.outer[r] - t.inner_at(r) || t.inner_at(r) > t.shape.outer[r])
            return false;
    return true;
}

// Rows weakly increase with odd letters strict; columns weakly increase with even letters strict.
inline bool is_semistandard(const Alphabet& A, const SkewTableau& t)
{
    if (!shape_consistent(t))
        return false;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        for (Letter x : t.rows[r])
            if (!A.contains(x))
                return false;
        for (std::size_t j = 0; j + 1 < t.rows[r].size(); ++j)
            if (!A.row_ok(t.rows[r][j], t.rows[r][j + 1]))
                return false;
        if (r + 1 < t.rows.size()) {
            for (int c = t.inner_at(r + 1); c < t.shape.outer[r + 1]; ++c) {
                auto up = t.at(r, c);
                if (up && !A.col_ok(*up, *t.at(r + 1, c)))
                    return false;
            }
        }
    }
    return true;
}

// Columns from right to left, each read top to bottom.
inline std::vector<Letter> reading_word(const SkewTableau& t)
{
    std::vector<Letter> w;
    int width = t.shape.outer.empty() ? 0 : t.shape.outer.front();
    for (int c = width - 1; c >= 0; --c)
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            if (auto x = t.at(r, c))
                w.push_back(*x);
    return w;
}

inline Weight weight_of(const Alphabet& A, std::span<const Letter> word)
{
    Weight w(static_cast<std::size_t>(A.size()));
    for (Letter x : word) {
        A.check(x);
        ++w.mult[x.rank];
    }
    return w;
}

inline Weight weight_of(const Alphabet& A, const SkewTableau& t)
{
    auto w = reading_word(t);
    return weight_of(A, std::span<const Letter>(w));
}

inline Weight weight_of(const Alphabet& A, const Column& c) { return weight_of(A, std::span<const Letter>(c.entries)); }

// Straight tableau from its columns, listed left to right.
inline SkewTableau from_columns(const std::vector<Column>& cols)
{
    SkewTableau t;
    std::size_t depth = cols.empty() ? 0 : cols.front().height();
    t.rows.resize(depth);
    for (const auto& c : cols)
        for (std::size_t r = 0; r < c.height(); ++r) {
            if (r >= t.rows.size())
                throw std::invalid_argument("columns do not form a straight shape");
            t.rows[r].push_back(c.entries[r]);
        }
    for (auto& r : t.rows)
        t.shape.outer.push_back(static_cast<int>(r.size()));
    if (!is_partition(t.shape.outer))
        throw std::invalid_argument("columns do not form a straight shape");
    return t;
}

inline std::vector<Column> columns_of(const SkewTableau& t)
{
    if (!normalized(t.shape.inner).empty())
        throw std::invalid_argument("columns_of needs a straight shape");
    std::vector<Column> cols;
    int width = t.shape.outer.empty() ? 0 : t.shape.outer.front();
    for (int c = 0; c < width; ++c) {
        Column col;
        for (std::size_t r = 0; r < t.rows.size(); ++r)
            if (auto x = t.at(r, c))
                col.entries.push_back(*x);
        cols.push_back(std::move(col));
    }
    return cols;
}

// Straight tableau with entries in {1, ..., ell}; rows top-down.
struct IntTableau {
    std::vector<std::vector<int>> rows;

    Partition shape() const
    {
        Partition p;
        for (auto& r : rows)
            p.push_back(static_cast<int>(r.size()));
        return p;
    }
    std::size_t boxes() const
    {
        std::size_t s = 0;
        for (auto& r : rows)
            s += r.size();
        return s;
    }
    friend bool operator==(const IntTableau&, const IntTableau&) = default;
    friend auto operator<=>(const IntTableau&, const IntTableau&) = default;
};

// Ordinary semistandard: rows weak, columns strict, entries in 1..ell.
inline bool is_semistandard(const IntTableau& q, int ell)
{
    if (!is_partition(q.shape()))
        return false;
    for (std::size_t r = 0; r < q.rows.size(); ++r) {
        if (q.rows[r].empty())
            return false;
        for (std::size_t c = 0; c < q.rows[r].size(); ++c) {
            int v = q.rows[r][c];
            if (v < 1 || v > ell)
                return false;
            if (c > 0 && q.rows[r][c - 1] > v)
                return false;
            if (r > 0 && q.rows[r - 1][c] >= v)
                return false;
        }
    }
    return true;
}

// Columns right to left, top to bottom, as (value, row, col).
struct IntCell {
    int value;
    std::size_t row;
    std::size_t col;
};

inline std::vector<IntCell> reading_cells(const IntTableau& q)
{
    std::vector<IntCell> w;
    std::size_t width = q.rows.empty() ? 0 : q.rows.front().size();
    for (std::size_t c = width; c-- > 0;)
        for (std::size_t r = 0; r < q.rows.size(); ++r)
            if (c < q.rows[r].size())
                w.push_back({q.rows[r][c], r, c});
    return w;
}

inline std::vector<int> reading_word(const IntTableau& q)
{
    std::vector<int> w;
    for (auto& cell : reading_cells(q))
        w.push_back(cell.value);
    return w;
}

// m = [m^(ell) : ... : m^(1)]; cols[k-1] holds column k as a sorted multiset of letters.
struct BiwordMatrix {
    std::vector<std::vector<Letter>> cols;

    int ell() const noexcept { return static_cast<int>(cols.size()); }
    friend bool operator==(const BiwordMatrix&, const BiwordMatrix&) = default;
};

inline bool is_valid(const Alphabet& A, const BiwordMatrix& m)
{
    for (const auto& col : m.cols) {
        if (!std::is_sorted(col.begin(), col.end()))
            return false;
        for (std::size_t i = 0; i < col.size(); ++i) {
            if (!A.contains(col[i]))
                return false;
            if (i > 0 && col[i] == col[i - 1] && A.is_even(col[i]))
                return false;
        }
    }
    return true;
}

inline Weight column_sums(const Alphabet& A, const BiwordMatrix& m)
{
    Weight w(static_cast<std::size_t>(A.size()));
    for (const auto& col : m.cols)
        for (Letter x : col)
            ++w.mult[x.rank];
    return w;
}

// Does x, inserted into a column, bump the existing entry y?
inline bool bumps(const Alphabet& A, Letter x, Letter y) { return A.is_even(x) ? y >= x : y > x; }

// Column insertion into a straight tableau given by its columns. Returns (row, col) of the new cell.
inline std::pair<std::size_t, std::size_t> column_insert(const Alphabet& A, std::vector<Column>& P, Letter x)
{
    for (std::size_t j = 0;; ++j) {
        if (j == P.size()) {
            P.push_back(Column{x});
            return {0, j};
        }
        auto& e = P[j].entries;
        auto it = std::find_if(e.begin(), e.end(), [&](Letter y) { return bumps(A, x, y); });
        if (it == e.end()) {
            e.push_back(x);
            return {e.size() - 1, j};
        }
        std::swap(*it, x);
    }
}

inline SkewTableau column_insert(const Alphabet& A, const SkewTableau& t, Letter x)
{
    auto cols = columns_of(t);
    column_insert(A, cols, x);
    return from_columns(cols);
}

struct RskPair {
    SkewTableau P;
    IntTableau Q;
    friend bool operator==(const RskPair&, const RskPair&) = default;
};

// P = m^(ell) -> ( ... (m^(2) -> m^(1))); row j of Q records the growth of column j of P.
inline RskPair rsk(const Alphabet& A, const BiwordMatrix& m)
{
    if (!is_valid(A, m))
        throw std::invalid_argument("invalid biword matrix");
    std::vector<Column> P;
    IntTableau Q;
    for (int k = 1; k <= m.ell(); ++k) {
        for (Letter x : m.cols[k - 1]) {
            auto [r, c] = column_insert(A, P, x);
            if (Q.rows.size() <= c)
                Q.rows.resize(c + 1);
            if (Q.rows[c].size() != r)
                throw std::logic_error("rsk recording shape mismatch");
            Q.rows[c].push_back(k);
        }
    }
    return {from_columns(P), Q};
}

inline BiwordMatrix inverse_rsk(const Alphabet& A, const SkewTableau& Pt, const IntTableau& Qt, int ell)
{
    if (!is_semistandard(A, Pt))
        throw std::invalid_argument("P is not semistandard");
    if (!is_semistandard(Qt, ell))
        throw std::invalid_argument("Q is not semistandard over 1..ell");
    if (normalized(Qt.shape()) != conjugate(normalized(Pt.shape.outer)))
        throw std::invalid_argument("shape of Q is not the conjugate of the shape of P");
    auto P = columns_of(Pt);
    auto Q = Qt.rows;
    BiwordMatrix m;
    m.cols.resize(static_cast<std::size_t>(ell));
    for (int k = ell; k >= 1; --k) {
        for (;;) {
            // The last cell added for k is the deepest one, i.e. the largest row index in P.
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t c = 0; c < Q.size(); ++c)
                if (!Q[c].empty() && Q[c].back() == k) {
                    std::pair<std::size_t, std::size_t> cand{Q[c].size() - 1, c};
                    if (!best || cand > *best)
                        best = cand;
                }
            if (!best)
                break;
            auto c = best->second;
            Q[c].pop_back();
            Letter z = P[c].entries.back();
            P[c].entries.pop_back();
            for (std::size_t j = c; j-- > 0;) {
                auto& e = P[j].entries;
                std::size_t idx = e.size();
                for (std::size_t i = e.size(); i-- > 0;)
                    if (bumps(A, e[i], z)) {
                        idx = i;
                        break;
                    }
                if (idx == e.size())
                    throw std::logic_error("inverse rsk: no entry to unbump");
                std::swap(e[idx], z);
            }
            while (!P.empty() && P.back().empty())
                P.pop_back();
            while (!Q.empty() && Q.back().empty())
                Q.pop_back();
            m.cols[k - 1].push_back(z);
        }
        std::sort(m.cols[k - 1].begin(), m.cols[k - 1].end());
    }
    return m;
}

} // namespace osp
