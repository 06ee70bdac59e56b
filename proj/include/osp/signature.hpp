#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "alphabet.hpp"
#include "tableau.hpp"

namespace osp {

enum class Sign : char { plus = '+', minus = '-', dot = '.' };

using SignSeq = std::vector<Sign>;

// Counts of unmatched minus and plus signs.
struct Signature {
    int minus = 0;
    int plus = 0;
    friend bool operator==(const Signature&, const Signature&) = default;
};

// Positions of the signs left after cancelling (+, -) pairs.
struct Bracket {
    std::vector<std::size_t> minus;
    std::vector<std::size_t> plus;

    Signature signature() const { return {static_cast<int>(minus.size()), static_cast<int>(plus.size())}; }
};

inline Bracket bracket(std::span<const Sign> s)
{
    Bracket b;
    for (std::size_t p = 0; p < s.size(); ++p) {
        if (s[p] == Sign::plus)
            b.plus.push_back(p);
        else if (s[p] == Sign::minus) {
            if (!b.plus.empty())
                b.plus.pop_back();
            else
                b.minus.push_back(p);
        }
    }
    return b;
}

inline SignSeq reduce(std::span<const Sign> s)
{
    SignSeq out(s.size(), Sign::dot);
    auto b = bracket(s);
    for (auto p : b.minus)
        out[p] = Sign::minus;
    for (auto p : b.plus)
        out[p] = Sign::plus;
    return out;
}

// Merge U and V in decreasing order; on a tie V comes first for even letters and U first for odd ones.
inline Signature sigma_pair(const Alphabet& A, const Column& U, const Column& V)
{
    struct Item {
        Letter x;
        bool from_v;
    };
    std::vector<Item> items;
    items.reserve(U.height() + V.height());
    for (Letter x : U.entries)
        items.push_back({x, false});
    for (Letter x : V.entries)
        items.push_back({x, true});
    auto tie = [&](const Item& it) {
        bool first = A.is_odd(it.x) ? !it.from_v : it.from_v;
        return first ? 0 : 1;
    };
    std::stable_sort(items.begin(), items.end(), [&](const Item& p, const Item& q) {
        if (p.x != q.x)
            return p.x > q.x;
        return tie(p) < tie(q);
    });
    SignSeq s;
    s.reserve(items.size());
    for (auto& it : items)
        s.push_back(it.from_v ? Sign::plus : Sign::minus);
    return bracket(s).signature();
}

// i gives +, i+1 gives -.
inline SignSeq gl_signs(std::span<const int> w, int i)
{
    SignSeq s;
    s.reserve(w.size());
    for (int v : w)
        s.push_back(v == i ? Sign::plus : (v == i + 1 ? Sign::minus : Sign::dot));
    return s;
}

inline Signature sigma_word(std::span<const int> w, int i)
{
    auto s = gl_signs(w, i);
    return bracket(s).signature();
}

inline std::optional<std::vector<int>> gl_E(std::vector<int> w, int i)
{
    auto s = gl_signs(w, i);
    auto b = bracket(s);
    if (b.minus.empty())
        return std::nullopt;
    w[b.minus.back()] = i;
    return w;
}

inline std::optional<std::vector<int>> gl_F(std::vector<int> w, int i)
{
    auto s = gl_signs(w, i);
    auto b = bracket(s);
    if (b.plus.empty())
        return std::nullopt;
    w[b.plus.front()] = i + 1;
    return w;
}

// Word of a matrix: rows from the largest letter down. An even row lists the column indices
// holding the letter in increasing order, an odd row lists them decreasing with multiplicity.
struct MatrixWordItem {
    int column;
    Letter letter;
};

inline std::vector<MatrixWordItem> matrix_word(const Alphabet& A, const BiwordMatrix& m)
{
    std::vector<MatrixWordItem> w;
    for (int a = A.size() - 1; a >= 0; --a) {
        Letter x{a};
        if (A.is_odd(x)) {
            for (int k = m.ell(); k >= 1; --k) {
                auto& col = m.cols[k - 1];
                auto c = std::count(col.begin(), col.end(), x);
                for (long t = 0; t < c; ++t)
                    w.push_back({k, x});
            }
        } else {
            for (int k = 1; k <= m.ell(); ++k) {
                auto& col = m.cols[k - 1];
                if (std::find(col.begin(), col.end(), x) != col.end())
                    w.push_back({k, x});
            }
        }
    }
    return w;
}

inline std::vector<int> matrix_word_values(const Alphabet& A, const BiwordMatrix& m)
{
    std::vector<int> v;
    for (auto& it : matrix_word(A, m))
        v.push_back(it.column);
    return v;
}

inline Signature sigma_matrix(const Alphabet& A, const BiwordMatrix& m, int i)
{
    auto v = matrix_word_values(A, m);
    return sigma_word(v, i);
}

namespace detail {
inline std::optional<BiwordMatrix> move_letter(BiwordMatrix m, Letter a, int from, int to)
{
    auto& src = m.cols[from - 1];
    src.erase(std::find(src.begin(), src.end(), a));
    auto& dst = m.cols[to - 1];
    dst.insert(std::upper_bound(dst.begin(), dst.end(), a), a);
    return m;
}
} // namespace detail

inline std::optional<BiwordMatrix> gl_E(const Alphabet& A, const BiwordMatrix& m, int i)
{
    auto w = matrix_word(A, m);
    std::vector<int> v;
    for (auto& it : w)
        v.push_back(it.column);
    auto b = bracket(gl_signs(v, i));
    if (b.minus.empty())
        return std::nullopt;
    return detail::move_letter(m, w[b.minus.back()].letter, i + 1, i);
}

inline std::optional<BiwordMatrix> gl_F(const Alphabet& A, const BiwordMatrix& m, int i)
{
    auto w = matrix_word(A, m);
    std::vector<int> v;
    for (auto& it : w)
        v.push_back(it.column);
    auto b = bracket(gl_signs(v, i));
    if (b.plus.empty())
        return std::nullopt;
    return detail::move_letter(m, w[b.plus.front()].letter, i, i + 1);
}

inline Signature sigma_tableau(const IntTableau& q, int i)
{
    auto w = reading_word(q);
    return sigma_word(w, i);
}

inline std::optional<IntTableau> gl_E(IntTableau q, int i)
{
    auto cells = reading_cells(q);
    std::vector<int> v;
    for (auto& c : cells)
        v.push_back(c.value);
    auto b = bracket(gl_signs(v, i));
    if (b.minus.empty())
        return std::nullopt;
    auto& c = cells[b.minus.back()];
    q.rows[c.row][c.col] = i;
    return q;
}

inline std::optional<IntTableau> gl_F(IntTableau q, int i)
{
    auto cells = reading_cells(q);
    std::vector<int> v;
    for (auto& c : cells)
        v.push_back(c.value);
    auto b = bracket(gl_signs(v, i));
    if (b.plus.empty())
        return std::nullopt;
    auto& c = cells[b.plus.front()];
    q.rows[c.row][c.col] = i + 1;
    return q;
}

// Applies E_i (or F_i) k times; nullopt as soon as one step is null.
template <class T>
std::optional<T> gl_E_pow(std::optional<T> x, int i, int k)
{
    for (int t = 0; t < k && x; ++t)
        x = gl_E(std::move(*x), i);
    return x;
}

template <class T>
std::optional<T> gl_F_pow(std::optional<T> x, int i, int k)
{
    for (int t = 0; t < k && x; ++t)
        x = gl_F(std::move(*x), i);
    return x;
}

// Tensor slots contributing -^eps then +^phi. e acts on the slot of the rightmost unmatched minus,
// f on the slot of the leftmost unmatched plus.
struct SlotSigns {
    int eps = 0;
    int phi = 0;
};

struct TensorAction {
    std::optional<std::size_t> e_slot;
    std::optional<std::size_t> f_slot;
    int epsilon = 0;
    int phi = 0;
};

inline TensorAction tensor_rule(std::span<const SlotSigns> slots)
{
    SignSeq s;
    std::vector<std::size_t> owner;
    for (std::size_t j = 0; j < slots.size(); ++j) {
        for (int t = 0; t < slots[j].eps; ++t) {
            s.push_back(Sign::minus);
            owner.push_back(j);
        }
        for (int t = 0; t < slots[j].phi; ++t) {
            s.push_back(Sign::plus);
            owner.push_back(j);
        }
    }
    auto b = bracket(s);
    TensorAction act;
    act.epsilon = static_cast<int>(b.minus.size());
    act.phi = static_cast<int>(b.plus.size());
    if (!b.minus.empty())
        act.e_slot = owner[b.minus.back()];
    if (!b.plus.empty())
        act.f_slot = owner[b.plus.front()];
    return act;
}

} // namespace osp
