#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace osp {

enum class Family { classical, super };

enum class Parity { even, odd };

// A letter is addressed by its rank in the total order, starting at 0 for the minimum.
struct Letter {
    int rank = 0;
    friend constexpr auto operator<=>(Letter, Letter) = default;
};

// Color 0 is the spin index (m-bar). Color c >= 1 moves the letter of rank c-1 to rank c.
struct Color {
    int index = 0;
    friend constexpr auto operator<=>(Color, Color) = default;
};

using Partition = std::vector<int>;

// level * Lambda + sum mult[k] * delta_k, indexed by letter rank.
struct Weight {
    int level = 0;
    std::vector<int> mult;

    Weight() = default;
    Weight(int lvl, std::vector<int> m) : level(lvl), mult(std::move(m)) {}
    explicit Weight(std::size_t size) : mult(size, 0) {}

    Weight& operator+=(const Weight& o)
    {
        if (mult.size() < o.mult.size())
            mult.resize(o.mult.size(), 0);
        level += o.level;
        for (std::size_t k = 0; k < o.mult.size(); ++k)
            mult[k] += o.mult[k];
        return *this;
    }
    Weight& operator-=(const Weight& o)
    {
        if (mult.size() < o.mult.size())
            mult.resize(o.mult.size(), 0);
        level -= o.level;
        for (std::size_t k = 0; k < o.mult.size(); ++k)
            mult[k] -= o.mult[k];
        return *this;
    }
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend bool operator==(const Weight&, const Weight&) = default;
    friend auto operator<=>(const Weight&, const Weight&) = default;

    int at(Letter a) const
    {
        return static_cast<std::size_t>(a.rank) < mult.size() ? mult[a.rank] : 0;
    }
};

// Strip trailing zeros so that (2,1,0) and (2,1) compare equal.
inline Partition normalized(Partition p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
    return p;
}

inline bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0)
            return false;
        if (i > 0 && p[i] > p[i - 1])
            return false;
    }
    return true;
}

inline Partition conjugate(const Partition& p)
{
    Partition out;
    if (p.empty())
        return out;
    for (int j = 1; j <= p.front(); ++j) {
        int c = 0;
        for (int x : p)
            if (x >= j)
                ++c;
        out.push_back(c);
    }
    return out;
}

inline int size_of(const Partition& p)
{
    int s = 0;
    for (int x : p)
        s += x;
    return s;
}

class Alphabet {
public:
    Alphabet(Family family, int m, int n) : family_(family), m_(m), n_(n)
    {
        if (m < 2)
            throw std::invalid_argument("alphabet needs m >= 2, got " + std::to_string(m));
        if (n < 0)
            throw std::invalid_argument("alphabet needs n >= 0, got " + std::to_string(n));
    }

    Family family() const noexcept { return family_; }
    bool is_super() const noexcept { return family_ == Family::super; }
    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int size() const noexcept { return m_ + n_; }

    bool contains(Letter a) const noexcept { return a.rank >= 0 && a.rank < size(); }

    void check(Letter a) const
    {
        if (!contains(a))
            throw std::out_of_range("letter rank " + std::to_string(a.rank) + " outside alphabet of size " +
                                    std::to_string(size()));
    }

    Parity parity(Letter a) const
    {
        check(a);
        return (is_super() && a.rank >= m_) ? Parity::odd : Parity::even;
    }
    bool is_odd(Letter a) const noexcept { return is_super() && a.rank >= m_; }
    bool is_even(Letter a) const noexcept { return !is_odd(a); }

    std::strong_ordering compare(Letter a, Letter b) const
    {
        check(a);
        check(b);
        return a.rank <=> b.rank;
    }

    std::vector<Letter> letters() const
    {
        std::vector<Letter> out;
        for (int k = 0; k < size(); ++k)
            out.push_back(Letter{k});
        return out;
    }

    // Row rule: x left of y needs x < y, or x == y for an even letter.
    bool row_ok(Letter x, Letter y) const noexcept { return x < y || (x == y && is_even(x)); }
    // Column rule: x above y needs x < y, or x == y for an odd letter.
    bool col_ok(Letter x, Letter y) const noexcept { return x < y || (x == y && is_odd(x)); }

    std::string name(Letter a) const
    {
        check(a);
        if (a.rank < m_)
            return "b" + std::to_string(m_ - a.rank);
        int k = a.rank - m_;
        if (is_super())
            return std::to_string(2 * k + 1) + "/2";
        return std::to_string(k + 1);
    }

    Letter parse(std::string_view s) const
    {
        auto fail = [&]() -> Letter {
            throw std::invalid_argument("unknown letter '" + std::string(s) + "' for this alphabet");
        };
        auto to_int = [&](std::string_view t) -> int {
            if (t.empty() || t.size() > 6)
                fail();
            int v = 0;
            for (char c : t) {
                if (c < '0' || c > '9')
                    fail();
                v = v * 10 + (c - '0');
            }
            return v;
        };
        if (!s.empty() && s.front() == 'b') {
            int k = to_int(s.substr(1));
            if (k < 1 || k > m_)
                fail();
            return Letter{m_ - k};
        }
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            if (!is_super() || s.substr(slash + 1) != "2")
                fail();
            int num = to_int(s.substr(0, slash));
            if (num % 2 == 0 || (num - 1) / 2 >= n_)
                fail();
            return Letter{m_ + (num - 1) / 2};
        }
        if (is_super())
            fail();
        int k = to_int(s);
        if (k < 1 || k > n_)
            fail();
        return Letter{m_ + k - 1};
    }

    // m-bar, ..., 1-bar, 0, then 1..n-1 (classical) or 1/2..n-3/2 (super). For n = 0 only the bars.
    std::vector<Color> colors() const
    {
        std::vector<Color> out;
        int count = n_ == 0 ? m_ : size();
        for (int c = 0; c < count; ++c)
            out.push_back(Color{c});
        return out;
    }

    bool has_color(Color c) const noexcept { return c.index >= 0 && c.index < (n_ == 0 ? m_ : size()); }

    void check(Color c) const
    {
        if (!has_color(c))
            throw std::out_of_range("color index " + std::to_string(c.index) + " not in the index set");
    }

    static bool is_spin(Color c) noexcept { return c.index == 0; }
    // The odd simple root 0 of the super family.
    bool is_odd_color(Color c) const noexcept { return is_super() && c.index == m_; }

    std::string color_name(Color c) const
    {
        check(c);
        if (c.index == 0)
            return "b" + std::to_string(m_);
        if (c.index < m_)
            return "b" + std::to_string(m_ - c.index);
        if (c.index == m_)
            return "0";
        int k = c.index - m_;
        if (is_super())
            return std::to_string(2 * k - 1) + "/2";
        return std::to_string(k);
    }

    Color parse_color(std::string_view s) const
    {
        for (Color c : colors())
            if (color_name(c) == s)
                return c;
        throw std::invalid_argument("unknown color '" + std::string(s) + "'");
    }

    // The root subtracted from the weight by f-tilde of this color.
    Weight simple_root(Color c) const
    {
        check(c);
        Weight w(static_cast<std::size_t>(size()));
        if (c.index == 0) {
            w.mult[0] = -1;
            w.mult[1] = -1;
        } else {
            w.mult[c.index - 1] = 1;
            w.mult[c.index] = -1;
        }
        return w;
    }

    // Pairing of the simple coroot with a weight.
    int coroot_pairing(Color c, const Weight& w) const
    {
        check(c);
        if (c.index == 0)
            return w.level - w.at(Letter{0}) - w.at(Letter{1});
        if (is_odd_color(c))
            return w.at(Letter{m_ - 1}) + w.at(Letter{m_});
        return w.at(Letter{c.index - 1}) - w.at(Letter{c.index});
    }

    // Whether the weight of (lambda, ell) exists for this alphabet.
    bool in_lattice(const Partition& lambda) const
    {
        Partition p = normalized(lambda);
        if (!is_super())
            return static_cast<int>(p.size()) <= size();
        return static_cast<int>(p.size()) <= m_ || p[m_] <= n_;
    }

    Weight highest_weight(const Partition& lambda, int ell) const
    {
        Partition p = normalized(lambda);
        if (!in_lattice(p))
            throw std::invalid_argument("partition does not fit the alphabet");
        Weight w(static_cast<std::size_t>(size()));
        w.level = ell;
        if (!is_super()) {
            for (std::size_t i = 0; i < p.size(); ++i)
                w.mult[i] = p[i];
            return w;
        }
        for (std::size_t i = 0; i < p.size() && static_cast<int>(i) < m_; ++i)
            w.mult[i] = p[i];
        if (static_cast<int>(p.size()) > m_) {
            Partition tail(p.begin() + m_, p.end());
            Partition tc = conjugate(tail);
            for (std::size_t j = 0; j < tc.size(); ++j)
                w.mult[m_ + j] = tc[j];
        }
        return w;
    }

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    Family family_;
    int m_;
    int n_;
};

} // namespace osp
