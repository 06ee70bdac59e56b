#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "alphabet.hpp"
#include "osptab.hpp"
#include "signature.hpp"
#include "tableau.hpp"

namespace osp {

enum class Op { e, f };

// How a tableau word is laid out as a tensor product of letters.
enum class Reading { word, reverse_word };

inline Reading default_reading(const Alphabet& A) { return A.is_super() ? Reading::reverse_word : Reading::word; }

inline std::optional<Letter> e_letter(const Alphabet& A, Letter a, Color i)
{
    A.check(a);
    A.check(i);
    if (Alphabet::is_spin(i))
        throw std::invalid_argument("the spin color does not act on single letters");
    if (a.rank == i.index)
        return Letter{i.index - 1};
    return std::nullopt;
}

inline std::optional<Letter> f_letter(const Alphabet& A, Letter a, Color i)
{
    A.check(a);
    A.check(i);
    if (Alphabet::is_spin(i))
        throw std::invalid_argument("the spin color does not act on single letters");
    if (a.rank == i.index - 1)
        return Letter{i.index};
    return std::nullopt;
}

namespace detail {
// Lower rule on the factor sequence as given; returns the acting positions.
inline TensorAction lower_rule(const std::vector<Letter>& factors, Color i)
{
    std::vector<SlotSigns> slots;
    slots.reserve(factors.size());
    for (Letter x : factors)
        slots.push_back({x.rank == i.index ? 1 : 0, x.rank == i.index - 1 ? 1 : 0});
    return tensor_rule(slots);
}

inline std::size_t flip(std::size_t p, std::size_t n) { return n - 1 - p; }
} // namespace detail

// Positions (in the given word) where e and f of color i act, for a non-spin color.
inline TensorAction word_action(const Alphabet& A, const std::vector<Letter>& w, Color i, Reading reading)
{
    A.check(i);
    if (Alphabet::is_spin(i))
        throw std::invalid_argument("the spin color does not act on words");
    std::vector<Letter> factors = w;
    if (reading == Reading::reverse_word)
        std::reverse(factors.begin(), factors.end());
    TensorAction act;
    if (A.is_odd_color(i)) {
        // Acts on the rightmost factor whose coroot pairing is positive.
        for (std::size_t p = factors.size(); p-- > 0;) {
            int r = factors[p].rank;
            if (r == i.index - 1 || r == i.index) {
                if (r == i.index) {
                    act.e_slot = p;
                    act.epsilon = 1;
                } else {
                    act.f_slot = p;
                    act.phi = 1;
                }
                break;
            }
        }
    } else {
        bool upper = A.is_super() && i.index < A.m();
        if (upper) {
            std::reverse(factors.begin(), factors.end());
            act = detail::lower_rule(factors, i);
            if (act.e_slot)
                act.e_slot = detail::flip(*act.e_slot, factors.size());
            if (act.f_slot)
                act.f_slot = detail::flip(*act.f_slot, factors.size());
        } else {
            act = detail::lower_rule(factors, i);
        }
    }
    if (reading == Reading::reverse_word) {
        if (act.e_slot)
            act.e_slot = detail::flip(*act.e_slot, w.size());
        if (act.f_slot)
            act.f_slot = detail::flip(*act.f_slot, w.size());
    }
    return act;
}

inline std::optional<std::vector<Letter>> e_word(const Alphabet& A, std::vector<Letter> w, Color i, Reading reading)
{
    auto act = word_action(A, w, i, reading);
    if (!act.e_slot)
        return std::nullopt;
    w[*act.e_slot] = Letter{i.index - 1};
    return w;
}

inline std::optional<std::vector<Letter>> f_word(const Alphabet& A, std::vector<Letter> w, Color i, Reading reading)
{
    auto act = word_action(A, w, i, reading);
    if (!act.f_slot)
        return std::nullopt;
    w[*act.f_slot] = Letter{i.index};
    return w;
}

// Spin color on one column: epsilon = 1 iff the top two entries are the domino (m-bar, m-1-bar),
// phi = 1 iff neither letter occurs.
inline SlotSigns spin_signs(const Column& c)
{
    SlotSigns s;
    s.eps = (c.height() >= 2 && c.entries[0] == Letter{0} && c.entries[1] == Letter{1}) ? 1 : 0;
    s.phi = (!c.contains(Letter{0}) && !c.contains(Letter{1})) ? 1 : 0;
    return s;
}

inline std::optional<SpinColumn> e_spin_bar(const SpinColumn& T)
{
    if (!spin_signs(T.col).eps)
        return std::nullopt;
    Column c = T.col;
    c.entries.erase(c.entries.begin(), c.entries.begin() + 2);
    return SpinColumn{c};
}

inline std::optional<SpinColumn> f_spin_bar(const SpinColumn& T)
{
    if (!spin_signs(T.col).phi)
        return std::nullopt;
    Column c = T.col;
    c.entries.insert(c.entries.begin(), {Letter{0}, Letter{1}});
    return SpinColumn{c};
}

// Columns in the order of the classical tensor product: T_0, T_1^R, T_1^L, ..., T_L^R, T_L^L.
// Super elements use the reverse of this order with every column reversed, which the rules absorb.
inline std::vector<Column> tensor_columns(const std::vector<Part>& parts)
{
    std::vector<Column> cols;
    for (const auto& p : parts)
        std::visit(
            [&](const auto& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SpinColumn>)
                    cols.push_back(x.col);
                else {
                    cols.push_back(x.t.right);
                    cols.push_back(x.t.left);
                }
            },
            p);
    return cols;
}

// Puts columns back; residues are left untouched.
inline std::vector<Part> with_columns(std::vector<Part> parts, const std::vector<Column>& cols)
{
    std::size_t j = 0;
    for (auto& p : parts)
        std::visit(
            [&](auto& x) {
                if constexpr (std::is_same_v<std::decay_t<decltype(x)>, SpinColumn>)
                    x.col = cols.at(j++);
                else {
                    x.t.right = cols.at(j++);
                    x.t.left = cols.at(j++);
                }
            },
            p);
    return parts;
}

// One operator on a tensor of columns listed in classical order.
inline std::optional<std::vector<Column>> apply_columns(const Alphabet& A, std::vector<Column> cols, Color i, Op op)
{
    A.check(i);
    if (Alphabet::is_spin(i)) {
        std::vector<SlotSigns> slots;
        for (auto& c : cols)
            slots.push_back(spin_signs(c));
        auto act = tensor_rule(slots);
        if (op == Op::e) {
            if (!act.e_slot)
                return std::nullopt;
            auto& e = cols[*act.e_slot].entries;
            e.erase(e.begin(), e.begin() + 2);
        } else {
            if (!act.f_slot)
                return std::nullopt;
            auto& e = cols[*act.f_slot].entries;
            e.insert(e.begin(), {Letter{0}, Letter{1}});
        }
        return cols;
    }
    std::vector<Letter> w;
    std::vector<std::pair<std::size_t, std::size_t>> where;
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (std::size_t t = 0; t < cols[j].height(); ++t) {
            w.push_back(cols[j].entries[t]);
            where.emplace_back(j, t);
        }
    auto act = word_action(A, w, i, default_reading(A));
    auto slot = op == Op::e ? act.e_slot : act.f_slot;
    if (!slot)
        return std::nullopt;
    auto [j, t] = where[*slot];
    cols[j].entries[t] = Letter{op == Op::e ? i.index - 1 : i.index};
    std::sort(cols[j].entries.begin(), cols[j].entries.end());
    return cols;
}

// Operator on a single part, re-classified at the same offset. Throws if the result leaves its class.
inline std::optional<Part> apply_part(const Alphabet& A, const Part& p, Color i, Op op)
{
    auto cols = apply_columns(A, tensor_columns({p}), i, op);
    if (!cols)
        return std::nullopt;
    Part q = with_columns({p}, *cols).front();
    if (auto s = std::get_if<OspPair>(&q)) {
        auto c = classify_pair(A, s->t);
        if (!c)
            throw std::domain_error("operator left T(a): " + c.error());
        return Part{c.value()};
    }
    if (auto s = std::get_if<BarPair>(&q)) {
        auto c = classify_bar(A, s->t);
        if (!c)
            throw std::domain_error("operator left the bar class: " + c.error());
        return Part{c.value()};
    }
    return q;
}

inline std::optional<Part> e_pair_bar(const Alphabet& A, const Part& p) { return apply_part(A, p, Color{0}, Op::e); }
inline std::optional<Part> f_pair_bar(const Alphabet& A, const Part& p) { return apply_part(A, p, Color{0}, Op::f); }

// Raw operator on the parts of an element, before any validation.
inline std::optional<std::vector<Part>> apply_raw(const Alphabet& A, const OspTableau& T, Color i, Op op)
{
    auto cols = apply_columns(A, tensor_columns(T.parts), i, op);
    if (!cols)
        return std::nullopt;
    return with_columns(T.parts, *cols);
}

inline std::optional<OspTableau> apply_osp(const Alphabet& A, const OspTableau& T, Color i, Op op)
{
    auto parts = apply_raw(A, T, i, op);
    if (!parts)
        return std::nullopt;
    auto v = validate(A, T.plan, *parts);
    if (!v)
        throw std::domain_error("operator left T(lambda, ell): " + v.error());
    return v.value();
}

inline std::optional<OspTableau> e_osp(const Alphabet& A, const OspTableau& T, Color i) { return apply_osp(A, T, i, Op::e); }
inline std::optional<OspTableau> f_osp(const Alphabet& A, const OspTableau& T, Color i) { return apply_osp(A, T, i, Op::f); }

inline Weight weight(const Alphabet& A, const Part& p)
{
    Weight w(static_cast<std::size_t>(A.size()));
    for (auto& c : tensor_columns({p}))
        w += weight_of(A, c);
    w.level = std::holds_alternative<SpinColumn>(p) ? 1 : 2;
    return w;
}

inline Weight weight(const Alphabet& A, const OspTableau& T)
{
    Weight w(static_cast<std::size_t>(A.size()));
    for (auto& p : T.parts)
        w += weight(A, p);
    return w;
}

// Largest k with e^k T defined.
inline int epsilon(const Alphabet& A, const OspTableau& T, Color i)
{
    int k = 0;
    auto cur = apply_raw(A, T, i, Op::e);
    while (cur) {
        ++k;
        cur = apply_raw(A, OspTableau{T.plan, *cur}, i, Op::e);
    }
    return k;
}

// Largest k with f^k T defined, counting only steps that stay within the box bound.
inline int phi(const Alphabet& A, const OspTableau& T, Color i, std::optional<int> max_boxes = std::nullopt)
{
    int k = 0;
    OspTableau cur = T;
    for (;;) {
        auto nxt = apply_raw(A, cur, i, Op::f);
        if (!nxt)
            return k;
        cur = OspTableau{T.plan, *nxt};
        if (max_boxes && static_cast<int>(cur.total_boxes()) > *max_boxes)
            return k;
        ++k;
    }
}

struct CrystalEdge {
    std::size_t src;
    Color color;
    std::size_t dst;
    friend bool operator==(const CrystalEdge&, const CrystalEdge&) = default;
};

// An f-move whose image exceeds the box bound.
struct TruncatedEdge {
    std::size_t src;
    Color color;
};

// An operator image that is not an element of the set.
struct Escape {
    std::size_t src;
    Color color;
    Op op;
    std::string reason;
};

struct CrystalGraph {
    ShapePlan plan;
    std::optional<int> max_boxes;
    std::vector<OspTableau> vertices;
    std::vector<Weight> weights;
    std::vector<CrystalEdge> edges;    // f-edges src -> dst
    std::vector<CrystalEdge> e_edges;  // e-moves src -> dst
    std::vector<TruncatedEdge> truncated;
    std::vector<Escape> escapes;
    std::vector<std::size_t> sources;  // no e-move applies
    std::vector<int> component;
    int components = 0;

    std::optional<std::size_t> find(const OspTableau& T) const
    {
        auto it = index.find(column_key(T));
        if (it == index.end())
            return std::nullopt;
        return it->second;
    }

    std::map<std::vector<std::vector<int>>, std::size_t> index;
};

struct ExploreOptions {
    std::optional<int> max_boxes;
    int jobs = 1;
    AdmissibilityOptions admissibility;
};

namespace detail {
struct Move {
    Color color;
    Op op;
    std::optional<std::vector<Part>> image;
};
} // namespace detail

// The full graph on enumerate(plan), with every operator applied to every vertex.
inline CrystalGraph explore(const Alphabet& A, const ShapePlan& plan, const ExploreOptions& opt = {})
{
    CrystalGraph g;
    g.plan = plan;
    g.max_boxes = opt.max_boxes;
    g.vertices = enumerate(A, plan, EnumerateOptions{opt.max_boxes, opt.jobs, opt.admissibility});
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        g.index.emplace(column_key(g.vertices[v]), v);
        g.weights.push_back(weight(A, g.vertices[v]));
    }
    auto colors = A.colors();
    std::vector<std::vector<detail::Move>> moves(g.vertices.size());
    auto work = [&](std::size_t stripe, std::size_t stride) {
        for (std::size_t v = stripe; v < g.vertices.size(); v += stride)
            for (Color c : colors)
                for (Op op : {Op::e, Op::f})
                    moves[v].push_back({c, op, apply_raw(A, g.vertices[v], c, op)});
    };
    std::size_t jobs = static_cast<std::size_t>(std::max(1, opt.jobs));
    if (jobs == 1)
        work(0, 1);
    else {
        std::vector<std::thread> pool;
        for (std::size_t s = 0; s < jobs; ++s)
            pool.emplace_back(work, s, jobs);
        for (auto& t : pool)
            t.join();
    }

    std::vector<std::size_t> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        bool source = true;
        for (auto& mv : moves[v]) {
            if (!mv.image)
                continue;
            if (mv.op == Op::e)
                source = false;
            OspTableau img{plan, *mv.image};
            if (mv.op == Op::f && opt.max_boxes && static_cast<int>(img.total_boxes()) > *opt.max_boxes) {
                g.truncated.push_back({v, mv.color});
                continue;
            }
            auto dst = g.find(img);
            if (!dst) {
                auto why = validate(A, plan, *mv.image, opt.admissibility);
                g.escapes.push_back({v, mv.color, mv.op, why ? "valid but missing from the enumeration" : why.error()});
                continue;
            }
            (mv.op == Op::f ? g.edges : g.e_edges).push_back({v, mv.color, *dst});
            parent[root(v)] = root(*dst);
        }
        if (source)
            g.sources.push_back(v);
    }
    std::map<std::size_t, int> label;
    g.component.resize(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        auto r = root(v);
        auto it = label.find(r);
        if (it == label.end())
            it = label.emplace(r, static_cast<int>(label.size())).first;
        g.component[v] = it->second;
    }
    g.components = static_cast<int>(label.size());
    return g;
}

// Vertices from which target is reachable by e-moves.
inline std::vector<bool> reaches_by_raising(const CrystalGraph& g, std::size_t target)
{
    std::vector<std::vector<std::size_t>> preds(g.vertices.size());
    for (auto& e : g.e_edges)
        preds[e.dst].push_back(e.src);
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<std::size_t> stack{target};
    seen[target] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto u : preds[v])
            if (!seen[u]) {
                seen[u] = true;
                stack.push_back(u);
            }
    }
    return seen;
}

// One-column matrix to the column holding each letter with its multiplicity.
inline SpinColumn psi_plus(const Alphabet& A, const BiwordMatrix& m)
{
    if (m.ell() != 1)
        throw std::invalid_argument("psi_plus takes a one-column matrix");
    if (!is_valid(A, m))
        throw std::invalid_argument("invalid matrix column");
    return SpinColumn{Column(m.cols[0])};
}

inline BiwordMatrix psi_plus_inverse(const Alphabet& A, const SpinColumn& s)
{
    if (!is_column(A, s.col))
        throw std::invalid_argument("not a semistandard column");
    return BiwordMatrix{{s.col.entries}};
}

} // namespace osp
