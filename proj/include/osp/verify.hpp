#pragma once

#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "character.hpp"
#include "crystal.hpp"
#include "osptab.hpp"

namespace osp {

struct Check {
    Check() = default;
    explicit Check(std::string n) : name(std::move(n)) {}

    std::string name;
    bool pass = true;
    std::size_t checked = 0;
    std::string detail;

    void fail(const std::string& why)
    {
        if (pass)
            detail = why;
        pass = false;
    }
};

struct Report {
    std::vector<Check> checks;

    bool ok() const
    {
        for (auto& c : checks)
            if (!c.pass)
                return false;
        return true;
    }
    void add(Check c) { checks.push_back(std::move(c)); }
    void add(const std::vector<Check>& cs) { checks.insert(checks.end(), cs.begin(), cs.end()); }
};

inline std::string plan_text(const ShapePlan& p)
{
    std::string s = "((";
    for (std::size_t i = 0; i < p.lambda.size(); ++i)
        s += (i ? "," : "") + std::to_string(p.lambda[i]);
    if (p.lambda.empty())
        s += "0";
    return s + ")," + std::to_string(p.ell) + ")";
}

inline std::string alphabet_text(const Alphabet& A)
{
    return "J_{" + std::to_string(A.m()) + (A.is_super() ? "|" : "+") + std::to_string(A.n()) + "}";
}

// Every operator image is an element, null, or beyond the bound.
inline Check check_closure(const Alphabet& A, const CrystalGraph& g, const std::string& tag)
{
    Check c{"closure " + tag};
    c.checked = g.vertices.size() * A.colors().size() * 2;
    if (!g.escapes.empty()) {
        auto& e = g.escapes.front();
        c.fail(std::to_string(g.escapes.size()) + " escapes; first from " + osp_text(A, g.vertices[e.src]) + " under " +
               (e.op == Op::e ? "e_" : "f_") + A.color_name(e.color) + ": " + e.reason);
    }
    return c;
}

// f b = b' iff e b' = b, and f lowers the weight by the simple root.
inline Check check_axioms(const Alphabet& A, const CrystalGraph& g, const std::string& tag)
{
    Check c{"axioms " + tag};
    std::set<std::tuple<std::size_t, int, std::size_t>> f, e;
    for (auto& x : g.edges)
        f.emplace(x.src, x.color.index, x.dst);
    for (auto& x : g.e_edges)
        e.emplace(x.src, x.color.index, x.dst);
    for (auto& x : g.edges) {
        ++c.checked;
        if (!e.count({x.dst, x.color.index, x.src}))
            c.fail("f_" + A.color_name(x.color) + " edge " + std::to_string(x.src) + "->" + std::to_string(x.dst) + " has no inverse e-move");
        if (g.weights[x.dst] != g.weights[x.src] - A.simple_root(x.color))
            c.fail("f_" + A.color_name(x.color) + " edge " + std::to_string(x.src) + "->" + std::to_string(x.dst) + " has the wrong weight");
    }
    for (auto& x : g.e_edges) {
        ++c.checked;
        if (!f.count({x.dst, x.color.index, x.src}))
            c.fail("e_" + A.color_name(x.color) + " move " + std::to_string(x.src) + "->" + std::to_string(x.dst) + " has no inverse f-edge");
    }
    return c;
}

inline Check check_connected(const CrystalGraph& g, const std::string& tag)
{
    Check c{"connected " + tag};
    c.checked = g.vertices.size();
    if (g.components != 1)
        c.fail(std::to_string(g.components) + " components");
    return c;
}

// The highest weight element is the unique source and has weight Lambda(lambda, ell).
inline Check check_unique_source(const Alphabet& A, const CrystalGraph& g, const std::string& tag)
{
    Check c{"unique source " + tag};
    c.checked = g.vertices.size();
    auto H = highest_weight_element(A, g.plan);
    auto h = g.find(H);
    if (!h) {
        c.fail("highest weight element not enumerated");
        return c;
    }
    if (g.weights[*h] != A.highest_weight(g.plan.lambda, g.plan.ell))
        c.fail("highest weight element has weight " + std::to_string(g.weights[*h].level));
    if (g.sources.size() != 1 || g.sources.front() != *h) {
        std::string extra;
        for (auto s : g.sources)
            if (s != *h) {
                extra = osp_text(A, g.vertices[s]);
                break;
            }
        c.fail(std::to_string(g.sources.size()) + " sources" + (extra.empty() ? "" : "; another is " + extra));
    }
    return c;
}

// Weaker than a unique source: the graph is connected and the highest weight element is one of its sources.
inline Check check_highest_is_source(const Alphabet& A, const CrystalGraph& g, const std::string& tag)
{
    Check c{"highest weight element is a source " + tag};
    c.checked = g.vertices.size();
    auto h = g.find(highest_weight_element(A, g.plan));
    if (!h) {
        c.fail("highest weight element not enumerated");
        return c;
    }
    if (std::find(g.sources.begin(), g.sources.end(), *h) == g.sources.end())
        c.fail("highest weight element is not a source");
    if (g.weights[*h] != A.highest_weight(g.plan.lambda, g.plan.ell))
        c.fail("highest weight element has the wrong weight");
    if (g.components != 1)
        c.fail(std::to_string(g.components) + " components");
    return c;
}

// Raising moves alone lead to the highest weight element from every vertex.
inline Check check_raising_to_highest(const Alphabet& A, const CrystalGraph& g, const std::string& tag)
{
    Check c{"raising reaches highest " + tag};
    c.checked = g.vertices.size();
    auto h = g.find(highest_weight_element(A, g.plan));
    if (!h) {
        c.fail("highest weight element not enumerated");
        return c;
    }
    auto seen = reaches_by_raising(g, *h);
    std::size_t bad = 0;
    std::size_t first = 0;
    for (std::size_t v = 0; v < seen.size(); ++v)
        if (!seen[v] && bad++ == 0)
            first = v;
    if (bad)
        c.fail(std::to_string(bad) + " vertices never reach it, e.g. " + osp_text(A, g.vertices[first]));
    return c;
}

inline Check check_dimension(const Alphabet& A, const CrystalGraph& g, const std::string& tag)
{
    Check c{"Weyl dimension " + tag};
    c.checked = 1;
    auto d = weyl_dim_D(g.plan.ell, g.plan.lambda, A.size());
    if (d != g.vertices.size())
        c.fail(std::to_string(g.vertices.size()) + " elements but dimension " + std::to_string(d));
    return c;
}

inline Check check_pieri(const Alphabet& A, const ShapePlan& plan, std::optional<int> bound, int jobs, const std::string& tag)
{
    Check c{"Pieri bijection " + tag};
    auto rep = verify_pieri(A, plan, bound, jobs);
    c.checked = rep.elements;
    if (!rep.ok())
        c.fail(rep.first_failure);
    return c;
}

// Character of the elements against z^ell sum K_mu s_mu; K from the plan alone.
inline Check check_character(const Alphabet& A, const ShapePlan& plan, std::optional<int> bound, int jobs, const std::string& tag)
{
    Check c{"character " + tag};
    int b = bound ? *bound : default_box_bound(A, plan);
    auto K = k_coefficients(plan, b, A.is_super() ? (1 << 20) : A.size());
    auto lhs = s_character(A, plan, b, jobs);
    auto rhs = schur_sum(A, plan, K, A.is_super() ? std::optional<int>(b) : std::nullopt);
    c.checked = lhs.size();
    auto diff = lhs - rhs;
    if (!diff.empty())
        c.fail(std::to_string(diff.size()) + " terms differ");
    return c;
}

struct GraphSuiteOptions {
    std::optional<int> max_boxes;
    int jobs = 1;
    AdmissibilityOptions admissibility;
    bool dimension = false;       // classical only
    bool unique_source = true;
    bool pieri = true;
    bool character = true;
};

inline std::vector<Check> graph_suite(const Alphabet& A, const ShapePlan& plan, const GraphSuiteOptions& opt)
{
    std::string tag = plan_text(plan) + " over " + alphabet_text(A);
    auto g = explore(A, plan, ExploreOptions{opt.max_boxes, opt.jobs, opt.admissibility});
    std::vector<Check> out{check_closure(A, g, tag), check_axioms(A, g, tag), check_connected(g, tag)};
    if (opt.unique_source)
        out.push_back(check_unique_source(A, g, tag));
    else
        out.push_back(check_highest_is_source(A, g, tag));
    if (opt.dimension)
        out.push_back(check_dimension(A, g, tag));
    if (opt.pieri)
        out.push_back(check_pieri(A, plan, opt.max_boxes, opt.jobs, tag));
    if (opt.character)
        out.push_back(check_character(A, plan, opt.max_boxes, opt.jobs, tag));
    return out;
}

// Single-part and two-part behaviour of the spin-color raising operator.
namespace lemma {

inline bool has_domino(const Column& c)
{
    return c.height() >= 2 && c.entries[0] == Letter{0} && c.entries[1] == Letter{1};
}

inline Column drop_domino(const Column& c) { return Column(std::vector<Letter>(c.entries.begin() + 2, c.entries.end())); }

inline int count01(const Column& c) { return (c.contains(Letter{0}) ? 1 : 0) + (c.contains(Letter{1}) ? 1 : 0); }

inline Column drop_top(const Column& c) { return Column(std::vector<Letter>(c.entries.begin() + 1, c.entries.end())); }

// The other of the letters 0, 1.
inline std::optional<Letter> other01(std::optional<Letter> x)
{
    if (!x || x->rank > 1)
        return std::nullopt;
    return Letter{1 - x->rank};
}

struct Instance {
    OspPair T;
    OspPair Tp;  // e-tilde T
    SplitView v;
    SplitView vp;
    bool on_right = false;
};

struct Clause {
    std::string name;
    std::function<bool(const Instance&)> applies;
    std::function<bool(const Instance&)> holds;
};

inline int ht(const Column& c) { return static_cast<int>(c.height()); }

inline bool minus_other(const Column& big, const Column& small, std::optional<Letter> top)
{
    auto x = other01(top);
    return has_domino(big) && x && big.contains(*x) && big.without(*x) == small;
}

inline std::vector<Clause> right_clauses()
{
    auto eq = [](const Instance& I) { return I.T.residue == I.Tp.residue; };
    auto eq1 = [](const Instance& I) { return I.T.residue == 1 && I.Tp.residue == 1; };
    auto ne = [](const Instance& I) { return I.T.residue != I.Tp.residue; };
    auto ten = [](const Instance& I) { return I.T.residue == 1 && I.Tp.residue == 0; };
    return {
        {"R1 LT unchanged", eq, [](const Instance& I) { return I.vp.LS == I.v.LS; }},
        {"R2 RT loses its domino", eq, [](const Instance& I) { return has_domino(I.v.RT) && I.vp.RT == drop_domino(I.v.RT); }},
        {"R3 TL* unchanged", eq1, [](const Instance& I) { return *I.vp.Lstar == *I.v.Lstar; }},
        {"R4 TR* loses its domino", eq1, [](const Instance& I) { return has_domino(*I.v.Rstar) && *I.vp.Rstar == drop_domino(*I.v.Rstar); }},
        {"R5 residue drops with the height relation", ne,
         [](const Instance& I) { return I.T.residue == 1 && I.Tp.residue == 0 && ht(I.T.L()) - I.T.a() == ht(I.T.R()) - 2; }},
        {"R6 TL and LT hold one of 0,1", ten, [](const Instance& I) { return count01(I.T.L()) == 1 && count01(I.v.LS) == 1; }},
        {"R7 LT loses its top", ten, [](const Instance& I) { return !I.v.LS.empty() && I.vp.LS == drop_top(I.v.LS); }},
        {"R8 RT loses the other letter", ten, [](const Instance& I) { return minus_other(I.v.RT, I.vp.RT, I.T.L().top()); }},
        {"R9 TL* is TL plus the other letter", ten,
         [](const Instance& I) { return I.Tp.L() == I.T.L() && minus_other(*I.v.Lstar, I.T.L(), I.T.L().top()); }},
        {"R10 TR* has one of 0,1 and loses it", ten,
         [](const Instance& I) {
             const Column& s = *I.v.Rstar;
             if (count01(s) != 1)
                 return false;
             Letter x = s.contains(Letter{0}) ? Letter{0} : Letter{1};
             return I.Tp.R() == s.without(x);
         }},
    };
}

inline std::vector<Clause> left_clauses()
{
    auto eq = [](const Instance& I) { return I.T.residue == I.Tp.residue; };
    auto eq1 = [](const Instance& I) { return I.T.residue == 1 && I.Tp.residue == 1; };
    auto ne = [](const Instance& I) { return I.T.residue != I.Tp.residue; };
    auto up = [](const Instance& I) { return I.T.residue == 0 && I.Tp.residue == 1; };
    return {
        {"L1 LT loses its domino", eq, [](const Instance& I) { return has_domino(I.v.LS) && I.vp.LS == drop_domino(I.v.LS); }},
        {"L2 RT unchanged", eq, [](const Instance& I) { return I.vp.RT == I.v.RT; }},
        {"L3 TL* loses its domino", eq1, [](const Instance& I) { return has_domino(*I.v.Lstar) && *I.vp.Lstar == drop_domino(*I.v.Lstar); }},
        {"L4 TR* unchanged", eq1, [](const Instance& I) { return *I.vp.Rstar == *I.v.Rstar; }},
        {"L5 residue rises with the height relation", ne,
         [](const Instance& I) { return I.T.residue == 0 && I.Tp.residue == 1 && ht(I.T.L()) - I.T.a() == ht(I.T.R()); }},
        {"L6 TR and LT hold one of 0,1", up, [](const Instance& I) { return count01(I.T.R()) == 1 && count01(I.v.LS) == 1; }},
        {"L7 LT loses its top", up, [](const Instance& I) { return !I.v.LS.empty() && I.vp.LS == drop_top(I.v.LS); }},
        {"L8 RT loses the other letter", up, [](const Instance& I) { return minus_other(I.v.RT, I.vp.RT, I.T.R().top()); }},
        {"L9 T'L* is T'L plus the top of TR", up,
         [](const Instance& I) { return I.T.R().top() && *I.vp.Lstar == I.Tp.L().with(*I.T.R().top()); }},
        {"L10 T'R* is TR without its top", up, [](const Instance& I) { return !I.T.R().empty() && *I.vp.Rstar == drop_top(I.T.R()); }},
    };
}

struct SuiteOptions {
    int max_offset = 3;
    int part_boxes = 8;
    std::size_t samples = 2000;
    std::uint64_t seed = 1;
    std::size_t attempts = 4000000;  // rejection sampling budget per alphabet for two-part cases
};

// Re-classifies a part at the same offset after an operator changed its columns.
inline std::optional<Part> reclassify(const Alphabet& A, const Part& p)
{
    if (auto s = std::get_if<OspPair>(&p)) {
        auto c = classify_pair(A, s->t);
        if (!c)
            return std::nullopt;
        return Part{c.value()};
    }
    if (auto s = std::get_if<BarPair>(&p)) {
        auto c = classify_bar(A, s->t);
        if (!c)
            return std::nullopt;
        return Part{c.value()};
    }
    return p;
}

// e-tilde of the spin color on one pair; a pair leaving T(a) is recorded in `escaped`.
inline std::vector<Instance> single_population(const Alphabet& A, const SuiteOptions& opt, Check& escaped)
{
    std::vector<Instance> out;
    for (int a = 0; a <= opt.max_offset; ++a)
        for (auto& T : pair_candidates(A, a, opt.part_boxes)) {
            auto cols = apply_columns(A, {T.R(), T.L()}, Color{0}, Op::e);
            if (!cols)
                continue;
            ++escaped.checked;
            auto c = classify_pair(A, (*cols)[1], (*cols)[0], a);
            if (!c) {
                escaped.fail("e-tilde of " + part_text(A, T) + " leaves T(a): " + c.error());
                continue;
            }
            Instance I{T, c.value(), split_view(A, T), split_view(A, c.value()), (*cols)[0] != T.R()};
            out.push_back(std::move(I));
        }
    return out;
}

inline Check run_clause(const Alphabet& A, const Clause& cl, const std::vector<const Instance*>& pop, const SuiteOptions& opt,
                        std::uint64_t salt)
{
    Check c{cl.name + " over " + alphabet_text(A)};
    std::vector<const Instance*> applicable;
    for (auto* I : pop)
        if (cl.applies(*I))
            applicable.push_back(I);
    if (applicable.empty()) {
        c.fail("no applicable instances within " + std::to_string(opt.part_boxes) + " boxes");
        return c;
    }
    std::mt19937_64 rng(opt.seed * 1000003u + salt);
    std::uniform_int_distribution<std::size_t> pick(0, applicable.size() - 1);
    for (std::size_t s = 0; s < opt.samples; ++s) {
        const Instance& I = *applicable[pick(rng)];
        ++c.checked;
        if (!cl.holds(I))
            c.fail("fails at " + part_text(A, I.T) + " -> " + part_text(A, I.Tp));
    }
    c.detail = c.pass ? std::to_string(applicable.size()) + " distinct applicable instances" : c.detail;
    return c;
}

// Clauses on single pairs, split by the column e-tilde acts on.
inline std::vector<Check> clause_suite(const Alphabet& A, const SuiteOptions& opt)
{
    Check escaped{"e-tilde keeps T(a) over " + alphabet_text(A)};
    auto pop = single_population(A, opt, escaped);
    std::vector<const Instance*> right, left;
    for (auto& I : pop)
        (I.on_right ? right : left).push_back(&I);
    std::vector<Check> out{escaped};
    std::uint64_t salt = 0;
    for (auto& cl : right_clauses())
        out.push_back(run_clause(A, cl, right, opt, ++salt));
    for (auto& cl : left_clauses())
        out.push_back(run_clause(A, cl, left, opt, ++salt));
    return out;
}

// T2 sits to the left of T1. The raising operator acts on the tensor T1 (x) T2 in classical order.
inline std::vector<Check> preservation_suite(const Alphabet& A, const SuiteOptions& opt)
{
    std::vector<std::vector<Part>> pairs(static_cast<std::size_t>(opt.max_offset + 1));
    for (int a = 0; a <= opt.max_offset; ++a)
        for (auto& p : pair_candidates(A, a, opt.part_boxes))
            pairs[static_cast<std::size_t>(a)].push_back(p);
    std::vector<Part> spins, spins_minus, bars;
    for (auto s : {SpinSign::plus, SpinSign::minus})
        for (auto& c : spin_candidates(A, s, opt.part_boxes)) {
            spins.push_back(c);
            if (s == SpinSign::minus)
                spins_minus.push_back(c);
        }
    for (auto& b : bar_candidates(A, opt.part_boxes))
        bars.push_back(b);

    const std::vector<std::string> names{"pair/pair acting on T2R", "pair/pair acting on T2L", "pair/pair acting on T1R",
                                         "pair/pair acting on T1L", "pair/spin",               "bar/spin",
                                         "pair/bar",                "bar/bar"};
    std::vector<Check> out;
    for (auto& n : names)
        out.push_back(Check{"preserves admissibility " + n + " over " + alphabet_text(A)});
    std::mt19937_64 rng(opt.seed * 7919u + 17u);
    auto pick = [&](const std::vector<Part>& v) -> const Part& {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    auto done = [&] {
        for (auto& c : out)
            if (c.checked < opt.samples)
                return false;
        return true;
    };
    // Buckets filled by each kind of draw; a kind is skipped once its buckets are full.
    const std::vector<std::vector<std::size_t>> feeds{{0, 1, 2, 3}, {4}, {5}, {6}, {7}};
    auto full = [&](int combo) {
        for (auto b : feeds[static_cast<std::size_t>(combo)])
            if (out[b].checked < opt.samples)
                return false;
        return true;
    };
    int combo = -1;
    for (std::size_t t = 0; t < opt.attempts && !done(); ++t) {
        do
            combo = (combo + 1) % 5;
        while (full(combo));
        Part T2, T1;
        if (combo == 0) {
            int a1 = std::uniform_int_distribution<int>(0, opt.max_offset)(rng);
            int a2 = std::uniform_int_distribution<int>(a1, opt.max_offset)(rng);
            T1 = pick(pairs[static_cast<std::size_t>(a1)]);
            T2 = pick(pairs[static_cast<std::size_t>(a2)]);
        } else if (combo == 1) {
            T1 = pick(spins);
            int r = std::get<SpinColumn>(T1).residue();
            T2 = pick(pairs[static_cast<std::size_t>(std::uniform_int_distribution<int>(r, opt.max_offset)(rng))]);
        } else if (combo == 2) {
            T1 = pick(spins_minus);
            T2 = pick(bars);
        } else if (combo == 3) {
            T1 = pick(bars);
            T2 = pick(pairs[static_cast<std::size_t>(std::uniform_int_distribution<int>(1, opt.max_offset)(rng))]);
        } else {
            T1 = pick(bars);
            T2 = pick(bars);
        }
        if (!is_admissible(A, T2, T1))
            continue;
        auto before = tensor_columns({T1, T2});
        auto after = apply_columns(A, before, Color{0}, Op::e);
        if (!after)
            continue;
        std::size_t acted = 0;
        while (acted < before.size() && before[acted] == (*after)[acted])
            ++acted;
        std::size_t n1 = tensor_columns({T1}).size();
        std::size_t idx;
        if (combo == 0)
            idx = acted == 0 ? 2 : acted == 1 ? 3 : acted == 2 ? 0 : 1;
        else
            idx = static_cast<std::size_t>(3 + combo);
        Check& c = out[idx];
        if (c.checked >= opt.samples)
            continue;
        ++c.checked;
        auto parts = with_columns({T1, T2}, *after);
        auto P1 = reclassify(A, parts[0]);
        auto P2 = reclassify(A, parts[1]);
        std::string where = part_text(A, T2) + " over " + part_text(A, T1);
        if (!P1 || !P2) {
            c.fail("a part leaves its class at " + where);
            continue;
        }
        if (!is_admissible(A, *P2, *P1))
            c.fail("not admissible after e-tilde at " + where + " (acting on column " + std::to_string(acted) + " of " +
                   std::to_string(n1 + 2) + ")");
    }
    for (auto& c : out)
        if (c.checked < opt.samples)
            c.fail("only " + std::to_string(c.checked) + " applicable instances found in " + std::to_string(opt.attempts) + " draws");
    return out;
}

// Literal and signature forms of admissibility agree on random adjacent parts.
inline Check sigma_form_suite(const Alphabet& A, const SuiteOptions& opt, std::size_t draws = 20000)
{
    Check c{"admissibility literal = signature form over " + alphabet_text(A)};
    std::vector<std::vector<Part>> pairs(static_cast<std::size_t>(opt.max_offset + 1));
    for (int a = 0; a <= opt.max_offset; ++a)
        for (auto& p : pair_candidates(A, a, opt.part_boxes))
            pairs[static_cast<std::size_t>(a)].push_back(p);
    std::vector<Part> spins, bars;
    for (auto s : {SpinSign::plus, SpinSign::minus})
        for (auto& x : spin_candidates(A, s, opt.part_boxes))
            spins.push_back(x);
    for (auto& b : bar_candidates(A, opt.part_boxes))
        bars.push_back(b);
    std::mt19937_64 rng(opt.seed * 31u + 5u);
    auto pick = [&](const std::vector<Part>& v) -> const Part& {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    std::size_t admissible = 0;
    for (std::size_t t = 0; t < draws; ++t) {
        int combo = static_cast<int>(t % 3);
        int a1 = std::uniform_int_distribution<int>(0, opt.max_offset)(rng);
        int a2 = std::uniform_int_distribution<int>(a1, opt.max_offset)(rng);
        const Part& T1 = combo == 0 ? pick(pairs[static_cast<std::size_t>(a1)]) : combo == 1 ? pick(spins) : pick(bars);
        if (combo > 0)
            a2 = std::max(a2, combo == 1 ? std::get<SpinColumn>(T1).residue() : 1);
        const Part& T2 = combo == 2 && t % 2 ? pick(bars) : pick(pairs[static_cast<std::size_t>(a2)]);
        ++c.checked;
        bool lit = is_admissible(A, T2, T1);
        admissible += lit;
        if (lit != is_admissible_sigma(A, T2, T1))
            c.fail("forms disagree at " + part_text(A, T2) + " over " + part_text(A, T1));
    }
    if (c.pass)
        c.detail = std::to_string(admissible) + " admissible draws";
    return c;
}

} // namespace lemma

} // namespace osp
