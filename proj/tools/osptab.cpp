// osptab: enumerate ortho-symplectic tableaux, export crystal graphs, characters and K-coefficients,
// and run the verification battery.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "osp/io.hpp"
#include "osp/verify.hpp"

namespace {

using namespace osp;
using io::json;

struct RunConfig {
    std::string family = "classical";
    int m = 0;
    int n = 0;
    std::string lambda = "0";
    std::optional<int> ell;
    std::optional<int> max_boxes;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::string output = "-";
    std::string format = "json";
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_partition(const std::string& s)
{
    Partition p;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size() || v < 0)
                throw std::invalid_argument(tok);
            p.push_back(v);
        } catch (const std::exception&) {
            throw UsageError("bad partition '" + s + "'");
        }
    }
    p = normalized(p);
    if (!is_partition(p))
        throw UsageError("'" + s + "' is not a partition");
    return p;
}

Alphabet alphabet(const RunConfig& c)
{
    if (c.family != "classical" && c.family != "super")
        throw UsageError("--family must be classical or super");
    return Alphabet(c.family == "super" ? Family::super : Family::classical, c.m, c.n);
}

ShapePlan plan_of(const RunConfig& c, const Alphabet& A)
{
    if (!c.ell)
        throw UsageError("--ell is required");
    return shape_plan(parse_partition(c.lambda), *c.ell, A);
}

// Super alphabets give infinite sets, so open-ended commands need a bound.
std::optional<int> bound_of(const RunConfig& c, const Alphabet& A)
{
    if (A.is_super() && !c.max_boxes)
        throw UsageError("super alphabets need --max-boxes");
    return c.max_boxes;
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (path != "-") {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot open " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

void require_format(const RunConfig& c, std::initializer_list<const char*> allowed)
{
    for (auto f : allowed)
        if (c.format == f)
            return;
    throw UsageError("format '" + c.format + "' is not available for this command");
}

int cmd_enumerate(const RunConfig& c)
{
    require_format(c, {"json", "tsv"});
    auto A = alphabet(c);
    auto plan = plan_of(c, A);
    auto elems = enumerate(A, plan, EnumerateOptions{bound_of(c, A), c.jobs, {}});
    Output out(c.output);
    for (auto& T : elems) {
        if (c.format == "json")
            out.stream() << io::osp_json(A, T).dump() << '\n';
        else
            out.stream() << T.total_boxes() << '\t' << io::weight_text(A, weight(A, T)) << '\t' << osp_text(A, T) << '\n';
    }
    std::cerr << elems.size() << " elements\n";
    return 0;
}

int cmd_graph(const RunConfig& c)
{
    require_format(c, {"json", "dot", "tsv"});
    auto A = alphabet(c);
    auto plan = plan_of(c, A);
    auto g = explore(A, plan, ExploreOptions{bound_of(c, A), c.jobs, {}});
    Output out(c.output);
    if (c.format == "json")
        out.stream() << io::graph_json(A, g).dump(1) << '\n';
    else if (c.format == "dot")
        out.stream() << io::dot(A, g);
    else
        for (auto& e : g.edges)
            out.stream() << e.src << '\t' << A.color_name(e.color) << '\t' << e.dst << '\n';
    std::cerr << g.vertices.size() << " vertices, " << g.edges.size() << " edges, " << g.sources.size() << " sources, "
              << g.components << " components, " << g.truncated.size() << " truncated, " << g.escapes.size() << " escapes\n";
    return 0;
}

void write_poly(const RunConfig& c, const Alphabet& A, const CharPoly& p)
{
    Output out(c.output);
    if (c.format == "json")
        out.stream() << io::charpoly_json(A, p).dump() << '\n';
    else
        for (auto& [w, k] : p.terms())
            out.stream() << io::weight_text(A, w) << '\t' << k << '\n';
}

int cmd_char(const RunConfig& c, bool minus_schur)
{
    require_format(c, {"json", "tsv"});
    auto A = alphabet(c);
    auto plan = plan_of(c, A);
    auto bound = bound_of(c, A);
    auto p = s_character(A, plan, bound, c.jobs);
    if (minus_schur) {
        int b = bound ? *bound : default_box_bound(A, plan);
        auto K = k_coefficients(plan, b, A.is_super() ? (1 << 20) : A.size());
        p -= schur_sum(A, plan, K, A.is_super() ? bound : std::nullopt);
    }
    write_poly(c, A, p);
    std::cerr << p.size() << " terms\n";
    return 0;
}

int cmd_kcoef(const RunConfig& c, std::optional<int> max_size)
{
    require_format(c, {"json", "tsv"});
    auto A = alphabet(c);
    auto plan = plan_of(c, A);
    int size = max_size ? *max_size : (c.max_boxes ? *c.max_boxes : default_box_bound(A, plan));
    int max_len = A.is_super() ? (1 << 20) : A.size();
    auto K = k_coefficients(plan, size, max_len);
    Output out(c.output);
    if (c.format == "json")
        out.stream() << io::kcoef_json(K).dump() << '\n';
    else
        for (auto& [mu, k] : K) {
            for (std::size_t i = 0; i < mu.size(); ++i)
                out.stream() << (i ? "," : "") << mu[i];
            out.stream() << '\t' << k << '\n';
        }
    std::cerr << K.size() << " partitions with K > 0\n";
    return 0;
}

// Small classical plans whose crystals are checked against the Weyl dimension.
std::vector<std::pair<Partition, int>> default_classical_plans(int rank)
{
    std::vector<std::pair<Partition, int>> plans{{{}, 1}, {{1}, 1}, {{1, 1}, 2}, {{2}, 2}, {{}, 2}, {{2}, 3}};
    for (int a = 1; a <= rank - 1; ++a)
        if (a != 2)
            plans.push_back({Partition(static_cast<std::size_t>(a), 1), 2});
    return plans;
}

int cmd_verify(const RunConfig& c, bool mutate, bool lemmas, bool plan_given)
{
    require_format(c, {"json"});
    AdmissibilityOptions adm{mutate};
    Report rep;
    if (plan_given) {
        auto A = alphabet(c);
        auto plan = plan_of(c, A);
        GraphSuiteOptions o;
        o.max_boxes = bound_of(c, A);
        o.jobs = c.jobs;
        o.admissibility = adm;
        o.dimension = !A.is_super();
        rep.add(graph_suite(A, plan, o));
    } else {
        for (int rank : {3, 4}) {
            Alphabet A(Family::classical, rank, 0);
            for (auto& [lam, ell] : default_classical_plans(rank)) {
                GraphSuiteOptions o;
                o.jobs = c.jobs;
                o.admissibility = adm;
                o.dimension = true;
                rep.add(graph_suite(A, shape_plan(lam, ell, A), o));
            }
        }
    }
    if (lemmas) {
        lemma::SuiteOptions lo;
        lo.seed = c.seed;
        for (auto fam : {Family::classical, Family::super}) {
            Alphabet A(fam, 4, 2);
            rep.add(lemma::clause_suite(A, lo));
            rep.add(lemma::preservation_suite(A, lo));
            rep.add(lemma::sigma_form_suite(A, lo));
        }
    }
    json checks = json::array();
    std::size_t failed = 0;
    for (auto& ch : rep.checks) {
        checks.push_back(json{{"name", ch.name}, {"pass", ch.pass}, {"checked", ch.checked}, {"detail", ch.detail}});
        if (!ch.pass) {
            ++failed;
            std::cerr << "FAIL " << ch.name << ": " << ch.detail << '\n';
        }
    }
    Output out(c.output);
    out.stream() << json{{"ok", rep.ok()}, {"seed", c.seed}, {"mutated", mutate}, {"checks", checks}}.dump(1) << '\n';
    std::cerr << rep.checks.size() - failed << "/" << rep.checks.size() << " checks passed\n";
    return rep.ok() ? 0 : 1;
}

int cmd_dims(const RunConfig& c)
{
    require_format(c, {"json", "tsv"});
    if (!c.ell)
        throw UsageError("--ell is required");
    int rank = c.m + c.n;
    auto lam = parse_partition(c.lambda);
    auto d = weyl_dim_D(*c.ell, lam, rank);
    Output out(c.output);
    if (c.format == "json")
        out.stream() << json{{"rank", rank}, {"lambda", lam}, {"ell", *c.ell}, {"dim", d}}.dump() << '\n';
    else
        out.stream() << d << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Ortho-symplectic tableaux: enumeration, crystals, characters."};
    app.require_subcommand(1);
    RunConfig cfg;
    auto common = [&](CLI::App* s) {
        s->add_option("--family", cfg.family, "classical or super")->check(CLI::IsMember({"classical", "super"}));
        s->add_option("-m", cfg.m, "number of even letters")->required();
        s->add_option("-n", cfg.n, "number of odd (or extra classical) letters");
        s->add_option("--lambda", cfg.lambda, "partition, e.g. 3,2,1");
        s->add_option("--ell", cfg.ell, "level");
        s->add_option("--max-boxes", cfg.max_boxes, "box bound (required for super)");
        s->add_option("--seed", cfg.seed, "seed for randomized suites");
        s->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
        s->add_option("--output,-o", cfg.output, "output path, - for stdout");
        s->add_option("--format", cfg.format, "json, dot or tsv")->check(CLI::IsMember({"json", "dot", "tsv"}));
    };
    auto* en = app.add_subcommand("enumerate", "list T(lambda, ell), one JSON object per line");
    auto* gr = app.add_subcommand("graph", "crystal graph as JSON or DOT");
    auto* ch = app.add_subcommand("char", "character as a polynomial");
    auto* kc = app.add_subcommand("kcoef", "K-coefficients of the Schur expansion");
    auto* ve = app.add_subcommand("verify", "run the verification battery");
    auto* di = app.add_subcommand("dims", "Weyl dimension for D_{m+n}");
    for (auto* s : {en, gr, ch, kc, ve, di})
        common(s);
    bool minus_schur = false;
    ch->add_flag("--minus-schur", minus_schur, "subtract z^ell sum K_mu s_mu");
    std::optional<int> max_size;
    kc->add_option("--max-size", max_size, "largest |mu|");
    bool mutate = false, lemmas = false;
    ve->add_flag("--mutate-admissibility", mutate, "make the admissibility height condition strict (mutation test)");
    ve->add_flag("--lemmas", lemmas, "also run the raising-operator clause and admissibility suites over J_{4+2}, J_{4|2}");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        if (*en)
            return cmd_enumerate(cfg);
        if (*gr)
            return cmd_graph(cfg);
        if (*ch)
            return cmd_char(cfg, minus_schur);
        if (*kc)
            return cmd_kcoef(cfg, max_size);
        if (*ve)
            return cmd_verify(cfg, mutate, lemmas, ve->count("--ell") > 0);
        if (*di)
            return cmd_dims(cfg);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
