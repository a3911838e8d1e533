// Command-line front end: construction, verification, exact search, matching,
// bounds and file round-tripping, with JSON run reports.
//
// Exit codes: 0 ok, 1 verified violation, 2 search/match failure or
// inconclusive result, 64 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gramsey/bounds.hpp"
#include "gramsey/construct.hpp"
#include "gramsey/io.hpp"
#include "gramsey/matcher.hpp"
#include "gramsey/repeatgraph.hpp"
#include "gramsey/search.hpp"
#include "gramsey/subsets.hpp"
#include "gramsey/verify.hpp"

namespace {

using gramsey::ViolationWitness;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitFailure = 2;
constexpr int kExitUsage = 64;

json witness_to_json(const ViolationWitness& w) {
    json j;
    j["kind"] = w.kind;
    j["subset"] = w.subset;
    if (w.colors_seen) j["colors_seen"] = *w.colors_seen;
    if (w.repeats) j["repeats"] = *w.repeats;
    if (w.induced_edges) j["induced_edges"] = *w.induced_edges;
    return j;
}

struct Report {
    std::string command;
    json parameters = json::object();
    std::string outcome = "ok";
    json payload = json::object();
    json statistics = json::object();
    std::optional<std::uint64_t> seed;
    int exit_code = kExitOk;
};

bool g_plain = false;

int emit(const Report& r) {
    if (g_plain) {
        std::cout << r.command << ": " << r.outcome << '\n';
        if (!r.payload.empty()) std::cout << r.payload.dump(2) << '\n';
    } else {
        json j;
        j["schema"] = 1;
        j["command"] = r.command;
        j["parameters"] = r.parameters;
        j["outcome"] = r.outcome;
        j["payload"] = r.payload;
        j["statistics"] = r.statistics;
        j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
        std::cout << j.dump(2) << '\n';
    }
    return r.exit_code;
}

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

json search_stats(const gramsey::SearchStats& s) {
    return json{{"nodes_explored", s.nodes_explored}, {"elapsed_seconds", s.elapsed_seconds}};
}

// ----- verify -------------------------------------------------------------

int run_verify_coloring(const std::string& file, int p, int q) {
    auto t0 = std::chrono::steady_clock::now();
    gramsey::EdgeColoring c = gramsey::read_coloring_file(file);
    auto w = gramsey::check_pq_coloring(c, p, q);
    Report r;
    r.command = "verify coloring";
    r.parameters = {{"file", file}, {"p", p}, {"q", q}};
    r.payload["n"] = c.n();
    r.payload["palette_size"] = c.palette_size();
    if (w) {
        r.outcome = "violation";
        r.payload["witness"] = witness_to_json(*w);
        r.exit_code = kExitViolation;
    }
    r.statistics = {{"subsets", gramsey::binomial(c.n(), p)},
                    {"elapsed_seconds", elapsed_since(t0)}};
    return emit(r);
}

int run_verify_hypergraph(const std::string& file, int s, long long k,
                          std::optional<int> defh_ell) {
    auto t0 = std::chrono::steady_clock::now();
    gramsey::MultiHypergraph h = gramsey::read_hypergraph_file(file);
    Report r;
    r.command = "verify hypergraph";
    r.parameters = {{"file", file}, {"s", s}, {"k", k}};
    if (defh_ell) r.parameters["defH"] = *defh_ell;
    r.payload["n"] = h.n();
    r.payload["edges"] = h.total_edge_count();
    auto w = gramsey::check_sk_free(h, s, k);
    if (!w && defh_ell) w = gramsey::check_defH_properties(h, *defh_ell);
    if (w) {
        r.outcome = "violation";
        r.payload["witness"] = witness_to_json(*w);
        r.exit_code = kExitViolation;
    }
    r.statistics = {{"elapsed_seconds", elapsed_since(t0)}};
    return emit(r);
}

// ----- repeat build --------------------------------------------------------

int run_repeat_build(const std::string& coloring_file, const std::string& mode,
                     const std::string& padding, const std::string& out) {
    gramsey::EdgeColoring c = gramsey::read_coloring_file(coloring_file);
    gramsey::MultiHypergraph h(1);
    if (mode == "quad") {
        gramsey::RepeatBuildPolicy policy;
        policy.padding = padding == "padded" ? gramsey::PaddingRule::Padded
                                             : gramsey::PaddingRule::Strict;
        h = gramsey::build_repeat_quadratic(c, policy);
    } else {
        h = gramsey::build_repeat_linear(c);
    }
    gramsey::write_hypergraph_file(out, h);
    Report r;
    r.command = "repeat build";
    r.parameters = {{"coloring", coloring_file}, {"mode", mode}, {"padding", padding}};
    r.payload = {{"out", out},
                 {"distinct_edges", h.distinct_edge_count()},
                 {"total_edges", h.total_edge_count()}};
    return emit(r);
}

// ----- construct / design --------------------------------------------------

int run_construct_six14(int n, const std::string& out) {
    gramsey::EdgeColoring c = gramsey::coloring_614(n);
    gramsey::write_coloring_file(out, c);
    Report r;
    r.command = "construct six14";
    r.parameters = {{"n", n}};
    r.payload = {{"out", out}, {"palette_size", c.palette_size()}};
    return emit(r);
}

int run_construct_quad(const std::string& hypergraph_file, int ell, const std::string& out) {
    gramsey::MultiHypergraph h = gramsey::read_hypergraph_file(hypergraph_file);
    Report r;
    r.command = "construct quad";
    r.parameters = {{"hypergraph", hypergraph_file}, {"ell", ell}};
    try {
        gramsey::EdgeColoring c = gramsey::quad_coloring_from_hypergraph(h, ell);
        gramsey::write_coloring_file(out, c);
        r.payload = {{"out", out}, {"palette_size", c.palette_size()}};
    } catch (const gramsey::StructuralPreconditionError& e) {
        r.outcome = "violation";
        r.payload["witness"] = witness_to_json(e.witness);
        r.exit_code = kExitViolation;
    }
    return emit(r);
}

int run_design_make(int n, const std::string& mode, const std::string& file,
                    const std::string& out) {
    gramsey::BlockDesign d;
    if (mode == "exact") {
        d = gramsey::make_design(n, gramsey::DesignMode::Exact);
    } else if (mode == "greedy") {
        d = gramsey::make_design(n, gramsey::DesignMode::Greedy);
    } else {
        if (file.empty()) throw CLI::ValidationError("--mode file requires --file");
        d = gramsey::design_from_hypergraph(gramsey::read_hypergraph_file(file));
        if (d.n != n)
            throw std::invalid_argument("design file has n=" + std::to_string(d.n) +
                                        ", expected " + std::to_string(n));
    }
    if (!out.empty()) gramsey::write_hypergraph_file(out, gramsey::design_to_hypergraph(d));
    Report r;
    r.command = "design make";
    r.parameters = {{"n", n}, {"mode", mode}};
    if (!file.empty()) r.parameters["file"] = file;
    r.payload = {{"blocks", d.blocks.size()}, {"perfect", d.perfect}};
    if (!out.empty()) r.payload["out"] = out;
    return emit(r);
}

// ----- search ---------------------------------------------------------------

int finish_search_report(Report& r, gramsey::SearchStatus status, long long value,
                         const gramsey::SearchStats& stats, const std::string& note,
                         const std::string& witness_text, const std::string& emit_witness) {
    r.payload["value"] = value;
    if (!note.empty()) r.payload["note"] = note;
    r.payload["witness"] = witness_text;
    if (!emit_witness.empty()) {
        std::ofstream out(emit_witness);
        if (!out) throw std::runtime_error("cannot open file for writing: " + emit_witness);
        out << witness_text;
        r.payload["witness_file"] = emit_witness;
    }
    r.statistics = search_stats(stats);
    if (status == gramsey::SearchStatus::Inconclusive) {
        r.outcome = "inconclusive";
        r.exit_code = kExitFailure;
    }
    return emit(r);
}

int run_search_f(int n, int p, int q, long long budget, const std::string& emit_witness) {
    gramsey::ColoringSearchResult res = gramsey::exact_f(n, p, q, budget);
    Report r;
    r.command = "search f";
    r.parameters = {{"n", n}, {"p", p}, {"q", q}, {"budget", budget}};
    return finish_search_report(r, res.status, res.value, res.stats, res.note,
                                gramsey::coloring_to_string(*res.witness), emit_witness);
}

int run_search_family(const std::string& which, int n, int s, long long k, int rr, int ell,
                      long long budget, const std::string& emit_witness) {
    gramsey::HypergraphSearchResult res;
    Report r;
    if (which == "F") {
        res = gramsey::exact_F(n, s, k, rr, budget);
        r.command = "search F";
        r.parameters = {{"n", n}, {"s", s}, {"k", k}, {"r", rr}, {"budget", budget}};
    } else if (which == "G") {
        res = gramsey::exact_G(n, s, k, rr, budget);
        r.command = "search G";
        r.parameters = {{"n", n}, {"s", s}, {"k", k}, {"r", rr}, {"budget", budget}};
    } else {
        res = gramsey::exact_H4(n, ell, budget);
        r.command = "search H4";
        r.parameters = {{"n", n}, {"ell", ell}, {"budget", budget}};
    }
    return finish_search_report(r, res.status, res.value, res.stats, res.note,
                                gramsey::hypergraph_to_string(*res.witness), emit_witness);
}

// ----- match -----------------------------------------------------------------

int run_match_lin(int n, int p, int colors, std::uint64_t seed, int restarts,
                  const std::string& out) {
    gramsey::MatcherResult res = gramsey::find_avoiding_coloring(n, p, colors, seed, restarts);
    Report r;
    r.command = "match lin";
    r.parameters = {{"n", n}, {"p", p}, {"colors", colors}, {"restarts", restarts}};
    r.seed = seed;
    if (res.ok()) {
        gramsey::write_coloring_file(out, *res.coloring);
        r.payload = {{"out", out},
                     {"palette_used", res.coloring->palette_size()},
                     {"restarts_used", res.restarts_used}};
    } else {
        r.outcome = "failure";
        r.exit_code = kExitFailure;
        r.payload = {{"stuck_pair", {res.failure->stuck_pair.u, res.failure->stuck_pair.v}},
                     {"restarts_used", res.failure->restarts_used}};
    }
    return emit(r);
}

// ----- bounds ----------------------------------------------------------------

int run_bounds_table(int p) {
    gramsey::ThresholdTable t = gramsey::thresholds(p);
    Report r;
    r.command = "bounds table";
    r.parameters = {{"p", p}};
    r.payload = {{"p", t.p},
                 {"q_lin", t.q_lin},
                 {"q_quad", t.q_quad},
                 {"lin_lower_coeff", gramsey::rational_to_string(t.lin_lower_coeff)},
                 {"lin_upper_coeff", gramsey::rational_to_string(t.lin_upper_coeff)},
                 {"quad_lower_coeff", gramsey::rational_to_string(t.quad_lower_coeff)},
                 {"quad_upper_coeff", gramsey::rational_to_string(t.quad_upper_coeff)}};
    if (t.h4_upper_coeff)
        r.payload["h4_upper_coeff"] = gramsey::rational_to_string(*t.h4_upper_coeff);
    return emit(r);
}

int run_bounds_quad_limit(const std::string& f_text) {
    gramsey::Rational out = gramsey::quad_limit_from_F(gramsey::parse_rational(f_text));
    Report r;
    r.command = "bounds quad-limit";
    r.parameters = {{"F", f_text}};
    r.payload = {{"limit", gramsey::rational_to_string(out)}};
    return emit(r);
}

int run_bounds_certify_h4(const std::string& file, int ell) {
    gramsey::MultiHypergraph h = gramsey::read_hypergraph_file(file);
    gramsey::H4CertifyReport report = gramsey::certify_h4_pair_count(h, ell);
    Report r;
    r.command = "bounds certify-h4";
    r.parameters = {{"hypergraph", file}, {"ell", ell}};
    r.payload["components_by_order"] = report.components_by_order;
    r.payload["edge_total"] = report.edge_total;
    r.payload["pair_budget_used"] = report.pair_budget_used;
    r.payload["pair_budget"] = report.pair_budget;
    if (!report.ok()) {
        r.outcome = "violation";
        r.payload["witness"] = witness_to_json(*report.violation);
        r.exit_code = kExitViolation;
    }
    return emit(r);
}

// ----- fmt -------------------------------------------------------------------

int run_fmt_roundtrip(const std::string& file, const std::string& out) {
    Report r;
    r.command = "fmt roundtrip";
    r.parameters = {{"file", file}};
    std::string canonical;
    if (gramsey::detect_file_kind(file) == gramsey::FileKind::Coloring) {
        gramsey::EdgeColoring c = gramsey::read_coloring_file(file);
        canonical = gramsey::coloring_to_string(gramsey::normalize_colors(c));
        r.payload["kind"] = "coloring";
    } else {
        gramsey::MultiHypergraph h = gramsey::read_hypergraph_file(file);
        canonical = gramsey::hypergraph_to_string(h);
        r.payload["kind"] = "hypergraph";
    }
    r.payload["canonical"] = canonical;
    if (!out.empty()) {
        std::ofstream o(out);
        if (!o) throw std::runtime_error("cannot open file for writing: " + out);
        o << canonical;
        r.payload["out"] = out;
    }
    return emit(r);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Ramsey colorings, extremal hypergraphs and exact oracles"};
    app.require_subcommand(1);
    app.add_flag("--plain", g_plain, "plain text output instead of JSON");

    // verify
    auto* verify = app.add_subcommand("verify", "check colorings and hypergraphs");
    verify->require_subcommand(1);
    struct {
        std::string file;
        int p = 0, q = 0, s = 0, ell = 0;
        long long k = 0;
        bool has_defh = false;
    } v;
    auto* vc = verify->add_subcommand("coloring", "exhaustive (p,q) verification");
    vc->add_option("--file", v.file)->required();
    vc->add_option("--p", v.p)->required();
    vc->add_option("--q", v.q)->required();
    auto* vh = verify->add_subcommand("hypergraph", "(s,k)-freeness and structural checks");
    vh->add_option("--file", v.file)->required();
    vh->add_option("--s", v.s)->required();
    vh->add_option("--k", v.k)->required();
    auto* defh_opt = vh->add_option("--defH", v.ell, "also check the structural properties");

    // repeat
    auto* repeat = app.add_subcommand("repeat", "repeat multi-hypergraph builders");
    repeat->require_subcommand(1);
    struct {
        std::string coloring, mode, padding = "strict", out;
    } rb;
    auto* rbuild = repeat->add_subcommand("build", "build a repeat multi-hypergraph");
    rbuild->add_option("--coloring", rb.coloring)->required();
    rbuild->add_option("--mode", rb.mode)->required()->check(CLI::IsMember({"quad", "lin"}));
    rbuild->add_option("--padding", rb.padding)->check(CLI::IsMember({"strict", "padded"}));
    rbuild->add_option("--out", rb.out)->required();

    // construct
    auto* construct = app.add_subcommand("construct", "explicit colorings");
    construct->require_subcommand(1);
    struct {
        int n = 0, ell = 0;
        std::string hypergraph, out;
    } c;
    auto* c614 = construct->add_subcommand("six14", "the packing-based (6,14)-coloring");
    c614->add_option("--n", c.n)->required();
    c614->add_option("--out", c.out)->required();
    auto* cquad = construct->add_subcommand("quad", "active-pair coloring from a hypergraph");
    cquad->add_option("--hypergraph", c.hypergraph)->required();
    cquad->add_option("--ell", c.ell)->required();
    cquad->add_option("--out", c.out)->required();

    // design
    auto* design = app.add_subcommand("design", "K4 packings");
    design->require_subcommand(1);
    struct {
        int n = 0;
        std::string mode = "exact", file, out;
    } d;
    auto* dmake = design->add_subcommand("make", "build or load a block design");
    dmake->add_option("--n", d.n)->required();
    dmake->add_option("--mode", d.mode)->check(CLI::IsMember({"exact", "greedy", "file"}));
    dmake->add_option("--file", d.file, "design file for --mode file");
    dmake->add_option("--out", d.out);

    // search
    auto* search = app.add_subcommand("search", "exact extremal oracles");
    search->require_subcommand(1);
    struct {
        int n = 0, p = 0, q = 0, s = 0, r = 4, ell = 0;
        long long k = 0;
        long long budget_f = gramsey::kDefaultColoringBudget;
        long long budget_h = gramsey::kDefaultHypergraphBudget;
        std::string emit_witness;
    } s;
    auto* sf = search->add_subcommand("f", "minimum (p,q)-palette");
    sf->add_option("--n", s.n)->required();
    sf->add_option("--p", s.p)->required();
    sf->add_option("--q", s.q)->required();
    sf->add_option("--budget", s.budget_f);
    sf->add_option("--emit-witness", s.emit_witness);
    auto* sF = search->add_subcommand("F", "maximum (s,k)-free simple hypergraph");
    auto* sG = search->add_subcommand("G", "maximum (s,k)-free multi-hypergraph");
    for (auto* sub : {sF, sG}) {
        sub->add_option("--n", s.n)->required();
        sub->add_option("--s", s.s)->required();
        sub->add_option("--k", s.k)->required();
        sub->add_option("--r", s.r)->required();
        sub->add_option("--budget", s.budget_h);
        sub->add_option("--emit-witness", s.emit_witness);
    }
    auto* sH = search->add_subcommand("H4", "maximum structurally restricted 4-uniform");
    sH->add_option("--n", s.n)->required();
    sH->add_option("--ell", s.ell)->required();
    sH->add_option("--budget", s.budget_h);
    sH->add_option("--emit-witness", s.emit_witness);

    // match
    auto* match = app.add_subcommand("match", "randomized greedy colorings");
    match->require_subcommand(1);
    struct {
        int n = 0, p = 0, colors = 0, restarts = 0;
        std::uint64_t seed = 0;
        std::string out;
    } m;
    auto* mlin = match->add_subcommand("lin", "configuration-avoiding coloring");
    mlin->add_option("--n", m.n)->required();
    mlin->add_option("--p", m.p)->required();
    mlin->add_option("--colors", m.colors)->required();
    mlin->add_option("--seed", m.seed)->required();
    mlin->add_option("--restarts", m.restarts)->required();
    mlin->add_option("--out", m.out)->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "thresholds and certificates");
    bounds->require_subcommand(1);
    struct {
        int p = 0, ell = 0;
        std::string f, hypergraph;
    } b;
    auto* btable = bounds->add_subcommand("table", "threshold table for a clique size");
    btable->add_option("--p", b.p)->required();
    auto* bql = bounds->add_subcommand("quad-limit", "limit transfer from an F coefficient");
    bql->add_option("--F", b.f)->required();
    auto* bcert = bounds->add_subcommand("certify-h4", "component-counting certificate");
    bcert->add_option("--hypergraph", b.hypergraph)->required();
    bcert->add_option("--ell", b.ell)->required();

    // fmt
    auto* fmt = app.add_subcommand("fmt", "file format helpers");
    fmt->require_subcommand(1);
    struct {
        std::string file, out;
    } f;
    auto* froundtrip = fmt->add_subcommand("roundtrip", "canonical re-serialization");
    froundtrip->add_option("--file", f.file)->required();
    froundtrip->add_option("--out", f.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (vc->parsed()) return run_verify_coloring(v.file, v.p, v.q);
        if (vh->parsed())
            return run_verify_hypergraph(
                v.file, v.s, v.k,
                defh_opt->count() ? std::optional<int>(v.ell) : std::nullopt);
        if (rbuild->parsed()) return run_repeat_build(rb.coloring, rb.mode, rb.padding, rb.out);
        if (c614->parsed()) return run_construct_six14(c.n, c.out);
        if (cquad->parsed()) return run_construct_quad(c.hypergraph, c.ell, c.out);
        if (dmake->parsed()) return run_design_make(d.n, d.mode, d.file, d.out);
        if (sf->parsed()) return run_search_f(s.n, s.p, s.q, s.budget_f, s.emit_witness);
        if (sF->parsed())
            return run_search_family("F", s.n, s.s, s.k, s.r, 0, s.budget_h, s.emit_witness);
        if (sG->parsed())
            return run_search_family("G", s.n, s.s, s.k, s.r, 0, s.budget_h, s.emit_witness);
        if (sH->parsed())
            return run_search_family("H4", s.n, 0, 0, 4, s.ell, s.budget_h, s.emit_witness);
        if (mlin->parsed())
            return run_match_lin(m.n, m.p, m.colors, m.seed, m.restarts, m.out);
        if (btable->parsed()) return run_bounds_table(b.p);
        if (bql->parsed()) return run_bounds_quad_limit(b.f);
        if (bcert->parsed()) return run_bounds_certify_h4(b.hypergraph, b.ell);
        if (froundtrip->parsed()) return run_fmt_roundtrip(f.file, f.out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
