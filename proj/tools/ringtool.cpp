// Command-line surface: ring registry and file ingestion, graph building
// and export, verification sweeps, isoclinism checks.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ringtk/corpus.hpp"
#include "ringtk/graph.hpp"
#include "ringtk/graph_analysis.hpp"
#include "ringtk/graph_export.hpp"
#include "ringtk/isoclinism.hpp"
#include "ringtk/ring_io.hpp"
#include "ringtk/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUndecided = 3;

ringtk::VerifyBudget budget_from_env() {
    ringtk::VerifyBudget b;
    if (const char* s = std::getenv("RINGTK_NODE_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(s, &end, 10);
        if (end && *end == '\0' && v > 0) {
            b.clique_nodes = v;
            b.iso_nodes = v;
        } else {
            std::cerr << "warning: ignoring malformed RINGTK_NODE_BUDGET\n";
        }
    }
    return b;
}

bool looks_like_file(const std::string& name) {
    std::ifstream f(name);
    return f.good();
}

// Resolves a --ring argument against the built-in corpus, falling back to a
// ring file path.
const ringtk::FiniteRing& resolve_ring(ringtk::RingRegistry& reg, const std::string& name) {
    if (const ringtk::FiniteRing* r = reg.find(name)) return *r;
    if (looks_like_file(name)) return reg.add_from_file(name);
    throw std::out_of_range("unknown ring '" + name + "' (not a corpus name or file)");
}

void write_or_print(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

int cmd_ring_list(ringtk::RingRegistry& reg) {
    for (const ringtk::FiniteRing* r : reg.rings()) {
        std::cout << r->name() << "  order " << r->order()
                  << (r->is_commutative() ? "  commutative" : "  noncommutative")
                  << "  |Z|=" << r->center().size()
                  << "  |K|=" << r->commutator_set().size();
        if (auto u = r->unity()) std::cout << "  unity=" << r->element_name(*u);
        std::cout << "\n";
    }
    return kExitPass;
}

int cmd_ring_show(ringtk::RingRegistry& reg, const std::string& name) {
    const ringtk::FiniteRing& r = resolve_ring(reg, name);
    std::cout << "ring " << r.name() << "\n";
    std::cout << "order " << r.order() << "\n";
    std::cout << (r.is_commutative() ? "commutative" : "noncommutative") << "\n";
    if (auto u = r.unity()) std::cout << "unity " << r.element_name(*u) << "\n";
    else std::cout << "no unity\n";
    auto print_set = [&](const char* what, const ringtk::ElementSet& s) {
        std::cout << what << " size " << s.size() << " {";
        bool first = true;
        for (int x : s.members()) {
            std::cout << (first ? "" : ", ") << r.element_name(x);
            first = false;
        }
        std::cout << "}\n";
    };
    print_set("|Z(R)|", r.center());
    print_set("|K(R)|", r.commutator_set());
    print_set("|[R,R]|", r.additive_span(r.commutator_set()));
    return kExitPass;
}

int cmd_ring_validate(const std::string& path) {
    try {
        const ringtk::FiniteRing r = ringtk::parse_ring_file(path);
        std::cout << "ok: ring " << r.name() << " of order " << r.order()
                  << " satisfies all axioms\n";
        return kExitPass;
    } catch (const ringtk::RingValidationError& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return kExitFail;
    } catch (const ringtk::RingParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_graph_build(ringtk::RingRegistry& reg, const std::string& ring_name,
                    const std::string& r_expr, bool induced, const std::string& format,
                    const std::string& out_path) {
    const ringtk::FiniteRing& ring = resolve_ring(reg, ring_name);
    const int r = ringtk::parse_element(ring, r_expr);
    const ringtk::SimpleGraph g = induced ? ringtk::noncentral_subgraph(ring, r)
                                          : ringtk::r_noncommuting_graph(ring, r);
    if (format == "dot") write_or_print(ringtk::export_dot(g), out_path);
    else write_or_print(ringtk::export_json(g), out_path);
    return kExitPass;
}

int cmd_verify(const std::string& suites_arg, const std::string& corpus_arg,
               const std::string& json_path, bool print_table) {
    std::vector<std::string> suites;
    if (suites_arg == "all") suites = ringtk::all_suite_ids();
    else {
        std::stringstream ss(suites_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) suites.push_back(tok);
    }

    ringtk::RingRegistry reg;
    if (corpus_arg == "default") {
        reg = ringtk::default_corpus();
    } else {
        std::stringstream ss(corpus_arg);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok == "default") {
                const ringtk::RingRegistry defaults = ringtk::default_corpus();
                for (const ringtk::FiniteRing* r : defaults.rings()) reg.add(*r);
            } else {
                reg.add_from_file(tok);
            }
        }
    }

    const ringtk::SuiteReport report =
        ringtk::run_suite(reg, suites, budget_from_env());
    if (print_table) std::cout << report.to_table();
    else {
        for (const ringtk::CheckResult& r : report.results) {
            if (r.excluded_order) continue;
            if (r.status == ringtk::CheckStatus::fail ||
                r.status == ringtk::CheckStatus::flagged ||
                r.status == ringtk::CheckStatus::undecided) {
                std::cout << to_string(r.status) << ": " << r.check << " ring=" << r.ring
                          << " r=" << (r.r ? std::to_string(*r.r) : std::string("ALL"))
                          << " " << r.detail << "\n";
            }
        }
        std::cout << "pass=" << report.summary.pass << " fail=" << report.summary.fail
                  << " skipped=" << report.summary.skipped
                  << " undecided=" << report.summary.undecided
                  << " counterexample-candidates=" << report.summary.flagged
                  << " excluded(consistent/divergent)="
                  << report.summary.excluded_consistent << "/"
                  << report.summary.excluded_divergent << "\n";
    }
    if (!json_path.empty()) write_or_print(report.to_json(), json_path);
    return report.exit_code();
}

int cmd_iso_check(ringtk::RingRegistry& reg, const std::string& name1,
                  const std::string& name2, const std::string& r_expr,
                  const std::string& json_path) {
    const ringtk::FiniteRing& r1 = resolve_ring(reg, name1);
    const ringtk::FiniteRing& r2 = resolve_ring(reg, name2);
    const ringtk::IsoclinismResult res = ringtk::find_isoclinism(r1, r2);
    if (res.outcome == ringtk::IsoclinismOutcome::undecided) {
        std::cout << "undecided: isoclinism search caps exceeded\n";
        return kExitUndecided;
    }
    if (res.outcome == ringtk::IsoclinismOutcome::none) {
        std::cout << "no isoclinism between " << r1.name() << " and " << r2.name()
                  << "\n";
        return kExitPass;
    }
    const ringtk::IsoclinismWitness& w = res.witness;
    std::cout << "witness found: phi on " << w.phi.size() << " cosets, psi on "
              << w.psi_domain.size() << " elements, alpha "
              << (w.has_alpha() ? "defined" : "unavailable (center sizes differ)")
              << "\n";
    if (!json_path.empty()) write_or_print(w.to_json(), json_path);
    if (!w.has_alpha()) return kExitPass;

    std::vector<int> rs;
    if (!r_expr.empty()) rs.push_back(ringtk::parse_element(r1, r_expr));
    else rs = w.psi_domain;

    bool all_ok = true;
    for (int r : rs) {
        const bool ok = ringtk::verify_witness(w, r1, r2, r);
        all_ok = all_ok && ok;
        std::cout << "r=" << r1.element_name(r) << " -> psi(r)="
                  << r2.element_name(w.psi_at(r)) << ": "
                  << (ok ? "verified" : "FAILED") << "\n";
    }
    return all_ok ? kExitPass : kExitFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-ring noncommuting-graph toolkit"};
    app.require_subcommand(1);

    ringtk::RingRegistry reg = ringtk::default_corpus();

    // ring list|show|validate
    CLI::App* ring = app.add_subcommand("ring", "inspect and validate rings");
    ring->require_subcommand(1);
    ring->add_subcommand("list", "list the built-in corpus");
    std::string show_name;
    CLI::App* show = ring->add_subcommand("show", "print ring invariants");
    show->add_option("name", show_name, "corpus ring name or ring file")->required();
    std::string validate_path;
    CLI::App* validate = ring->add_subcommand("validate", "validate a ring file");
    validate->add_option("file", validate_path, "ring file path")->required();

    // graph build
    CLI::App* graph = app.add_subcommand("graph", "build and export graphs");
    graph->require_subcommand(1);
    CLI::App* build = graph->add_subcommand("build", "build the r-noncommuting graph");
    std::string g_ring, g_r = "0", g_out = "dot", g_file;
    bool g_induced = false;
    build->add_option("--ring", g_ring, "corpus ring name or ring file")->required();
    build->add_option("--r", g_r, "element expression, e.g. a+2b or an index");
    build->add_flag("--induced", g_induced, "restrict to noncentral elements");
    build->add_option("--out", g_out, "export format")
        ->check(CLI::IsMember({"dot", "json"}));
    build->add_option("--file", g_file, "write to file instead of stdout");

    // verify
    CLI::App* verify = app.add_subcommand("verify", "run the claim suites");
    std::string v_suite = "all", v_corpus = "default", v_json;
    bool v_table = false;
    verify->add_option("--suite", v_suite, "all or comma-separated suite ids");
    verify->add_option("--corpus", v_corpus,
                       "default, or comma-separated ring files (default may be mixed in)");
    verify->add_option("--json", v_json, "write the JSON report here");
    verify->add_flag("--table", v_table, "print the full result table");

    // iso check
    CLI::App* iso = app.add_subcommand("iso", "isoclinism search and verification");
    iso->require_subcommand(1);
    CLI::App* check = iso->add_subcommand("check", "find and verify an isoclinism");
    std::string i_r1, i_r2, i_r, i_json;
    check->add_option("ring1", i_r1)->required();
    check->add_option("ring2", i_r2)->required();
    check->add_option("--r", i_r, "verify only this element of [R1,R1]");
    check->add_option("--json", i_json, "write the witness JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (ring->parsed()) {
            if (ring->got_subcommand("list")) return cmd_ring_list(reg);
            if (show->parsed()) return cmd_ring_show(reg, show_name);
            if (validate->parsed()) return cmd_ring_validate(validate_path);
        }
        if (build->parsed())
            return cmd_graph_build(reg, g_ring, g_r, g_induced, g_out, g_file);
        if (verify->parsed()) return cmd_verify(v_suite, v_corpus, v_json, v_table);
        if (check->parsed()) return cmd_iso_check(reg, i_r1, i_r2, i_r, i_json);
    } catch (const ringtk::RingParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
