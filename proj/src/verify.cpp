#include "ringtk/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "ringtk/graph.hpp"
#include "ringtk/graph_analysis.hpp"
#include "ringtk/ring_factory.hpp"
#include "ringtk/ring_iso.hpp"
#include "ringtk/isoclinism.hpp"

namespace ringtk {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::skipped: return "skipped";
        case CheckStatus::undecided: return "undecided";
        case CheckStatus::flagged: return "counterexample-candidate";
    }
    return "?";
}

namespace {

CheckResult make_result(std::string check, const FiniteRing& ring, std::optional<int> r,
                        CheckStatus status, std::string detail = {},
                        bool excluded = false) {
    return CheckResult{std::move(check), ring.name(), r, status, std::move(detail),
                       excluded};
}

std::string elem(const FiniteRing& ring, int x) {
    return ring.element_name(x) + "(#" + std::to_string(x) + ")";
}

} // namespace

// --- degree formulas --------------------------------------------------------

std::vector<CheckResult> check_degree_formulas(const FiniteRing& ring) {
    std::vector<CheckResult> out;
    const int n = ring.order();
    std::vector<int> csize(n);
    for (int x = 0; x < n; ++x) csize[x] = ring.centralizer(x).size();
    const int zsize = ring.center().size();

    for (int r = 0; r < n; ++r) {
        const int neg_r = ring.neg(r);
        const bool two_r_zero = ring.add(r, r) == 0;
        const SimpleGraph gamma = r_noncommuting_graph(ring, r);
        const SimpleGraph gamma_neg = r_noncommuting_graph(ring, neg_r);
        const SimpleGraph delta = noncentral_subgraph(ring, r);

        std::ostringstream why;
        bool ok = true;
        auto fail = [&](const std::string& msg) {
            if (ok) why << msg;
            ok = false;
        };

        if (!gamma.same_adjacency(gamma_neg))
            fail("graphs for r and -r differ in adjacency");

        for (int x = 0; x < n && ok; ++x) {
            const int tsize = ring.generalized_centralizer(x, r).size();
            const int tneg = ring.generalized_centralizer(x, neg_r).size();
            const int deg = gamma.degree(x);

            int want;
            if (r == 0) want = n - csize[x];
            else if (two_r_zero) want = n - tsize - 1;
            else want = n - 2 * tsize - 1;
            if (deg != want) {
                fail("deg(" + elem(ring, x) + ")=" + std::to_string(deg) +
                     " but formula gives " + std::to_string(want));
                break;
            }
            if (r != 0) {
                const int via_c = tsize == 0 ? n - 1
                                  : two_r_zero ? n - csize[x] - 1
                                               : n - 2 * csize[x] - 1;
                if (deg != via_c) {
                    fail("deg(" + elem(ring, x) + ")=" + std::to_string(deg) +
                         " but centralizer form gives " + std::to_string(via_c));
                    break;
                }
            }
            if (tsize != tneg) {
                fail("|T(x,r)|=" + std::to_string(tsize) + " != |T(x,-r)|=" +
                     std::to_string(tneg) + " at x=" + elem(ring, x));
                break;
            }
            if (tsize != 0 && tsize != csize[x]) {
                fail("nonempty T(x,r) has size " + std::to_string(tsize) +
                     " != |C(x)|=" + std::to_string(csize[x]) + " at x=" +
                     elem(ring, x));
                break;
            }
        }

        for (int i = 0; i < delta.vertex_count() && ok; ++i) {
            const int x = delta.origin(i);
            const int tsize = ring.generalized_centralizer(x, r).size();
            int want;
            if (r == 0) want = n - csize[x];
            else if (tsize == 0) want = n - zsize - 1;
            else if (two_r_zero) want = n - zsize - csize[x] - 1;
            else want = n - zsize - 2 * csize[x] - 1;
            const int deg = delta.degree(i);
            if (deg != want) {
                fail("induced deg(" + elem(ring, x) + ")=" + std::to_string(deg) +
                     " but formula gives " + std::to_string(want));
                break;
            }
        }

        out.push_back(make_result("degree", ring, r,
                                  ok ? CheckStatus::pass : CheckStatus::fail,
                                  why.str()));
    }
    return out;
}

// --- shape claims over the full graph ----------------------------------------

std::vector<CheckResult> check_gamma_shape_theorems(const FiniteRing& ring) {
    std::vector<CheckResult> out;
    const int n = ring.order();
    const bool commutative = ring.is_commutative();
    const ElementSet& K = ring.commutator_set();

    std::vector<SimpleGraph> gammas;
    gammas.reserve(n);
    for (int r = 0; r < n; ++r) gammas.push_back(r_noncommuting_graph(ring, r));
    std::vector<GraphShape> shapes;
    shapes.reserve(n);
    for (int r = 0; r < n; ++r) shapes.push_back(shape(gammas[r]));

    // tree characterization needs a ring with unity (and 1 != 0)
    if (!ring.unity())
        out.push_back(make_result("gamma-shape/tree", ring, std::nullopt,
                                  CheckStatus::skipped, "hypothesis unmet: no unity"));
    else if (n < 2)
        out.push_back(make_result("gamma-shape/tree", ring, std::nullopt,
                                  CheckStatus::skipped,
                                  "hypothesis unmet: zero ring (1 = 0)"));
    else {
        for (int r = 0; r < n; ++r) {
            const bool want = n == 2 && r != 0;
            const bool got = shapes[r].is_tree;
            out.push_back(make_result(
                "gamma-shape/tree", ring, r,
                got == want ? CheckStatus::pass : CheckStatus::fail,
                got == want ? "consistent-with-corpus"
                            : std::string("tree=") + (got ? "yes" : "no") +
                                  " but characterization says " + (want ? "yes" : "no")));
        }
    }

    if (commutative) {
        for (const char* id : {"gamma-shape/lollipop", "gamma-shape/star",
                               "gamma-shape/regularity"})
            out.push_back(make_result(id, ring, std::nullopt, CheckStatus::skipped,
                                      "hypothesis unmet: commutative ring"));
    } else {
        for (int r = 0; r < n; ++r)
            out.push_back(make_result(
                "gamma-shape/lollipop", ring, r,
                shapes[r].is_lollipop ? CheckStatus::fail : CheckStatus::pass,
                shapes[r].is_lollipop ? "lollipop graph found" : ""));

        int outside_k = 0;
        for (int r = 0; r < n; ++r) {
            if (!K.contains(r)) { ++outside_k; continue; }
            const bool want = n == 4 && r != 0;
            const bool got = shapes[r].is_star;
            out.push_back(make_result(
                "gamma-shape/star", ring, r,
                got == want ? CheckStatus::pass : CheckStatus::fail,
                got == want ? "consistent-with-corpus"
                            : std::string("star=") + (got ? "yes" : "no") +
                                  " disagrees with the order-4 characterization"));
            out.push_back(make_result(
                "gamma-shape/regularity", ring, r,
                shapes[r].regular_degree ? CheckStatus::fail : CheckStatus::pass,
                shapes[r].regular_degree
                    ? "graph is " + std::to_string(*shapes[r].regular_degree) + "-regular"
                    : ""));
        }
        if (outside_k > 0) {
            const std::string reason = std::to_string(outside_k) +
                                       " values of r outside K(R) skipped (standing "
                                       "hypothesis r in K(R))";
            out.push_back(make_result("gamma-shape/star", ring, std::nullopt,
                                      CheckStatus::skipped, reason));
            out.push_back(make_result("gamma-shape/regularity", ring, std::nullopt,
                                      CheckStatus::skipped, reason));
        }
    }

    // complete bipartite, branch r = 0: every finite ring
    out.push_back(make_result(
        "gamma-shape/complete-bipartite", ring, 0,
        shapes[0].is_complete_bipartite ? CheckStatus::fail : CheckStatus::pass,
        shapes[0].is_complete_bipartite ? "complete bipartite at r=0" : ""));
    // branch r != 0 needs |R| >= 3 and |Z| >= 2
    if (n >= 3 && ring.center().size() >= 2) {
        for (int r = 1; r < n; ++r)
            out.push_back(make_result(
                "gamma-shape/complete-bipartite", ring, r,
                shapes[r].is_complete_bipartite ? CheckStatus::fail : CheckStatus::pass,
                shapes[r].is_complete_bipartite ? "complete bipartite graph found" : ""));
    } else {
        out.push_back(make_result("gamma-shape/complete-bipartite", ring, std::nullopt,
                                  CheckStatus::skipped,
                                  "r != 0 branch needs |R| >= 3 and |Z(R)| >= 2"));
    }

    bool any_outside = false;
    for (int r = 0; r < n; ++r) {
        if (K.contains(r)) continue;
        any_outside = true;
        out.push_back(make_result(
            "gamma-shape/complete-outside-K", ring, r,
            shapes[r].is_complete ? CheckStatus::pass : CheckStatus::fail,
            shapes[r].is_complete ? "" : "r outside K(R) but graph not complete"));
    }
    if (!any_outside)
        out.push_back(make_result("gamma-shape/complete-outside-K", ring, std::nullopt,
                                  CheckStatus::skipped, "every r lies in K(R)"));
    return out;
}

// --- induced-subgraph degree characterizations -------------------------------

namespace {

const FiniteRing& static_E9() {
    static const FiniteRing r = e_ring(3);
    return r;
}
const FiniteRing& static_F9() {
    static const FiniteRing r = f_ring(3);
    return r;
}
const FiniteRing& static_E4() {
    static const FiniteRing r = e_ring(2);
    return r;
}
const FiniteRing& static_F4() {
    static const FiniteRing r = f_ring(2);
    return r;
}

} // namespace

std::vector<CheckResult> check_delta_theorems(const FiniteRing& ring,
                                              const VerifyBudget&) {
    std::vector<CheckResult> out;
    if (ring.is_commutative()) {
        out.push_back(make_result("delta", ring, std::nullopt, CheckStatus::skipped,
                                  "hypothesis unmet: commutative ring (no noncentral "
                                  "vertices)"));
        return out;
    }
    const int n = ring.order();
    const bool like_e9 = n == 9 && (ring_isomorphic(ring, static_E9()).has_value() ||
                                    ring_isomorphic(ring, static_F9()).has_value());
    const bool like_e4 = n == 4 && (ring_isomorphic(ring, static_E4()).has_value() ||
                                    ring_isomorphic(ring, static_F4()).has_value());

    // what a single induced graph looked like
    struct Observed {
        std::vector<int> hist;  // degree histogram
        std::optional<int> reg;
        bool tree = false;
        int r = 0;
    };
    auto has_deg = [](const Observed& o, int k) {
        return k < int(o.hist.size()) && o.hist[k] > 0;
    };

    struct Claim {
        const char* id;
        std::set<int> excluded;
        std::function<bool(const Observed&)> holds;
        bool iff;  // label passes consistent-with-corpus
    };
    const std::vector<Claim> claims = {
        {"delta/not-tree", {8}, [&](const Observed& o) { return !o.tree; }, false},
        {"delta/end-vertices", {8},
         [&](const Observed& o) { return has_deg(o, 1) == (o.r != 0 && like_e9); },
         true},
        {"delta/one-regular", {8},
         [&](const Observed& o) { return (o.reg == 1) == (o.r != 0 && like_e9); },
         true},
        {"delta/degree-two", {8, 12},
         [&](const Observed& o) { return has_deg(o, 2) == (o.r == 0 && like_e4); },
         true},
        {"delta/two-regular", {8, 12},
         [&](const Observed& o) { return (o.reg == 2) == (o.r == 0 && like_e4); },
         true},
        {"delta/no-degree-three", {16, 18},
         [&](const Observed& o) { return !has_deg(o, 3); }, false},
        {"delta/no-degree-four", {8, 12, 18, 20},
         [&](const Observed& o) { return !has_deg(o, 4); }, false},
        {"delta/no-degree-five", {8, 16, 24, 27},
         [&](const Observed& o) { return !has_deg(o, 5); }, false},
        {"delta/degree-six", {8, 12, 16, 24, 28},
         [&](const Observed& o) { return has_deg(o, 6) == (o.r == 0 && like_e9); },
         true},
        {"delta/six-regular", {8, 12, 16, 24, 28},
         [&](const Observed& o) { return (o.reg == 6) == (o.r == 0 && like_e9); },
         true},
    };

    const ElementSet& K = ring.commutator_set();
    int outside_k = 0;
    for (int r = 0; r < n; ++r) {
        if (!K.contains(r)) { ++outside_k; continue; }
        const SimpleGraph delta = noncentral_subgraph(ring, r);
        Observed o;
        o.hist.assign(n + 1, 0);
        for (int v = 0; v < delta.vertex_count(); ++v) ++o.hist[delta.degree(v)];
        o.reg = regular_degree(delta);
        o.tree = shape(delta).is_tree;
        o.r = r;

        for (const Claim& c : claims) {
            const bool excluded = c.excluded.count(n) > 0;
            const bool holds = c.holds(o);
            std::string detail;
            if (!holds) {
                std::ostringstream os;
                os << "observed degrees {";
                bool first = true;
                for (int d = 0; d <= n; ++d)
                    if (o.hist[d]) {
                        os << (first ? "" : ", ") << d << "x" << o.hist[d];
                        first = false;
                    }
                os << "} disagree with the claim";
                detail = os.str();
            } else if (c.iff) {
                detail = "consistent-with-corpus";
            }
            if (excluded && detail.empty())
                detail = "order excluded by the claim; reported for data only";
            out.push_back(make_result(c.id, ring, r,
                                      holds ? CheckStatus::pass : CheckStatus::fail,
                                      detail, excluded));
        }
    }
    if (outside_k > 0)
        out.push_back(make_result("delta", ring, std::nullopt, CheckStatus::skipped,
                                  std::to_string(outside_k) +
                                      " values of r outside K(R) skipped (standing "
                                      "hypothesis r in K(R))"));
    return out;
}

// --- commuting-graph equivalence and the clique bound ------------------------

std::vector<CheckResult> check_commuting_equivalence_and_clique(
    const FiniteRing& ring, const VerifyBudget& budget) {
    std::vector<CheckResult> out;
    if (ring.is_commutative()) {
        out.push_back(make_result("commuting-clique", ring, std::nullopt,
                                  CheckStatus::skipped,
                                  "hypothesis unmet: commutative ring"));
        return out;
    }
    const int n = ring.order();
    const std::vector<ElementSet> subrings =
        ring.commutative_subrings(budget.subring_generator_bound);
    int best_bound = 0;
    ElementSet best_subring;
    for (const ElementSet& s : subrings) {
        const int b = s.size() - s.intersect_size(ring.center());
        if (b > best_bound) {
            best_bound = b;
            best_subring = s;
        }
    }

    const ElementSet& K = ring.commutator_set();
    int equi_hypothesis_unmet = 0;
    for (int r = 1; r < n; ++r) {
        const SimpleGraph delta = noncentral_subgraph(ring, r);
        const int m = delta.vertex_count();

        bool spanning_ok = true;
        std::string spanning_why;
        for (int i = 0; i < m && spanning_ok; ++i)
            for (int j = i + 1; j < m; ++j) {
                const int x = delta.origin(i), y = delta.origin(j);
                if (ring.commutator(x, y) == 0 && !delta.adjacent(i, j)) {
                    spanning_ok = false;
                    spanning_why = "commuting pair " + elem(ring, x) + "," +
                                   elem(ring, y) + " not adjacent";
                    break;
                }
            }
        out.push_back(make_result("commuting-clique/spanning", ring, r,
                                  spanning_ok ? CheckStatus::pass : CheckStatus::fail,
                                  spanning_why));

        // when K(R) = {0, r, -r} the induced graph IS the commuting graph
        ElementSet expect(n);
        expect.insert(0);
        expect.insert(r);
        expect.insert(ring.neg(r));
        if (K == expect) {
            bool equiv_ok = true;
            std::string why;
            for (int i = 0; i < m && equiv_ok; ++i)
                for (int j = i + 1; j < m; ++j) {
                    const int x = delta.origin(i), y = delta.origin(j);
                    const bool commute = ring.commutator(x, y) == 0;
                    if (delta.adjacent(i, j) != commute) {
                        equiv_ok = false;
                        why = "adjacency and commuting disagree at " + elem(ring, x) +
                              "," + elem(ring, y);
                        break;
                    }
                }
            out.push_back(make_result("commuting-clique/equivalence", ring, r,
                                      equiv_ok ? CheckStatus::pass : CheckStatus::fail,
                                      why));
        } else {
            ++equi_hypothesis_unmet;
        }

        if (m > kExactSearchVertexCap) {
            out.push_back(make_result("commuting-clique/clique-bound", ring, r,
                                      CheckStatus::skipped,
                                      "induced graph exceeds the " +
                                          std::to_string(kExactSearchVertexCap) +
                                          "-vertex exact-search cap"));
            continue;
        }
        const CliqueResult cq = clique_number(delta, budget.clique_nodes);
        if (!cq.decided) {
            out.push_back(make_result("commuting-clique/clique-bound", ring, r,
                                      CheckStatus::undecided,
                                      "clique search budget exhausted after " +
                                          std::to_string(cq.nodes) + " nodes"));
        } else {
            const bool ok = cq.size >= best_bound;
            out.push_back(make_result(
                "commuting-clique/clique-bound", ring, r,
                ok ? CheckStatus::pass : CheckStatus::fail,
                ok ? "omega=" + std::to_string(cq.size) +
                         " >= bound " + std::to_string(best_bound)
                   : "omega=" + std::to_string(cq.size) + " below the bound " +
                         std::to_string(best_bound) + " from a commutative subring"));
        }
    }
    if (equi_hypothesis_unmet == n - 1)
        out.push_back(make_result("commuting-clique/equivalence", ring, std::nullopt,
                                  CheckStatus::skipped,
                                  "hypothesis K(R) = {0, r, -r} never met"));
    return out;
}

// --- diameter bound -----------------------------------------------------------

std::vector<CheckResult> check_diameter_theorem(const FiniteRing& ring) {
    std::vector<CheckResult> out;
    if (ring.is_commutative()) {
        out.push_back(make_result("diameter/bound", ring, std::nullopt,
                                  CheckStatus::skipped,
                                  "hypothesis unmet: commutative ring"));
        return out;
    }
    const int n = ring.order();
    const int zsize = ring.center().size();
    int skipped = 0;
    bool any = false;
    for (int r = 0; r < n; ++r) {
        if (ring.is_central(r)) { ++skipped; continue; }
        const int two_r = ring.add(r, r);
        if (two_r == 0) { ++skipped; continue; }
        const int three_r = ring.add(two_r, r);
        const bool branch_a = three_r != 0;
        const bool branch_b =
            three_r == 0 && zsize == 1 && ring.centralizer(r).size() != 3;
        if (!branch_a && !branch_b) { ++skipped; continue; }
        any = true;

        const SimpleGraph delta = noncentral_subgraph(ring, r);
        const Diameter d = diameter(delta);
        if (d.unbounded) {
            out.push_back(make_result(
                "diameter/bound", ring, r, CheckStatus::flagged,
                "induced graph disconnected under the theorem hypotheses"));
        } else {
            out.push_back(make_result(
                "diameter/bound", ring, r,
                d.value <= 3 ? CheckStatus::pass : CheckStatus::fail,
                d.value <= 3 ? "diam=" + std::to_string(d.value)
                             : "diam=" + std::to_string(d.value) + " exceeds 3"));
        }
    }
    if (skipped > 0)
        out.push_back(make_result(
            "diameter/bound", ring, std::nullopt, CheckStatus::skipped,
            std::to_string(skipped) +
                " values of r rejected (central, 2r = 0, or 3r = 0 with |Z| > 1 or "
                "|C(r)| = 3)" +
                (any ? "" : "; no qualifying r at all")));
    return out;
}

// --- isoclinism ---------------------------------------------------------------

std::vector<CheckResult> check_isoclinism_proposition(const FiniteRing& r1,
                                                      const FiniteRing& r2,
                                                      const VerifyBudget& budget) {
    std::vector<CheckResult> out;
    const std::string pair = r1.name() + "~" + r2.name();
    auto pair_result = [&](const char* id, std::optional<int> r, CheckStatus st,
                           std::string detail) {
        out.push_back(CheckResult{id, pair, r, st, std::move(detail), false});
    };

    if (r1.center().size() != r2.center().size()) {
        pair_result("isoclinism/witness", std::nullopt, CheckStatus::skipped,
                    "hypothesis unmet: |Z(R1)| != |Z(R2)|");
        return out;
    }
    const IsoclinismResult found = find_isoclinism(r1, r2);
    if (found.outcome == IsoclinismOutcome::undecided) {
        pair_result("isoclinism/witness", std::nullopt, CheckStatus::undecided,
                    "search caps exceeded");
        return out;
    }
    if (found.outcome == IsoclinismOutcome::none) {
        pair_result("isoclinism/witness", std::nullopt, CheckStatus::skipped,
                    "no isoclinism exists; proposition vacuous for this pair");
        return out;
    }
    pair_result("isoclinism/witness", std::nullopt, CheckStatus::pass,
                "witness found; |R/Z|=" + std::to_string(found.witness.phi.size()) +
                    ", |[R,R]|=" + std::to_string(found.witness.psi_domain.size()));

    for (int r : found.witness.psi_domain) {
        const bool ok = verify_witness(found.witness, r1, r2, r);
        pair_result("isoclinism/alpha-preserves", r,
                    ok ? CheckStatus::pass : CheckStatus::fail,
                    ok ? "" : "alpha does not preserve adjacency");

        const SimpleGraph g1 = r_noncommuting_graph(r1, r);
        const SimpleGraph g2 = r_noncommuting_graph(r2, found.witness.psi_at(r));
        const IsoResult iso = graph_isomorphic(g1, g2, budget.iso_nodes);
        switch (iso.outcome) {
            case SearchOutcome::found:
                pair_result("isoclinism/graph-iso-crosscheck", r, CheckStatus::pass, "");
                break;
            case SearchOutcome::none:
                pair_result("isoclinism/graph-iso-crosscheck", r, CheckStatus::fail,
                            "independent isomorphism search found none");
                break;
            case SearchOutcome::undecided:
                pair_result("isoclinism/graph-iso-crosscheck", r, CheckStatus::undecided,
                            "isomorphism budget exhausted");
                break;
        }
    }
    return out;
}

// --- suite assembly -------------------------------------------------------------

const std::vector<std::string>& all_suite_ids() {
    static const std::vector<std::string> ids = {
        "degree",    "gamma-shape", "delta",
        "commuting-clique", "diameter", "isoclinism"};
    return ids;
}

SuiteReport run_suite(const RingRegistry& corpus,
                      const std::vector<std::string>& suite_ids,
                      const VerifyBudget& budget) {
    SuiteReport report;
    const auto rings = corpus.rings();
    {
        std::ostringstream os;
        os << rings.size() << " rings:";
        for (const FiniteRing* r : rings) os << " " << r->name();
        report.corpus = os.str();
    }
    std::set<std::string> want(suite_ids.begin(), suite_ids.end());
    for (const std::string& id : suite_ids)
        if (std::find(all_suite_ids().begin(), all_suite_ids().end(), id) ==
            all_suite_ids().end())
            throw std::invalid_argument("unknown suite id '" + id + "'");
    report.suites = suite_ids;

    std::vector<std::function<std::vector<CheckResult>()>> tasks;
    for (const FiniteRing* r : rings) {
        if (want.count("degree"))
            tasks.push_back([r] { return check_degree_formulas(*r); });
        if (want.count("gamma-shape"))
            tasks.push_back([r] { return check_gamma_shape_theorems(*r); });
        if (want.count("delta"))
            tasks.push_back([r, budget] { return check_delta_theorems(*r, budget); });
        if (want.count("commuting-clique"))
            tasks.push_back(
                [r, budget] { return check_commuting_equivalence_and_clique(*r, budget); });
        if (want.count("diameter"))
            tasks.push_back([r] { return check_diameter_theorem(*r); });
    }
    if (want.count("isoclinism")) {
        bool any_pair = false;
        for (auto [a, b] : {std::pair{"E4", "F4"}, std::pair{"E9", "F9"}}) {
            const FiniteRing* ra = corpus.find(a);
            const FiniteRing* rb = corpus.find(b);
            if (ra && rb) {
                any_pair = true;
                tasks.push_back([ra, rb, budget] {
                    return check_isoclinism_proposition(*ra, *rb, budget);
                });
            }
        }
        if (!any_pair)
            tasks.push_back([] {
                return std::vector<CheckResult>{
                    {"isoclinism/witness", "-", std::nullopt, CheckStatus::skipped,
                     "corpus has no designated presentation pairs", false}};
            });
    }

    std::vector<std::vector<CheckResult>> slots(tasks.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (int i = 0; i < int(tasks.size()); ++i) slots[i] = tasks[i]();

    for (auto& slot : slots)
        for (auto& res : slot) report.results.push_back(std::move(res));

    for (const CheckResult& r : report.results) {
        if (r.excluded_order) {
            if (r.status == CheckStatus::pass) ++report.summary.excluded_consistent;
            else ++report.summary.excluded_divergent;
            continue;
        }
        switch (r.status) {
            case CheckStatus::pass: ++report.summary.pass; break;
            case CheckStatus::fail: ++report.summary.fail; break;
            case CheckStatus::skipped: ++report.summary.skipped; break;
            case CheckStatus::undecided: ++report.summary.undecided; break;
            case CheckStatus::flagged: ++report.summary.flagged; break;
        }
    }
    return report;
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["corpus"] = corpus;
    j["suites"] = suites;
    j["results"] = nlohmann::ordered_json::array();
    for (const CheckResult& r : results) {
        nlohmann::ordered_json e;
        e["check"] = r.check;
        e["ring"] = r.ring;
        if (r.r) e["r"] = *r.r;
        else e["r"] = nullptr;
        e["status"] = to_string(r.status);
        e["section"] = r.excluded_order ? "excluded-orders" : "main";
        e["detail"] = r.detail;
        j["results"].push_back(std::move(e));
    }
    j["summary"] = {{"pass", summary.pass},
                    {"fail", summary.fail},
                    {"skipped", summary.skipped},
                    {"undecided", summary.undecided},
                    {"counterexample_candidates", summary.flagged},
                    {"excluded_consistent", summary.excluded_consistent},
                    {"excluded_divergent", summary.excluded_divergent}};
    return j.dump(2) + "\n";
}

std::string SuiteReport::to_table() const {
    std::ostringstream os;
    auto row = [&](const CheckResult& r) {
        os << "  " << r.check << " | " << r.ring << " | "
           << (r.r ? std::to_string(*r.r) : std::string("ALL")) << " | "
           << to_string(r.status);
        if (!r.detail.empty()) os << " | " << r.detail;
        os << "\n";
    };
    os << "corpus: " << corpus << "\n";
    os << "== main ==\n";
    for (const CheckResult& r : results)
        if (!r.excluded_order) row(r);
    bool any_excluded = false;
    for (const CheckResult& r : results) any_excluded |= r.excluded_order;
    if (any_excluded) {
        os << "== excluded orders (reported, not judged) ==\n";
        for (const CheckResult& r : results)
            if (r.excluded_order) row(r);
    }
    os << "summary: pass=" << summary.pass << " fail=" << summary.fail
       << " skipped=" << summary.skipped << " undecided=" << summary.undecided
       << " counterexample-candidates=" << summary.flagged
       << " excluded(consistent/divergent)=" << summary.excluded_consistent << "/"
       << summary.excluded_divergent << "\n";
    return os.str();
}

int SuiteReport::exit_code() const {
    if (summary.fail > 0) return 1;
    if (summary.undecided > 0) return 3;
    return 0;
}

} // namespace ringtk
