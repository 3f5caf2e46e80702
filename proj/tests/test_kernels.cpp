#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "ringtk/corpus.hpp"
#include "ringtk/graph.hpp"
#include "ringtk/kernels.hpp"
#include "ringtk/ring_factory.hpp"

using namespace ringtk;

namespace {

bool same_report(const ValidationReport& a, const ValidationReport& b) {
    if (a.ok != b.ok || a.violations.size() != b.violations.size()) return false;
    for (std::size_t i = 0; i < a.violations.size(); ++i)
        if (a.violations[i].axiom != b.violations[i].axiom ||
            a.violations[i].witness != b.violations[i].witness)
            return false;
    return true;
}

SimpleGraph random_graph(int n, double p, unsigned seed) {
    SimpleGraph g(n);
    std::mt19937 rng(seed);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

} // namespace

TEST_CASE("validation kernels agree on valid tables") {
    for (int n : {5, 16, 31, 32, 64}) {
        const FiniteRing r = zn_ring(n);
        const auto s = kernels::validate_tables_serial(r.add_table(), r.mul_table());
        const auto p = kernels::validate_tables_parallel(r.add_table(), r.mul_table());
        CHECK(s.ok);
        CHECK(same_report(s, p));
    }
}

TEST_CASE("validation kernels agree on broken tables, witness for witness") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 24 + int(rng() % 40);
        const FiniteRing base = zn_ring(n);
        CayleyTable mul = base.mul_table();
        CayleyTable add = base.add_table();
        // perturb a few entries of one or both tables
        const int edits = 1 + int(rng() % 3);
        for (int e = 0; e < edits; ++e) {
            const int i = int(rng() % n), j = int(rng() % n);
            if (rng() % 2) mul.at(i, j) = int(rng() % n);
            else add.at(i, j) = int(rng() % n);
        }
        const auto s = kernels::validate_tables_serial(add, mul);
        const auto p = kernels::validate_tables_parallel(add, mul);
        CHECK(same_report(s, p));

        std::set<std::string> axioms;
        for (const auto& v : s.violations) axioms.insert(v.axiom);
        CHECK(axioms == oracles::violated_axioms(add, mul));
    }
}

TEST_CASE("the minimal witness is the lexicographically first violation") {
    // force a known first violation: break mul associativity high up, then
    // also low down, and check the low one wins
    const FiniteRing base = zn_ring(40);
    CayleyTable mul = base.mul_table();
    mul.at(30, 35) = 1;
    const auto first = kernels::validate_tables_serial(base.add_table(), mul);
    CayleyTable mul2 = mul;
    mul2.at(2, 3) = 1;
    const auto second = kernels::validate_tables_serial(base.add_table(), mul2);
    REQUIRE_FALSE(first.ok);
    REQUIRE_FALSE(second.ok);
    auto witness_of = [](const ValidationReport& rep, const std::string& axiom) {
        for (const auto& v : rep.violations)
            if (v.axiom == axiom) return v.witness;
        return std::array<int, 3>{-1, -1, -1};
    };
    const auto w1 = witness_of(first, "mul-associative");
    const auto w2 = witness_of(second, "mul-associative");
    CHECK(w2 < w1);  // the added earlier violation becomes the witness
    const auto par = kernels::validate_tables_parallel(base.add_table(), mul2);
    CHECK(witness_of(par, "mul-associative") == w2);
}

TEST_CASE("range violations suppress the cubic scans in both variants") {
    CayleyTable add(4), mul(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            add.at(i, j) = (i + j) % 4;
            mul.at(i, j) = 0;
        }
    add.at(3, 3) = 99;
    const auto s = kernels::validate_tables_serial(add, mul);
    const auto p = kernels::validate_tables_parallel(add, mul);
    REQUIRE_FALSE(s.ok);
    CHECK(s.violations.size() == 1);
    CHECK(s.violations[0].axiom == "add-table-range");
    CHECK(same_report(s, p));
}

TEST_CASE("adjacency kernels agree over rings large and small") {
    const RingRegistry reg = default_corpus();
    std::vector<const FiniteRing*> rings = reg.rings();
    const FiniteRing z64 = zn_ring(64);
    rings.push_back(&z64);
    for (const FiniteRing* r : rings) {
        for (int v : {0, 1, r->order() / 2}) {
            if (v >= r->order()) continue;
            SimpleGraph gs(r->order()), gp(r->order());
            kernels::graph_adjacency_serial(*r, v, gs);
            kernels::graph_adjacency_parallel(*r, v, gp);
            CHECK(gs.same_adjacency(gp));
        }
    }
}

TEST_CASE("adjacency kernels stay symmetric even for broken tables") {
    const FiniteRing e4 = e_ring(2);
    CayleyTable mul = e4.mul_table();
    mul.at(2, 1) = 1;
    const FiniteRing mutant =
        FiniteRing::unchecked("mutant", e4.add_table(), mul, {});
    for (int r = 0; r < 4; ++r) {
        SimpleGraph gs(4), gp(4);
        kernels::graph_adjacency_serial(mutant, r, gs);
        kernels::graph_adjacency_parallel(mutant, r, gp);
        CHECK(gs.same_adjacency(gp));
        for (int u = 0; u < 4; ++u) {
            CHECK_FALSE(gs.adjacent(u, u));
            for (int v = 0; v < 4; ++v) CHECK(gs.adjacent(u, v) == gs.adjacent(v, u));
        }
    }
}

TEST_CASE("commutator-set kernels agree and match a direct scan") {
    const RingRegistry reg = default_corpus();
    for (const FiniteRing* r : reg.rings()) {
        const auto s = kernels::commutator_set_serial(*r);
        const auto p = kernels::commutator_set_parallel(*r);
        CHECK(s == p);
        const auto scanned = oracles::commutator_scan(*r);
        for (int x = 0; x < r->order(); ++x)
            CHECK(s[x] == (scanned.count(x) > 0));
    }
}

TEST_CASE("BFS kernels agree on random graphs and match Floyd-Warshall") {
    for (auto [n, p, seed] : {std::tuple{10, 0.3, 1u}, {64, 0.05, 2u},
                              {130, 0.04, 3u}, {64, 0.8, 4u}}) {
        const SimpleGraph g = random_graph(n, p, seed);
        const auto s = kernels::all_pairs_distances_serial(g);
        const auto par = kernels::all_pairs_distances_parallel(g);
        CHECK(s == par);
        if (n <= 64) CHECK(s == oracles::floyd_warshall(g));
    }
}
