#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "json.hpp"

#include "ringtk/corpus.hpp"
#include "ringtk/graph.hpp"
#include "ringtk/isoclinism.hpp"
#include "ringtk/ring_factory.hpp"
#include "ringtk/ring_iso.hpp"

using namespace ringtk;

namespace {

AdditiveGroup cyclic_group(int n) {
    AdditiveGroup g;
    g.order = n;
    g.add = CayleyTable(n);
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) {
        g.labels[i] = std::to_string(i);
        for (int j = 0; j < n; ++j) g.add.at(i, j) = (i + j) % n;
    }
    return g;
}

AdditiveGroup klein_group() {
    // additive structure of E(4): componentwise mod 2
    const FiniteRing e4 = e_ring(2);
    AdditiveGroup g;
    g.order = 4;
    g.add = e4.add_table();
    g.labels = e4.element_names();
    return g;
}

bool is_additive_bijection(const AdditiveGroup& a, const AdditiveGroup& b,
                           const std::vector<int>& f) {
    std::vector<bool> seen(b.order, false);
    for (int x = 0; x < a.order; ++x) {
        if (f[x] < 0 || f[x] >= b.order || seen[f[x]]) return false;
        seen[f[x]] = true;
    }
    for (int x = 0; x < a.order; ++x)
        for (int y = 0; y < a.order; ++y)
            if (f[a.at(x, y)] != b.at(f[x], f[y])) return false;
    return true;
}

} // namespace

TEST_CASE("quotient by the center") {
    const FiniteRing e4 = e_ring(2);
    const QuotientByCenter q = quotient_by_center(e4);
    CHECK(q.group.order == 4);  // trivial center
    CHECK(q.transversal == std::vector<int>{0, 1, 2, 3});

    const QuotientByCenter qz = quotient_by_center(zn_ring(6));
    CHECK(qz.group.order == 1);

    const FiniteRing prod = direct_product(zn_ring(2), e_ring(2));
    const QuotientByCenter qp = quotient_by_center(prod);
    CHECK(qp.group.order == 4);
    // transversal entries are the least element of each coset
    for (std::size_t c = 0; c < qp.transversal.size(); ++c)
        for (int x = 0; x < prod.order(); ++x)
            if (qp.coset_of[x] == int(c)) CHECK(qp.transversal[c] <= x);
}

TEST_CASE("derived subgroups") {
    CHECK(derived_subgroup(e_ring(2)).group.order == 2);
    CHECK(derived_subgroup(zn_ring(7)).group.order == 1);
    const DerivedSubgroup d9 = derived_subgroup(e_ring(3));
    CHECK(d9.group.order == 3);
    CHECK(d9.element_of == std::vector<int>{0, 5, 7});
    CHECK(d9.group.order_profile() == std::vector<int>{1, 3, 3});
}

TEST_CASE("additive isomorphism enumeration counts") {
    CHECK(additive_isomorphisms(cyclic_group(2), cyclic_group(2)).size() == 1);
    CHECK(additive_isomorphisms(cyclic_group(3), cyclic_group(3)).size() == 2);
    CHECK(additive_isomorphisms(cyclic_group(4), cyclic_group(4)).size() == 2);
    CHECK(additive_isomorphisms(cyclic_group(4), klein_group()).empty());
    CHECK(additive_isomorphisms(klein_group(), klein_group()).size() == 6);  // GL(2,2)
    CHECK(additive_isomorphisms(cyclic_group(1), cyclic_group(1)).size() == 1);

    for (const auto& f : additive_isomorphisms(klein_group(), klein_group()))
        CHECK(is_additive_bijection(klein_group(), klein_group(), f));
    for (const auto& f : additive_isomorphisms(cyclic_group(6), cyclic_group(6)))
        CHECK(is_additive_bijection(cyclic_group(6), cyclic_group(6), f));
}

TEST_CASE("enumeration stops on first success when asked") {
    int calls = 0;
    for_each_additive_isomorphism(cyclic_group(5), cyclic_group(5),
                                  [&](const std::vector<int>&) {
                                      ++calls;
                                      return true;
                                  });
    CHECK(calls == 1);
}

TEST_CASE("isoclinism between the two order-4 presentations") {
    const FiniteRing e4 = e_ring(2);
    const FiniteRing f4 = f_ring(2);
    const IsoclinismResult res = find_isoclinism(e4, f4);
    REQUIRE(res.outcome == IsoclinismOutcome::found);
    const IsoclinismWitness& w = res.witness;
    REQUIRE(w.has_alpha());
    CHECK(w.psi_domain == std::vector<int>{0, 3});

    // compatibility over every pair, not only transversals
    const QuotientByCenter q1 = quotient_by_center(e4);
    const QuotientByCenter q2 = quotient_by_center(f4);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            const int lhs = w.psi_at(e4.commutator(u, v));
            const int rhs = f4.commutator(q2.transversal[w.phi[q1.coset_of[u]]],
                                          q2.transversal[w.phi[q1.coset_of[v]]]);
            CHECK(lhs == rhs);
        }

    for (int r : w.psi_domain) CHECK(verify_witness(w, e4, f4, r));

    // alpha restricted to the center is theta; alpha carries cosets to cosets
    for (std::size_t i = 0; i < w.theta_domain.size(); ++i)
        CHECK(w.alpha[w.theta_domain[i]] == w.theta[i]);
    for (int x = 0; x < 4; ++x)
        CHECK(q2.coset_of[w.alpha[x]] == w.phi[q1.coset_of[x]]);
}

TEST_CASE("isoclinism between the two order-9 presentations") {
    const FiniteRing e9 = e_ring(3);
    const FiniteRing f9 = f_ring(3);
    const IsoclinismResult res = find_isoclinism(e9, f9);
    REQUIRE(res.outcome == IsoclinismOutcome::found);
    CHECK(res.witness.psi_domain.size() == 3);
    for (int r : res.witness.psi_domain) CHECK(verify_witness(res.witness, e9, f9, r));
}

TEST_CASE("identity isoclinism of a ring with itself") {
    for (const FiniteRing& r : {e_ring(2), e_ring(3), upper_triangular_2x2(2)}) {
        CAPTURE(r.name());
        const IsoclinismResult res = find_isoclinism(r, r);
        REQUIRE(res.outcome == IsoclinismOutcome::found);
        for (int v : res.witness.psi_domain) CHECK(verify_witness(res.witness, r, r, v));
    }
}

TEST_CASE("no isoclinism when the quotient orders differ") {
    const IsoclinismResult res = find_isoclinism(e_ring(2), zn_ring(4));
    CHECK(res.outcome == IsoclinismOutcome::none);
}

TEST_CASE("isoclinic commutative rings with different center sizes: no alpha") {
    const IsoclinismResult res = find_isoclinism(zn_ring(2), zn_ring(4));
    REQUIRE(res.outcome == IsoclinismOutcome::found);
    CHECK_FALSE(res.witness.has_alpha());
    CHECK_THROWS_AS(verify_witness(res.witness, zn_ring(2), zn_ring(4), 0),
                    std::domain_error);
}

TEST_CASE("corrupted alpha fails verification") {
    const FiniteRing e4 = e_ring(2);
    const FiniteRing f4 = f_ring(2);
    IsoclinismResult res = find_isoclinism(e4, f4);
    REQUIRE(res.outcome == IsoclinismOutcome::found);
    IsoclinismWitness w = res.witness;
    std::swap(w.alpha[0], w.alpha[2]);  // swap the images of 0 and a
    bool all_pass = true;
    for (int r : w.psi_domain) all_pass = all_pass && verify_witness(w, e4, f4, r);
    CHECK_FALSE(all_pass);
}

TEST_CASE("psi domain errors") {
    const FiniteRing e4 = e_ring(2);
    const IsoclinismResult res = find_isoclinism(e4, f_ring(2));
    REQUIRE(res.outcome == IsoclinismOutcome::found);
    CHECK_THROWS_AS(res.witness.psi_at(2), std::domain_error);  // a is not in [R,R]
    CHECK_THROWS_AS(verify_witness(res.witness, e4, f_ring(2), 2), std::domain_error);
}

TEST_CASE("witness serializes to JSON index arrays") {
    const IsoclinismResult res = find_isoclinism(e_ring(3), f_ring(3));
    REQUIRE(res.outcome == IsoclinismOutcome::found);
    const nlohmann::json j = nlohmann::json::parse(res.witness.to_json());
    CHECK(j.at("phi").size() == 9);
    CHECK(j.at("psi_domain").size() == 3);
    CHECK(j.at("psi").size() == 3);
    CHECK(j.at("alpha").size() == 9);
    CHECK(j.at("theta").size() == 1);
    CHECK(j.at("transversal1").size() == 9);
}

TEST_CASE("a ring isomorphism induces graph isomorphisms for every r") {
    const FiniteRing e4 = e_ring(2);
    const std::vector<int> perm = {0, 3, 1, 2};
    CayleyTable add(4), mul(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            add.at(perm[i], perm[j]) = perm[e4.add(i, j)];
            mul.at(perm[i], perm[j]) = perm[e4.mul(i, j)];
        }
    const FiniteRing relabeled("E4relabeled", add, mul);
    const auto alpha0 = ring_isomorphic(e4, relabeled);
    REQUIRE(alpha0.has_value());
    for (int r = 0; r < 4; ++r) {
        const SimpleGraph g1 = r_noncommuting_graph(e4, r);
        const SimpleGraph g2 = r_noncommuting_graph(relabeled, (*alpha0)[r]);
        for (int x = 0; x < 4; ++x)
            for (int y = 0; y < 4; ++y)
                CHECK(g1.adjacent(x, y) == g2.adjacent((*alpha0)[x], (*alpha0)[y]));
    }
}
