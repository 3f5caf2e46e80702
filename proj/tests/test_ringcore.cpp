#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "oracles.hpp"
#include "ringtk/corpus.hpp"
#include "ringtk/finite_ring.hpp"
#include "ringtk/ring_factory.hpp"
#include "ringtk/ring_io.hpp"
#include "ringtk/ring_iso.hpp"

using namespace ringtk;

namespace {

// element indices in E(p^2)/F(p^2): i*p + j for i*g1 + j*g2
constexpr int E4_b = 1, E4_a = 2, E4_ab = 3;
constexpr int E9_a = 3, E9_a2b = 5, E9_2ab = 7;

std::vector<const FiniteRing*> small_rings(const RingRegistry& reg, int max_order) {
    std::vector<const FiniteRing*> out;
    for (const FiniteRing* r : reg.rings())
        if (r->order() <= max_order) out.push_back(r);
    return out;
}

} // namespace

TEST_CASE("validate_tables accepts modular arithmetic") {
    const FiniteRing z6 = zn_ring(6);
    const ValidationReport rep = validate_tables(z6.add_table(), z6.mul_table());
    CHECK(rep.ok);
    CHECK(rep.violations.empty());
    CHECK(oracles::violated_axioms(z6.add_table(), z6.mul_table()).empty());
}

TEST_CASE("validate_tables accepts the generated E(4) tables") {
    const FiniteRing e4 = e_ring(2);
    const ValidationReport rep = validate_tables(e4.add_table(), e4.mul_table());
    CHECK(rep.ok);
    CHECK(oracles::violated_axioms(e4.add_table(), e4.mul_table()).empty());
}

TEST_CASE("validate_tables flags a perturbed multiplication entry") {
    const FiniteRing e4 = e_ring(2);
    CayleyTable mul = e4.mul_table();
    mul.at(E4_a, E4_ab) = (mul.at(E4_a, E4_ab) + 1) % 4;
    const ValidationReport rep = validate_tables(e4.add_table(), mul);
    REQUIRE_FALSE(rep.ok);
    REQUIRE_FALSE(rep.violations.empty());

    std::set<std::string> got;
    for (const auto& v : rep.violations) got.insert(v.axiom);
    CHECK(got == oracles::violated_axioms(e4.add_table(), mul));
}

TEST_CASE("validate_tables rejects mismatched dimensions") {
    CHECK_THROWS_AS(validate_tables(CayleyTable(3), CayleyTable(4)),
                    std::invalid_argument);
    const std::vector<std::vector<int>> ragged = {{0, 1}, {1}};
    CHECK_THROWS_AS(CayleyTable::from_rows(ragged), std::invalid_argument);
}

TEST_CASE("zn_ring basics") {
    CHECK_THROWS_AS(zn_ring(0), std::invalid_argument);
    const FiniteRing z2 = zn_ring(2);
    CHECK(z2.order() == 2);
    CHECK(z2.is_commutative());
    const FiniteRing z6 = zn_ring(6);
    CHECK(z6.commutator_set().members() == std::vector<int>{0});
    const FiniteRing z4 = zn_ring(4);
    CHECK(z4.center().size() == 4);
    CHECK(z4.unity() == 1);
}

TEST_CASE("E(4): presentation facts") {
    const FiniteRing e4 = e_ring(2);
    CHECK(e4.order() == 4);
    CHECK_FALSE(e4.is_commutative());
    CHECK_FALSE(e4.unity().has_value());
    // ab = a, ba = b
    CHECK(e4.mul(E4_a, E4_b) == E4_a);
    CHECK(e4.mul(E4_b, E4_a) == E4_b);
    CHECK(e4.commutator(E4_a, E4_b) == E4_ab);
    CHECK(e4.center().members() == std::vector<int>{0});
    CHECK(e4.commutator_set().members() == std::vector<int>{0, E4_ab});
    CHECK(e4.element_name(E4_ab) == "a+b");
    CHECK_THROWS_AS(e_ring(4), std::invalid_argument);
}

TEST_CASE("E(9): commutator set and centralizers") {
    const FiniteRing e9 = e_ring(3);
    CHECK(e9.order() == 9);
    CHECK(e9.commutator_set().members() == std::vector<int>{0, E9_a2b, E9_2ab});
    CHECK(e9.element_name(E9_a2b) == "a+2b");
    CHECK(e9.element_name(E9_2ab) == "2a+b");
    CHECK(e9.centralizer(E9_a).members() == std::vector<int>{0, 3, 6});
    CHECK(e9.center().members() == std::vector<int>{0});
}

TEST_CASE("F rings: presentation facts") {
    const FiniteRing f4 = f_ring(2);
    CHECK(f4.order() == 4);
    CHECK_FALSE(f4.is_commutative());
    // xy = y, yx = x with x at index 2, y at index 1
    CHECK(f4.mul(2, 1) == 1);
    CHECK(f4.mul(1, 2) == 2);
    CHECK(f4.commutator(2, 1) == 3);  // x + y
    const FiniteRing f9 = f_ring(3);
    CHECK(f9.center().size() == 1);
    CHECK(f9.element_name(5) == "x+2y");
}

TEST_CASE("direct products") {
    const FiniteRing z2 = zn_ring(2);
    const FiniteRing e4 = e_ring(2);
    const FiniteRing p = direct_product(z2, e4);
    CHECK(p.order() == 8);
    CHECK(p.center().members() == std::vector<int>{0, 4});  // Z2 x {0}

    const FiniteRing z1 = zn_ring(1);
    const FiniteRing q = direct_product(z1, e4);
    CHECK(q.order() == 4);
    CHECK(q.add_table() == e4.add_table());
    CHECK(q.mul_table() == e4.mul_table());

    CHECK(direct_product(e4, f_ring(2)).order() == 16);
}

TEST_CASE("matrix rings") {
    const FiniteRing ut2 = upper_triangular_2x2(2);
    CHECK(ut2.order() == 8);
    CHECK_FALSE(ut2.is_commutative());
    CHECK(ut2.center().size() == 2);  // scalar matrices

    const FiniteRing m2 = matrix_ring_2x2(2);
    CHECK(m2.order() == 16);
    REQUIRE(m2.unity().has_value());
    CHECK(m2.element_name(*m2.unity()) == "[1,0;0,1]");
    CHECK_THROWS_AS(matrix_ring_2x2(5), std::invalid_argument);  // 625 > cap
}

TEST_CASE("commutator identities over the corpus") {
    const RingRegistry reg = default_corpus();
    for (const FiniteRing* r : small_rings(reg, 32)) {
        CAPTURE(r->name());
        for (int x = 0; x < r->order(); ++x) {
            CHECK(r->commutator(x, x) == 0);
            for (int y = 0; y < r->order(); ++y)
                CHECK(r->commutator(x, y) == r->neg(r->commutator(y, x)));
        }
    }
}

TEST_CASE("center equals the intersection of all centralizers") {
    const RingRegistry reg = default_corpus();
    for (const FiniteRing* r : small_rings(reg, 32)) {
        CAPTURE(r->name());
        ElementSet inter = ElementSet::full(r->order());
        for (int x = 0; x < r->order(); ++x) inter = inter.intersect(r->centralizer(x));
        CHECK(inter == r->center());
        const std::vector<int> scanned = oracles::center_scan(*r);
        CHECK(r->center().members() == scanned);
    }
}

TEST_CASE("generalized centralizers: sizes, cosets, reachability") {
    const RingRegistry reg = default_corpus();
    for (const FiniteRing* r : small_rings(reg, 27)) {
        CAPTURE(r->name());
        for (int x = 0; x < r->order(); ++x) {
            const ElementSet cx = r->centralizer(x);
            const ElementSet row = r->commutator_row(x);
            CHECK(r->generalized_centralizer(x, 0) == cx);
            for (int v = 0; v < r->order(); ++v) {
                const ElementSet t = r->generalized_centralizer(x, v);
                CHECK(t.size() == r->generalized_centralizer(x, r->neg(v)).size());
                if (!t.empty()) CHECK(t.size() == cx.size());
                CHECK(t.empty() == !row.contains(v));
            }
            if (!r->is_central(x)) CHECK(cx.size() >= r->center().size() + 1);
        }
        for (int v = 1; v < r->order(); ++v)
            CHECK(r->generalized_centralizer(0, v).empty());
    }
}

TEST_CASE("T_{a,a+b} in E(4)") {
    const FiniteRing e4 = e_ring(2);
    CHECK(e4.generalized_centralizer(E4_a, E4_ab).members() ==
          std::vector<int>{E4_b, E4_ab});
}

TEST_CASE("additive span") {
    const FiniteRing e4 = e_ring(2);
    CHECK(e4.additive_span(ElementSet(4)).members() == std::vector<int>{0});
    CHECK(e4.additive_span(e4.commutator_set()).members() == std::vector<int>{0, E4_ab});
    const FiniteRing e9 = e_ring(3);
    CHECK(e9.additive_span(e9.commutator_set()).members() ==
          std::vector<int>{0, E9_a2b, E9_2ab});

    const RingRegistry reg = default_corpus();
    for (const FiniteRing* r : small_rings(reg, 27)) {
        const ElementSet span = r->additive_span(r->commutator_set());
        CHECK(span.contains(0));
        for (int a : span.members()) {
            CHECK(span.contains(r->neg(a)));
            for (int b : span.members()) CHECK(span.contains(r->add(a, b)));
        }
    }
}

TEST_CASE("commutative subrings") {
    const FiniteRing e9 = e_ring(3);
    const auto subs = e9.commutative_subrings(1);
    bool has_a_line = false;
    for (const ElementSet& s : subs)
        has_a_line = has_a_line || s.members() == std::vector<int>{0, 3, 6};
    CHECK(has_a_line);
    CHECK(subs.back().members() == std::vector<int>{0});  // {0} always present

    const FiniteRing z6 = zn_ring(6);
    const auto z6subs = z6.commutative_subrings(1);
    CHECK(z6subs.front().size() == 6);  // generated by 1

    const RingRegistry reg = default_corpus();
    for (const FiniteRing* r : small_rings(reg, 16)) {
        CAPTURE(r->name());
        for (const ElementSet& s : r->commutative_subrings(2)) {
            const auto ms = s.members();
            CHECK(s.contains(0));
            for (int a : ms)
                for (int b : ms) {
                    CHECK(s.contains(r->add(a, b)));
                    CHECK(s.contains(r->mul(a, b)));
                    CHECK(s.contains(r->neg(a)));
                    CHECK(r->mul(a, b) == r->mul(b, a));
                }
        }
    }
}

TEST_CASE("unity detection") {
    CHECK(zn_ring(5).unity() == 1);
    CHECK_FALSE(e_ring(2).unity().has_value());
    CHECK_FALSE(f_ring(3).unity().has_value());
}

TEST_CASE("ring file round trip") {
    const FiniteRing e9 = e_ring(3);
    const std::string text = format_ring(e9);
    std::istringstream in(text);
    const FiniteRing back = parse_ring(in);
    CHECK(back.name() == e9.name());
    CHECK(back.add_table() == e9.add_table());
    CHECK(back.mul_table() == e9.mul_table());
    CHECK(back.element_names() == e9.element_names());
}

TEST_CASE("ring file parser normalizes the additive identity to index 0") {
    // Z3 relabeled by the swap 0 <-> 2: identity sits at index 2
    const std::string text =
        "ring z3swapped order 3\n"
        "1 2 0\n"
        "2 0 1\n"
        "0 1 2\n"
        "mul\n"
        "1 0 2\n"
        "0 1 2\n"
        "2 2 2\n"
        "names\n"
        "two one zero\n";
    std::istringstream in(text);
    const FiniteRing r = parse_ring(in);
    for (int x = 0; x < 3; ++x) CHECK(r.add(0, x) == x);
    CHECK(r.element_name(0) == "zero");
    CHECK(r.unity().has_value());
}

TEST_CASE("ring file parser rejects bad input") {
    auto expect_parse_error = [](const std::string& text) {
        std::istringstream in(text);
        CHECK_THROWS_AS(parse_ring(in), RingParseError);
    };
    expect_parse_error("circle Z2 order 2\n0 1\n1 0\nmul\n0 0\n0 1\n");
    expect_parse_error("ring Z2 order 2\n0 1\n1 0\nmul\n0 0\n");          // truncated
    expect_parse_error("ring Z2 order 2\n0 1\n1 9\nmul\n0 0\n0 1\n");     // range
    expect_parse_error("ring Z2 order 2\n0 1\n1 0\nmul\n0 0\n0 1\nnames\nonly_one\n");

    // well-formed but not a ring
    const std::string nonassoc =
        "ring bad order 4\n"
        "0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n"
        "mul\n"
        "0 0 0 0\n0 1 1 0\n0 2 2 1\n0 3 3 0\n";
    std::istringstream in(nonassoc);
    CHECK_THROWS_AS(parse_ring(in), RingValidationError);
}

TEST_CASE("element expression parsing") {
    const FiniteRing e9 = e_ring(3);
    CHECK(parse_element(e9, "a+2b") == E9_a2b);
    CHECK(parse_element(e9, "2a+b") == E9_2ab);
    CHECK(parse_element(e9, "2*a + 1*b") == E9_2ab);
    CHECK(parse_element(e9, "0") == 0);
    CHECK(parse_element(e9, "7") == E9_2ab);
    CHECK(parse_element(e9, "b+b") == 2);  // 2b
    CHECK_THROWS_AS(parse_element(e9, "a+c"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(e9, "42"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(e9, ""), std::invalid_argument);

    const FiniteRing f9 = f_ring(3);
    CHECK(parse_element(f9, "x+2y") == 5);

    // canonical round trip: parsing a display name returns its index
    for (int i = 0; i < e9.order(); ++i)
        CHECK(parse_element(e9, e9.element_name(i)) == i);

    const FiniteRing prod = direct_product(zn_ring(2), e_ring(2));
    CHECK(parse_element(prod, "(1,a)") == 4 + E4_a);
    CHECK(parse_element(prod, "(1,0)+(0,a)") == 4 + E4_a);
}

TEST_CASE("ring isomorphism search") {
    const FiniteRing e4 = e_ring(2);
    const FiniteRing f4 = f_ring(2);
    CHECK_FALSE(ring_isomorphic(e4, f4).has_value());  // the two are distinct
    CHECK_FALSE(ring_isomorphic(e4, zn_ring(4)).has_value());
    CHECK(ring_isomorphic(e4, e4).has_value());

    // relabeled copy: swap the two generators a <-> b
    const std::vector<int> perm = {0, 2, 1, 3};
    CayleyTable add(4), mul(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            add.at(perm[i], perm[j]) = perm[e4.add(i, j)];
            mul.at(perm[i], perm[j]) = perm[e4.mul(i, j)];
        }
    const FiniteRing shuffled("E4shuffled", add, mul);
    const auto iso = ring_isomorphic(e4, shuffled);
    REQUIRE(iso.has_value());
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            CHECK((*iso)[e4.add(x, y)] == shuffled.add((*iso)[x], (*iso)[y]));
            CHECK((*iso)[e4.mul(x, y)] == shuffled.mul((*iso)[x], (*iso)[y]));
        }

    const FiniteRing e9 = e_ring(3);
    CHECK(ring_isomorphic(e9, f_ring(3)).has_value() == false);
    CHECK(ring_isomorphic(e9, e9).has_value());
}

TEST_CASE("order cap") {
    CHECK(zn_ring(256).order() == 256);
    CHECK_THROWS_AS(zn_ring(257), std::invalid_argument);
}
