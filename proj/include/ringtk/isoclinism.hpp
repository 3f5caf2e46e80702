#ifndef RINGTK_ISOCLINISM_HPP
#define RINGTK_ISOCLINISM_HPP

#include <functional>
#include <string>
#include <vector>

#include "ringtk/finite_ring.hpp"

namespace ringtk {

/// Finite abelian group given by a Cayley table, used for additive
/// quotients R/Z(R) and derived subgroups [R,R].
struct AdditiveGroup {
    int order = 0;
    CayleyTable add;
    std::vector<std::string> labels;

    int at(int x, int y) const { return add.at(x, y); }
    int neg(int x) const;
    int element_order(int x) const;
    /// Sorted multiset of element orders; an isomorphism invariant.
    std::vector<int> order_profile() const;
};

/// Coset decomposition of (R, +) by Z(R). Cosets are indexed in order of
/// their least element; transversal[c] is that least element.
struct QuotientByCenter {
    AdditiveGroup group;
    std::vector<int> coset_of;     // ring element -> coset index
    std::vector<int> transversal;  // coset index -> representative element
};
QuotientByCenter quotient_by_center(const FiniteRing& ring);

/// [R,R] = additive span of K(R), with the induced addition.
/// element_of[i] is the ring element behind group index i (ascending).
struct DerivedSubgroup {
    AdditiveGroup group;
    std::vector<int> element_of;   // group index -> ring element
    std::vector<int> index_of;     // ring element -> group index or -1
};
DerivedSubgroup derived_subgroup(const FiniteRing& ring);

/// Enumerates every additive isomorphism a -> b by generator-image
/// backtracking; fn returning true stops the enumeration. Orders above 64
/// throw std::invalid_argument. Returns the number of isomorphisms visited.
int for_each_additive_isomorphism(const AdditiveGroup& a, const AdditiveGroup& b,
                                  const std::function<bool(const std::vector<int>&)>& fn);

/// Convenience wrapper collecting every isomorphism.
std::vector<std::vector<int>> additive_isomorphisms(const AdditiveGroup& a,
                                                    const AdditiveGroup& b);

/// A verified isoclinism between two rings: phi on the central quotients,
/// psi on the derived subgroups (as ring-element maps), compatible on every
/// pair of elements. When the centers have equal size, theta and the induced
/// vertex bijection alpha(rep + z) = rep' + theta(z) are populated.
struct IsoclinismWitness {
    std::vector<int> phi;            // coset index (R1/Z1) -> coset index (R2/Z2)
    std::vector<int> psi_domain;     // elements of [R1,R1], ascending
    std::vector<int> psi;            // psi_domain[i] -> element of R2
    std::vector<int> theta_domain;   // elements of Z(R1), ascending
    std::vector<int> theta;          // theta_domain[i] -> element of Z(R2)
    std::vector<int> alpha;          // element of R1 -> element of R2; empty
                                     // when |Z(R1)| != |Z(R2)|
    std::vector<int> transversal1;
    std::vector<int> transversal2;

    bool has_alpha() const { return !alpha.empty(); }
    /// psi applied to a ring element of [R1,R1]; throws std::domain_error
    /// outside the domain.
    int psi_at(int r1_element) const;

    std::string to_json() const;
};

enum class IsoclinismOutcome { found, none, undecided };

struct IsoclinismResult {
    IsoclinismOutcome outcome = IsoclinismOutcome::none;
    IsoclinismWitness witness;  // valid when outcome == found
};

/// Searches for an isoclinism. Quotient or derived-subgroup orders above 16
/// report undecided rather than searching. A found witness has been checked
/// for compatibility over all element pairs, not only transversal pairs.
IsoclinismResult find_isoclinism(const FiniteRing& r1, const FiniteRing& r2);

/// True iff alpha carries the r-noncommuting graph of r1 onto the
/// psi(r)-noncommuting graph of r2, checked over all vertex pairs.
/// Throws std::domain_error if r is outside [R1,R1] or the witness has no
/// alpha.
bool verify_witness(const IsoclinismWitness& w, const FiniteRing& r1,
                    const FiniteRing& r2, int r);

} // namespace ringtk

#endif
