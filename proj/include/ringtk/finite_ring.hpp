#ifndef RINGTK_FINITE_RING_HPP
#define RINGTK_FINITE_RING_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ringtk/element_set.hpp"

namespace ringtk {

/// Square operation table over element indices [0, n).
class CayleyTable {
public:
    CayleyTable() = default;
    explicit CayleyTable(int n) : n_(n), v_(std::size_t(n) * n, 0) {}

    /// Builds from row vectors; throws std::invalid_argument if the rows do
    /// not form a square table.
    static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

    int order() const { return n_; }
    int at(int x, int y) const { return v_[std::size_t(x) * n_ + y]; }
    int& at(int x, int y) { return v_[std::size_t(x) * n_ + y]; }
    const std::vector<int>& flat() const { return v_; }

    bool operator==(const CayleyTable&) const = default;

private:
    int n_ = 0;
    std::vector<int> v_;
};

struct AxiomViolation {
    std::string axiom;           // e.g. "mul-associative"
    std::array<int, 3> witness;  // minimal (lexicographically first) triple
};

struct ValidationReport {
    bool ok = true;
    std::vector<AxiomViolation> violations;  // one entry per violated axiom
    std::string to_string() const;
};

/// Checks the ring axioms over a pair of tables of equal order: (R, +) is an
/// abelian group with identity at index 0, multiplication is associative and
/// distributes over addition on both sides, and every entry is in range.
/// Throws std::invalid_argument if the tables are non-square or differ in
/// order. The report carries the lexicographically smallest witness triple
/// for each violated axiom.
ValidationReport validate_tables(const CayleyTable& add, const CayleyTable& mul);

/// Finite ring of order <= kMaxOrder given by explicit addition and
/// multiplication tables. Index 0 is always the additive identity.
/// Immutable after construction; derived data (center, commutator set,
/// negation) is computed eagerly so instances can be shared across threads.
class FiniteRing {
public:
    static constexpr int kMaxOrder = 256;

    /// Validates the tables and throws std::invalid_argument (with the
    /// violation report in the message) if they do not form a ring, if the
    /// additive identity is not at index 0, or if names are not unique.
    FiniteRing(std::string name, CayleyTable add, CayleyTable mul,
               std::vector<std::string> element_names = {});

    /// Skips validation. For tests and benchmarks that need deliberately
    /// broken tables; regular construction paths must not use this.
    static FiniteRing unchecked(std::string name, CayleyTable add, CayleyTable mul,
                                std::vector<std::string> element_names = {});

    int order() const { return n_; }
    const std::string& name() const { return name_; }
    const std::string& element_name(int x) const { return names_[x]; }
    const std::vector<std::string>& element_names() const { return names_; }
    const CayleyTable& add_table() const { return add_; }
    const CayleyTable& mul_table() const { return mul_; }

    int add(int x, int y) const { return add_.at(x, y); }
    int mul(int x, int y) const { return mul_.at(x, y); }
    int neg(int x) const { return neg_[x]; }
    int sub(int x, int y) const { return add_.at(x, neg_[y]); }

    /// k-fold additive multiple k*x (k >= 0).
    int times(int k, int x) const;

    /// Additive commutator xy - yx.
    int commutator(int x, int y) const {
        return sub(mul_.at(x, y), mul_.at(y, x));
    }

    /// Additive order of x: least k >= 1 with k*x = 0.
    int additive_order(int x) const;

    const ElementSet& center() const { return center_; }
    bool is_central(int x) const { return center_.contains(x); }
    bool is_commutative() const { return commutative_; }
    std::optional<int> unity() const { return unity_; }

    /// C_R(x) = { y : xy = yx }.
    ElementSet centralizer(int x) const;

    /// T_{x,r} = { y : [x,y] = r }.
    ElementSet generalized_centralizer(int x, int r) const;

    /// K(R) = { [x,y] : x,y in R }.
    const ElementSet& commutator_set() const { return commutators_; }

    /// [x,R] = { [x,y] : y in R }; already an additive subgroup.
    ElementSet commutator_row(int x) const;

    /// Additive closure of S united with {0} under + and negation.
    ElementSet additive_span(const ElementSet& seed) const;

    /// Smallest subring containing the given generators (closure under +,
    /// negation and multiplication).
    ElementSet subring_generated_by(const std::vector<int>& generators) const;

    /// All distinct subrings generated by at most generator_bound elements,
    /// filtered to the commutative ones, sorted by descending size (ties by
    /// member list). A lower-bound provider: subrings needing more
    /// generators than the bound are not found.
    std::vector<ElementSet> commutative_subrings(int generator_bound = 2) const;

private:
    FiniteRing() = default;
    void finalize();  // derived data; assumes tables already in place

    std::string name_;
    int n_ = 0;
    CayleyTable add_;
    CayleyTable mul_;
    std::vector<std::string> names_;
    std::vector<int> neg_;
    ElementSet center_;
    ElementSet commutators_;
    bool commutative_ = false;
    std::optional<int> unity_;
};

} // namespace ringtk

#endif
