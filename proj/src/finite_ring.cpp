#include "ringtk/finite_ring.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ringtk/kernels.hpp"

namespace ringtk {

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<int>>& rows) {
    const int n = static_cast<int>(rows.size());
    CayleyTable t(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("CayleyTable: table is not square");
        for (int j = 0; j < n; ++j) t.at(i, j) = rows[i][j];
    }
    return t;
}

std::string ValidationReport::to_string() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.axiom << " violated at (" << v.witness[0] << ", " << v.witness[1]
           << ", " << v.witness[2] << ")\n";
    }
    return os.str();
}

ValidationReport validate_tables(const CayleyTable& add, const CayleyTable& mul) {
    if (add.order() != mul.order())
        throw std::invalid_argument("validate_tables: table orders differ");
    if (add.order() >= kernels::kParallelThreshold)
        return kernels::validate_tables_parallel(add, mul);
    return kernels::validate_tables_serial(add, mul);
}

FiniteRing::FiniteRing(std::string name, CayleyTable add, CayleyTable mul,
                       std::vector<std::string> element_names) {
    const int n = add.order();
    if (n < 1) throw std::invalid_argument("FiniteRing: order must be >= 1");
    if (n > kMaxOrder)
        throw std::invalid_argument("FiniteRing: order exceeds cap of " +
                                    std::to_string(kMaxOrder));
    ValidationReport report = validate_tables(add, mul);
    if (!report.ok)
        throw std::invalid_argument("FiniteRing '" + name +
                                    "': tables fail ring axioms:\n" + report.to_string());
    name_ = std::move(name);
    n_ = n;
    add_ = std::move(add);
    mul_ = std::move(mul);
    names_ = std::move(element_names);
    finalize();
}

FiniteRing FiniteRing::unchecked(std::string name, CayleyTable add, CayleyTable mul,
                                 std::vector<std::string> element_names) {
    FiniteRing r;
    r.name_ = std::move(name);
    r.n_ = add.order();
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.names_ = std::move(element_names);
    r.finalize();
    return r;
}

void FiniteRing::finalize() {
    const int n = n_;
    if (names_.empty()) {
        names_.reserve(n);
        for (int i = 0; i < n; ++i) names_.push_back(std::to_string(i));
    }
    if (static_cast<int>(names_.size()) != n)
        throw std::invalid_argument("FiniteRing: name count does not match order");
    {
        std::set<std::string> uniq(names_.begin(), names_.end());
        if (static_cast<int>(uniq.size()) != n)
            throw std::invalid_argument("FiniteRing: element names are not unique");
    }

    neg_.assign(n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (add_.at(x, y) == 0) { neg_[x] = y; break; }
    for (int x = 0; x < n; ++x)
        if (neg_[x] < 0)
            throw std::invalid_argument("FiniteRing: missing additive inverse");

    center_ = ElementSet(n);
    for (int z = 0; z < n; ++z) {
        bool central = true;
        for (int x = 0; x < n && central; ++x)
            central = mul_.at(z, x) == mul_.at(x, z);
        if (central) center_.insert(z);
    }
    commutative_ = center_.size() == n;

    const std::vector<bool> mask = n >= kernels::kParallelThreshold
                                       ? kernels::commutator_set_parallel(*this)
                                       : kernels::commutator_set_serial(*this);
    commutators_ = ElementSet(n);
    for (int x = 0; x < n; ++x)
        if (mask[x]) commutators_.insert(x);

    unity_.reset();
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x)
            ok = mul_.at(e, x) == x && mul_.at(x, e) == x;
        if (ok) { unity_ = e; break; }
    }
}

int FiniteRing::times(int k, int x) const {
    int acc = 0;
    for (int i = 0; i < k; ++i) acc = add_.at(acc, x);
    return acc;
}

int FiniteRing::additive_order(int x) const {
    int acc = x;
    int k = 1;
    while (acc != 0) {
        acc = add_.at(acc, x);
        ++k;
    }
    return k;
}

ElementSet FiniteRing::centralizer(int x) const {
    ElementSet out(n_);
    for (int y = 0; y < n_; ++y)
        if (mul_.at(x, y) == mul_.at(y, x)) out.insert(y);
    return out;
}

ElementSet FiniteRing::generalized_centralizer(int x, int r) const {
    ElementSet out(n_);
    for (int y = 0; y < n_; ++y)
        if (commutator(x, y) == r) out.insert(y);
    return out;
}

ElementSet FiniteRing::commutator_row(int x) const {
    ElementSet out(n_);
    for (int y = 0; y < n_; ++y) out.insert(commutator(x, y));
    return out;
}

ElementSet FiniteRing::additive_span(const ElementSet& seed) const {
    ElementSet span(n_);
    span.insert(0);
    std::vector<int> frontier{0};
    for (int s : seed.members()) {
        if (!span.contains(s)) { span.insert(s); frontier.push_back(s); }
        int m = neg_[s];
        if (!span.contains(m)) { span.insert(m); frontier.push_back(m); }
    }
    // closure under addition; negation follows in a finite group
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int a : frontier) {
            for (int b : span.members()) {
                int c = add_.at(a, b);
                if (!span.contains(c)) { span.insert(c); next.push_back(c); }
            }
        }
        frontier = std::move(next);
    }
    return span;
}

ElementSet FiniteRing::subring_generated_by(const std::vector<int>& generators) const {
    ElementSet s(n_);
    s.insert(0);
    for (int g : generators) s.insert(g);
    bool grew = true;
    while (grew) {
        grew = false;
        const std::vector<int> cur = s.members();
        for (int a : cur) {
            int m = neg_[a];
            if (!s.contains(m)) { s.insert(m); grew = true; }
            for (int b : cur) {
                int c = add_.at(a, b);
                if (!s.contains(c)) { s.insert(c); grew = true; }
                int d = mul_.at(a, b);
                if (!s.contains(d)) { s.insert(d); grew = true; }
            }
        }
    }
    return s;
}

std::vector<ElementSet> FiniteRing::commutative_subrings(int generator_bound) const {
    if (generator_bound < 1)
        throw std::invalid_argument("commutative_subrings: bound must be >= 1");
    std::vector<ElementSet> found;
    auto consider = [&](const ElementSet& s) {
        const std::vector<int> ms = s.members();
        for (std::size_t i = 0; i < ms.size(); ++i)
            for (std::size_t j = i + 1; j < ms.size(); ++j)
                if (mul_.at(ms[i], ms[j]) != mul_.at(ms[j], ms[i])) return;
        if (std::find(found.begin(), found.end(), s) == found.end())
            found.push_back(s);
    };

    consider(subring_generated_by({}));  // {0}
    std::vector<int> gens;
    // depth-first over generator tuples g1 < g2 < ... up to the bound
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == 0) return;
        for (int g = start; g < n_; ++g) {
            gens.push_back(g);
            consider(subring_generated_by(gens));
            self(self, g + 1, depth - 1);
            gens.pop_back();
        }
    };
    rec(rec, 0, generator_bound);

    std::sort(found.begin(), found.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.members() < b.members();
    });
    return found;
}

} // namespace ringtk
