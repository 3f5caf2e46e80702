#include "ringtk/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>

#include "ringtk/ring_factory.hpp"
#include "ringtk/ring_io.hpp"

namespace ringtk {

const FiniteRing& RingRegistry::add(FiniteRing ring) {
    if (find(ring.name()))
        throw std::invalid_argument("RingRegistry: duplicate ring name '" +
                                    ring.name() + "'");
    rings_.push_back(std::make_unique<FiniteRing>(std::move(ring)));
    return *rings_.back();
}

const FiniteRing& RingRegistry::add_from_file(const std::string& path) {
    return add(parse_ring_file(path));
}

const FiniteRing* RingRegistry::find(const std::string& name) const {
    for (const auto& r : rings_)
        if (r->name() == name) return r.get();
    return nullptr;
}

const FiniteRing& RingRegistry::get(const std::string& name) const {
    const FiniteRing* r = find(name);
    if (!r) throw std::out_of_range("unknown ring '" + name + "'");
    return *r;
}

std::vector<const FiniteRing*> RingRegistry::rings() const {
    std::vector<const FiniteRing*> out;
    out.reserve(rings_.size());
    for (const auto& r : rings_) out.push_back(r.get());
    return out;
}

RingRegistry default_corpus() {
    RingRegistry reg;
    for (int n = 1; n <= 9; ++n) reg.add(zn_ring(n));
    reg.add(e_ring(2));
    reg.add(f_ring(2));
    reg.add(e_ring(3));
    reg.add(f_ring(3));
    reg.add(upper_triangular_2x2(2));
    reg.add(upper_triangular_2x2(3));
    reg.add(matrix_ring_2x2(2));
    reg.add(direct_product(reg.get("Z2"), reg.get("E4")));
    reg.add(direct_product(reg.get("E4"), reg.get("F4")));
    // members with noncentral r of additive order >= 4, so the diameter
    // hypotheses (2r != 0, 3r != 0) are exercised; UT2_Z5 even has such r
    // inside K(R)
    reg.add(direct_product(reg.get("Z4"), reg.get("E4")));
    reg.add(upper_triangular_2x2(5));
    return reg;
}

namespace {

std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out += c;
    return out;
}

std::optional<int> lookup_name(const FiniteRing& ring, const std::string& token) {
    for (int i = 0; i < ring.order(); ++i)
        if (ring.element_name(i) == token) return i;
    return std::nullopt;
}

} // namespace

int parse_element(const FiniteRing& ring, const std::string& raw) {
    const std::string expr = strip_spaces(raw);
    if (expr.empty()) throw std::invalid_argument("empty element expression");

    // exact display-name match first ("a+2b" is usually itself a name)
    if (auto idx = lookup_name(ring, expr)) return *idx;

    // bare numeric index
    if (std::all_of(expr.begin(), expr.end(),
                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        const int v = std::stoi(expr);
        if (v >= ring.order())
            throw std::invalid_argument("element index " + expr + " out of range for " +
                                        ring.name());
        return v;
    }

    // sum of coefficient-scaled names: "2a+b", "3*a+1*b"
    int acc = 0;
    std::size_t pos = 0;
    while (pos < expr.size()) {
        std::size_t end = expr.find('+', pos);
        if (end == std::string::npos) end = expr.size();
        std::string term = expr.substr(pos, end - pos);
        if (term.empty())
            throw std::invalid_argument("bad element expression '" + raw + "'");
        int coeff = 1;
        std::size_t digits = 0;
        while (digits < term.size() &&
               std::isdigit(static_cast<unsigned char>(term[digits])))
            ++digits;
        std::string base = term;
        if (digits > 0 && digits < term.size()) {
            coeff = std::stoi(term.substr(0, digits));
            base = term.substr(digits);
            if (!base.empty() && base[0] == '*') base = base.substr(1);
        }
        const auto idx = lookup_name(ring, base);
        if (!idx)
            throw std::invalid_argument("unknown element name '" + base + "' in ring " +
                                        ring.name());
        acc = ring.add(acc, ring.times(coeff, *idx));
        pos = end + 1;
    }
    return acc;
}

} // namespace ringtk
