#include "ringtk/ring_io.hpp"

#include <fstream>
#include <functional>
#include <sstream>

namespace ringtk {

namespace {

std::vector<std::vector<int>> read_table(std::istream& in, int n, const char* which) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(in >> rows[i][j]))
                throw RingParseError(std::string("ring file: truncated ") + which +
                                     " table at row " + std::to_string(i));
    return rows;
}

// Relabels so that the additive identity sits at index 0; swapping the
// identity with whatever occupies index 0 is enough.
void normalize_zero(std::vector<std::vector<int>>& add,
                    std::vector<std::vector<int>>& mul,
                    std::vector<std::string>& names) {
    const int n = int(add.size());
    int zero = -1;
    for (int e = 0; e < n && zero < 0; ++e) {
        bool ident = true;
        for (int x = 0; x < n && ident; ++x) {
            if (add[e][x] < 0 || add[e][x] >= n) return;  // let validation report it
            ident = add[e][x] == x && add[x][e] == x;
        }
        if (ident) zero = e;
    }
    if (zero <= 0) return;  // absent (validation fails) or already at 0
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    perm[0] = zero;
    perm[zero] = 0;
    auto apply = [&](const std::vector<std::vector<int>>& t) {
        std::vector<std::vector<int>> out(n, std::vector<int>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out[perm[i]][perm[j]] = perm[t[i][j]];
        return out;
    };
    add = apply(add);
    mul = apply(mul);
    std::vector<std::string> renamed(n);
    for (int i = 0; i < n; ++i) renamed[perm[i]] = names[i];
    names = std::move(renamed);
}

} // namespace

FiniteRing parse_ring(std::istream& in) {
    std::string kw;
    if (!(in >> kw) || kw != "ring")
        throw RingParseError("ring file: expected leading 'ring' keyword");
    std::string name;
    if (!(in >> name)) throw RingParseError("ring file: missing ring name");
    if (!(in >> kw) || kw != "order")
        throw RingParseError("ring file: expected 'order <n>'");
    int n = 0;
    if (!(in >> n) || n < 1) throw RingParseError("ring file: bad order");
    if (n > FiniteRing::kMaxOrder)
        throw RingParseError("ring file: order exceeds cap of " +
                             std::to_string(FiniteRing::kMaxOrder));

    auto add_rows = read_table(in, n, "addition");
    if (!(in >> kw) || kw != "mul")
        throw RingParseError("ring file: expected 'mul' separator");
    auto mul_rows = read_table(in, n, "multiplication");

    std::vector<std::string> names;
    if (in >> kw) {
        if (kw != "names")
            throw RingParseError("ring file: unexpected trailing token '" + kw + "'");
        names.resize(n);
        for (int i = 0; i < n; ++i)
            if (!(in >> names[i]))
                throw RingParseError("ring file: expected " + std::to_string(n) +
                                     " names");
    }
    if (names.empty()) {
        names.resize(n);
        for (int i = 0; i < n; ++i) names[i] = std::to_string(i);
    }

    for (const auto& rows : {std::cref(add_rows), std::cref(mul_rows)})
        for (const auto& row : rows.get())
            for (int v : row)
                if (v < 0 || v >= n)
                    throw RingParseError("ring file: table entry out of range");

    normalize_zero(add_rows, mul_rows, names);

    CayleyTable add = CayleyTable::from_rows(add_rows);
    CayleyTable mul = CayleyTable::from_rows(mul_rows);
    ValidationReport report = validate_tables(add, mul);
    if (!report.ok)
        throw RingValidationError("ring file '" + name + "' fails ring axioms:\n" +
                                      report.to_string(),
                                  report);
    return FiniteRing(std::move(name), std::move(add), std::move(mul), std::move(names));
}

FiniteRing parse_ring_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RingParseError("cannot open ring file: " + path);
    return parse_ring(in);
}

std::string format_ring(const FiniteRing& ring) {
    const int n = ring.order();
    std::ostringstream os;
    os << "ring " << ring.name() << " order " << n << "\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) os << (j ? " " : "") << ring.add(i, j);
        os << "\n";
    }
    os << "mul\n";
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) os << (j ? " " : "") << ring.mul(i, j);
        os << "\n";
    }
    os << "names\n";
    for (int i = 0; i < n; ++i) os << (i ? " " : "") << ring.element_name(i);
    os << "\n";
    return os.str();
}

} // namespace ringtk
