#include "ringtk/ring_iso.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace ringtk {

namespace {

constexpr int kRingIsoOrderCap = 16;

// Per-element invariants any ring isomorphism must preserve.
struct ElementProfile {
    int additive_order;
    int centralizer_size;
    bool idempotent;   // x*x == x
    bool square_zero;  // x*x == 0
    bool central;

    auto tie() const {
        return std::tuple(additive_order, centralizer_size, idempotent, square_zero,
                          central);
    }
    bool operator==(const ElementProfile& o) const { return tie() == o.tie(); }
    bool operator<(const ElementProfile& o) const { return tie() < o.tie(); }
};

ElementProfile profile_of(const FiniteRing& r, int x) {
    return {r.additive_order(x), r.centralizer(x).size(), r.mul(x, x) == x,
            r.mul(x, x) == 0, r.is_central(x)};
}

struct Searcher {
    const FiniteRing* r1;
    const FiniteRing* r2;
    std::vector<ElementProfile> prof1, prof2;
    std::vector<int> map;   // r1 element -> r2 element, -1 unassigned
    std::vector<bool> used;

    bool consistent(int x, int y) const {
        // both tables must commute with the partial map
        const int n = r1->order();
        for (int u = 0; u < n; ++u) {
            const int mu = map[u];
            if (mu < 0) continue;
            if (map[r1->add(x, u)] >= 0 && map[r1->add(x, u)] != r2->add(y, mu))
                return false;
            if (map[r1->add(u, x)] >= 0 && map[r1->add(u, x)] != r2->add(mu, y))
                return false;
            if (map[r1->mul(x, u)] >= 0 && map[r1->mul(x, u)] != r2->mul(y, mu))
                return false;
            if (map[r1->mul(u, x)] >= 0 && map[r1->mul(u, x)] != r2->mul(mu, y))
                return false;
        }
        return true;
    }

    bool extend(int x) {
        const int n = r1->order();
        if (x == n) return true;
        if (map[x] >= 0) return extend(x + 1);  // forced earlier
        for (int y = 1; y < n; ++y) {
            if (used[y] || !(prof1[x] == prof2[y])) continue;
            if (!consistent(x, y)) continue;
            map[x] = y;
            used[y] = true;
            if (extend(x + 1)) return true;
            map[x] = -1;
            used[y] = false;
        }
        return false;
    }

    bool full_check() const {
        const int n = r1->order();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (map[r1->add(x, y)] != r2->add(map[x], map[y])) return false;
                if (map[r1->mul(x, y)] != r2->mul(map[x], map[y])) return false;
            }
        return true;
    }
};

} // namespace

std::optional<std::vector<int>> ring_isomorphic(const FiniteRing& r1,
                                                const FiniteRing& r2) {
    const int n = r1.order();
    if (n != r2.order()) return std::nullopt;
    if (r1.is_commutative() != r2.is_commutative()) return std::nullopt;
    if (r1.unity().has_value() != r2.unity().has_value()) return std::nullopt;
    if (r1.center().size() != r2.center().size()) return std::nullopt;
    if (r1.commutator_set().size() != r2.commutator_set().size()) return std::nullopt;

    Searcher s;
    s.r1 = &r1;
    s.r2 = &r2;
    s.prof1.reserve(n);
    s.prof2.reserve(n);
    for (int x = 0; x < n; ++x) {
        s.prof1.push_back(profile_of(r1, x));
        s.prof2.push_back(profile_of(r2, x));
    }
    {
        auto a = s.prof1;
        auto b = s.prof2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (!(a == b)) return std::nullopt;
    }
    // every cheap invariant agrees; refusing to search must not be silently
    // reported as non-isomorphic
    if (n > kRingIsoOrderCap)
        throw std::invalid_argument("ring_isomorphic: order exceeds the " +
                                    std::to_string(kRingIsoOrderCap) +
                                    "-element search cap");

    s.map.assign(n, -1);
    s.used.assign(n, false);
    s.map[0] = 0;  // 0 is fixed by any isomorphism
    s.used[0] = true;
    if (!s.extend(1)) return std::nullopt;
    if (!s.full_check()) return std::nullopt;
    return s.map;
}

} // namespace ringtk
