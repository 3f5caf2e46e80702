#include "ringtk/isoclinism.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "json.hpp"

#include "ringtk/graph.hpp"

namespace ringtk {

int AdditiveGroup::neg(int x) const {
    for (int y = 0; y < order; ++y)
        if (add.at(x, y) == 0) return y;
    throw std::logic_error("AdditiveGroup: missing inverse");
}

int AdditiveGroup::element_order(int x) const {
    int acc = x, k = 1;
    while (acc != 0) {
        acc = add.at(acc, x);
        ++k;
    }
    return k;
}

std::vector<int> AdditiveGroup::order_profile() const {
    std::vector<int> p(order);
    for (int x = 0; x < order; ++x) p[x] = element_order(x);
    std::sort(p.begin(), p.end());
    return p;
}

QuotientByCenter quotient_by_center(const FiniteRing& ring) {
    const int n = ring.order();
    const std::vector<int> center = ring.center().members();
    QuotientByCenter q;
    q.coset_of.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        if (q.coset_of[x] >= 0) continue;
        const int c = int(q.transversal.size());
        q.transversal.push_back(x);  // least element: x is the first unseen
        for (int z : center) q.coset_of[ring.add(x, z)] = c;
    }
    const int m = int(q.transversal.size());
    q.group.order = m;
    q.group.add = CayleyTable(m);
    q.group.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        q.group.labels[i] = ring.element_name(q.transversal[i]) + "+Z";
        for (int j = 0; j < m; ++j)
            q.group.add.at(i, j) = q.coset_of[ring.add(q.transversal[i], q.transversal[j])];
    }
    return q;
}

DerivedSubgroup derived_subgroup(const FiniteRing& ring) {
    DerivedSubgroup d;
    const ElementSet span = ring.additive_span(ring.commutator_set());
    d.element_of = span.members();
    d.index_of.assign(ring.order(), -1);
    for (std::size_t i = 0; i < d.element_of.size(); ++i)
        d.index_of[d.element_of[i]] = int(i);
    const int m = int(d.element_of.size());
    d.group.order = m;
    d.group.add = CayleyTable(m);
    d.group.labels.resize(m);
    for (int i = 0; i < m; ++i) {
        d.group.labels[i] = ring.element_name(d.element_of[i]);
        for (int j = 0; j < m; ++j) {
            const int s = ring.add(d.element_of[i], d.element_of[j]);
            if (d.index_of[s] < 0)
                throw std::logic_error("derived_subgroup: span not closed");
            d.group.add.at(i, j) = d.index_of[s];
        }
    }
    return d;
}

namespace {

// Greedy generating sequence: repeatedly pick the least element outside the
// span of those chosen so far.
std::vector<int> generating_sequence(const AdditiveGroup& a) {
    const int n = a.order;
    std::vector<bool> in_span(n, false);
    in_span[0] = true;
    int covered = 1;
    std::vector<int> gens;
    auto close = [&] {
        bool grew = true;
        while (grew) {
            grew = false;
            for (int x = 0; x < n; ++x) {
                if (!in_span[x]) continue;
                for (int y = 0; y < n; ++y) {
                    if (!in_span[y]) continue;
                    const int s = a.at(x, y);
                    if (!in_span[s]) {
                        in_span[s] = true;
                        ++covered;
                        grew = true;
                    }
                }
            }
        }
    };
    while (covered < n) {
        for (int x = 1; x < n; ++x)
            if (!in_span[x]) {
                gens.push_back(x);
                in_span[x] = true;
                ++covered;
                break;
            }
        close();
    }
    return gens;
}

struct IsoEnumerator {
    const AdditiveGroup* a;
    const AdditiveGroup* b;
    std::vector<int> gens;          // generating sequence of a
    std::vector<int> map;           // a -> b, -1 unknown
    std::vector<bool> used;
    const std::function<bool(const std::vector<int>&)>* fn;
    bool stopped = false;
    int count = 0;

    // Extends the hom over the span of mapped elements; returns the list of
    // indices assigned (for rollback), or nullopt on conflict.
    std::optional<std::vector<int>> close(std::vector<int> fresh) {
        std::vector<int> assigned;
        for (std::size_t head = 0; head < fresh.size(); ++head) {
            const int x = fresh[head];
            for (int y = 0; y < a->order; ++y) {
                if (map[y] < 0) continue;
                for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
                    const int s = a->at(p, q);
                    const int t = b->at(map[p], map[q]);
                    if (map[s] < 0) {
                        if (used[t]) {  // not injective
                            rollback(assigned);
                            return std::nullopt;
                        }
                        map[s] = t;
                        used[t] = true;
                        assigned.push_back(s);
                        fresh.push_back(s);
                    } else if (map[s] != t) {
                        rollback(assigned);
                        return std::nullopt;
                    }
                }
            }
        }
        return assigned;
    }

    void rollback(const std::vector<int>& assigned) {
        for (int x : assigned) {
            used[map[x]] = false;
            map[x] = -1;
        }
    }

    void search(std::size_t gi) {
        if (stopped) return;
        if (gi == gens.size()) {
            // generators span everything, so the map is total and bijective
            ++count;
            if ((*fn)(map)) stopped = true;
            return;
        }
        const int g = gens[gi];
        if (map[g] >= 0) return search(gi + 1);  // already forced
        const int go = a->element_order(g);
        for (int img = 0; img < b->order; ++img) {
            if (used[img] || b->element_order(img) != go) continue;
            map[g] = img;
            used[img] = true;
            auto assigned = close({g});
            if (assigned) {
                search(gi + 1);
                rollback(*assigned);
            }
            map[g] = -1;
            used[img] = false;
            if (stopped) return;
        }
    }
};

} // namespace

int for_each_additive_isomorphism(const AdditiveGroup& a, const AdditiveGroup& b,
                                  const std::function<bool(const std::vector<int>&)>& fn) {
    if (a.order > 64 || b.order > 64)
        throw std::invalid_argument("additive isomorphism enumeration capped at order 64");
    if (a.order != b.order) return 0;
    if (a.order_profile() != b.order_profile()) return 0;
    IsoEnumerator e;
    e.a = &a;
    e.b = &b;
    e.gens = generating_sequence(a);
    e.map.assign(a.order, -1);
    e.used.assign(b.order, false);
    e.map[0] = 0;
    e.used[0] = true;
    e.fn = &fn;
    e.search(0);
    return e.count;
}

std::vector<std::vector<int>> additive_isomorphisms(const AdditiveGroup& a,
                                                    const AdditiveGroup& b) {
    std::vector<std::vector<int>> out;
    for_each_additive_isomorphism(a, b, [&](const std::vector<int>& iso) {
        out.push_back(iso);
        return false;
    });
    return out;
}

int IsoclinismWitness::psi_at(int r1_element) const {
    const auto it = std::lower_bound(psi_domain.begin(), psi_domain.end(), r1_element);
    if (it == psi_domain.end() || *it != r1_element)
        throw std::domain_error("psi: element outside [R1,R1]");
    return psi[std::size_t(it - psi_domain.begin())];
}

std::string IsoclinismWitness::to_json() const {
    nlohmann::ordered_json j;
    j["phi"] = phi;
    j["psi_domain"] = psi_domain;
    j["psi"] = psi;
    j["theta_domain"] = theta_domain;
    j["theta"] = theta;
    j["alpha"] = alpha;
    j["transversal1"] = transversal1;
    j["transversal2"] = transversal2;
    return j.dump(2) + "\n";
}

namespace {

// Checks psi([u,v]) = [u',v'] over every element pair, where u',v' are the
// transversal representatives of the phi-images of the cosets of u, v.
bool compatible_everywhere(const FiniteRing& r1, const FiniteRing& r2,
                           const QuotientByCenter& q1, const QuotientByCenter& q2,
                           const std::vector<int>& phi,
                           const IsoclinismWitness& w) {
    for (int u = 0; u < r1.order(); ++u) {
        const int iu = phi[q1.coset_of[u]];
        for (int v = 0; v < r1.order(); ++v) {
            const int iv = phi[q1.coset_of[v]];
            const int lhs = w.psi_at(r1.commutator(u, v));
            const int rhs = r2.commutator(q2.transversal[iu], q2.transversal[iv]);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

} // namespace

IsoclinismResult find_isoclinism(const FiniteRing& r1, const FiniteRing& r2) {
    IsoclinismResult result;
    const QuotientByCenter q1 = quotient_by_center(r1);
    const QuotientByCenter q2 = quotient_by_center(r2);
    const DerivedSubgroup d1 = derived_subgroup(r1);
    const DerivedSubgroup d2 = derived_subgroup(r2);

    if (q1.group.order != q2.group.order || d1.group.order != d2.group.order)
        return result;  // none
    if (q1.group.order > 16 || d1.group.order > 16) {
        result.outcome = IsoclinismOutcome::undecided;
        return result;
    }

    bool found = false;
    IsoclinismWitness w;
    for_each_additive_isomorphism(q1.group, q2.group, [&](const std::vector<int>& phi) {
        // phi forces psi on K(R1): [rep_i, rep_j] must map to the commutator
        // of the image representatives; collect and check consistency
        std::vector<int> kmap(r1.order(), -1);
        for (int i = 0; i < q1.group.order; ++i)
            for (int j = 0; j < q1.group.order; ++j) {
                const int k = r1.commutator(q1.transversal[i], q1.transversal[j]);
                const int k2 =
                    r2.commutator(q2.transversal[phi[i]], q2.transversal[phi[j]]);
                if (kmap[k] < 0) kmap[k] = k2;
                else if (kmap[k] != k2) return false;  // next phi
            }

        // extend over the additive span [R1,R1] by BFS from the known values
        std::vector<int> psi_elem(r1.order(), -1);
        std::vector<bool> hit(r2.order(), false);
        psi_elem[0] = 0;
        if (kmap[0] >= 0 && kmap[0] != 0) return false;
        hit[0] = true;
        std::vector<int> frontier{0};
        const std::vector<int> kvals = r1.commutator_set().members();
        for (int k : kvals)
            if (kmap[k] < 0) return false;  // only possible for broken tables
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            const int x = frontier[head];
            for (int k : kvals) {
                const int s = r1.add(x, k);
                const int t = r2.add(psi_elem[x], kmap[k]);
                if (psi_elem[s] < 0) {
                    if (hit[t]) return false;  // not injective
                    psi_elem[s] = t;
                    hit[t] = true;
                    frontier.push_back(s);
                } else if (psi_elem[s] != t) {
                    return false;
                }
            }
        }
        // psi must be additive on all of [R1,R1] and land onto [R2,R2]
        for (int x : d1.element_of) {
            if (psi_elem[x] < 0 || d2.index_of[psi_elem[x]] < 0) return false;
            for (int y : d1.element_of)
                if (psi_elem[r1.add(x, y)] != r2.add(psi_elem[x], psi_elem[y]))
                    return false;
        }

        w = IsoclinismWitness{};
        w.phi = phi;
        w.psi_domain = d1.element_of;
        for (int x : d1.element_of) w.psi.push_back(psi_elem[x]);
        w.transversal1 = q1.transversal;
        w.transversal2 = q2.transversal;
        w.theta_domain = r1.center().members();
        const std::vector<int> z2 = r2.center().members();
        if (w.theta_domain.size() == z2.size()) {
            w.theta = z2;  // index-order bijection
            w.alpha.assign(r1.order(), -1);
            for (int x = 0; x < r1.order(); ++x) {
                const int c = q1.coset_of[x];
                const int rep = q1.transversal[c];
                const int z = r1.sub(x, rep);  // x = rep + z with z central
                const auto zit = std::lower_bound(w.theta_domain.begin(),
                                                  w.theta_domain.end(), z);
                const int zi = int(zit - w.theta_domain.begin());
                w.alpha[x] = r2.add(q2.transversal[phi[c]], w.theta[zi]);
            }
        }
        if (!compatible_everywhere(r1, r2, q1, q2, phi, w)) return false;
        found = true;
        return true;  // stop enumeration
    });

    if (found) {
        result.outcome = IsoclinismOutcome::found;
        result.witness = std::move(w);
    }
    return result;
}

bool verify_witness(const IsoclinismWitness& w, const FiniteRing& r1,
                    const FiniteRing& r2, int r) {
    if (!w.has_alpha())
        throw std::domain_error("verify_witness: witness has no vertex bijection");
    const int psi_r = w.psi_at(r);  // throws if r outside [R1,R1]
    const SimpleGraph g1 = r_noncommuting_graph(r1, r);
    const SimpleGraph g2 = r_noncommuting_graph(r2, psi_r);
    for (int x = 0; x < r1.order(); ++x)
        for (int y = 0; y < r1.order(); ++y)
            if (g1.adjacent(x, y) != g2.adjacent(w.alpha[x], w.alpha[y])) return false;
    return true;
}

} // namespace ringtk
