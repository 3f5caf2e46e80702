#include "ringtk/graph_analysis.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <tuple>
#include <utility>

#include "ringtk/kernels.hpp"

namespace ringtk {

std::optional<int> regular_degree(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return std::nullopt;
    const int k = g.degree(0);
    for (int v = 1; v < n; ++v)
        if (g.degree(v) != k) return std::nullopt;
    return k;
}

Components connected_components(const SimpleGraph& g) {
    const int n = g.vertex_count();
    Components comps;
    comps.id.assign(n, -1);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comps.id[s] >= 0) continue;
        const int cid = comps.count++;
        comps.id[s] = cid;
        stack.push_back(s);
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (g.adjacent(u, v) && comps.id[v] < 0) {
                    comps.id[v] = cid;
                    stack.push_back(v);
                }
        }
    }
    return comps;
}

std::optional<int> distance(const SimpleGraph& g, int u, int v) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("distance: vertex out of range");
    if (u == v) return 0;
    std::vector<int> dist(n, -1);
    std::vector<int> queue{u};
    dist[u] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int a = queue[head];
        for (int b = 0; b < n; ++b)
            if (g.adjacent(a, b) && dist[b] < 0) {
                dist[b] = dist[a] + 1;
                if (b == v) return dist[b];
                queue.push_back(b);
            }
    }
    return std::nullopt;
}

Diameter diameter(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return {false, 0};
    const std::vector<int> dist = n >= kernels::kParallelThreshold
                                      ? kernels::all_pairs_distances_parallel(g)
                                      : kernels::all_pairs_distances_serial(g);
    int best = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int d = dist[std::size_t(i) * n + j];
            if (d < 0) return {true, 0};
            best = std::max(best, d);
        }
    return {false, best};
}

namespace {

bool is_connected(const SimpleGraph& g) {
    return g.vertex_count() == 0 || connected_components(g).count == 1;
}

// Exact lollipop test: a unique degree-1 vertex starting a path that ends at
// a complete block of size >= 3; confirmed by rebuilding the adjacency.
bool lollipop_check(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 4 || !is_connected(g)) return false;
    int tail = -1;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) {
            if (tail >= 0) return false;
            tail = v;
        }
    if (tail < 0) return false;

    // walk the path from the tail through degree-2 vertices
    std::vector<bool> on_path(n, false);
    std::vector<int> path{tail};
    on_path[tail] = true;
    int cur = tail, prev = -1;
    while (true) {
        int next = -1;
        for (int v = 0; v < n; ++v)
            if (g.adjacent(cur, v) && v != prev) { next = v; break; }
        if (next < 0) return false;
        if (g.degree(next) == 2) {
            prev = cur;
            cur = next;
            if (on_path[cur]) return false;  // cycle, not a path
            on_path[cur] = true;
            path.push_back(cur);
            continue;
        }
        // next should be the attachment vertex of the complete block
        break;
    }
    int attach = -1;
    for (int v = 0; v < n; ++v)
        if (g.adjacent(cur, v) && v != prev && !on_path[v]) { attach = v; break; }
    if (attach < 0) return false;

    std::vector<int> block;
    for (int v = 0; v < n; ++v)
        if (!on_path[v]) block.push_back(v);
    const int m = int(block.size());
    if (m < 3) return false;

    // reconstruct: block complete, path a chain, one bridge, nothing else
    SimpleGraph model(n);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) model.add_edge(block[i], block[j]);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) model.add_edge(path[i], path[i + 1]);
    model.add_edge(path.back(), attach);
    return model.same_adjacency(g);
}

// Connected, 2-colorable, and every cross pair adjacent; both parts nonempty.
bool complete_bipartite_check(const SimpleGraph& g) {
    const int n = g.vertex_count();
    if (n < 2 || !is_connected(g)) return false;
    std::vector<int> color(n, -1);
    std::vector<int> queue{0};
    color[0] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int v = 0; v < n; ++v) {
            if (!g.adjacent(u, v)) continue;
            if (color[v] < 0) {
                color[v] = 1 - color[u];
                queue.push_back(v);
            } else if (color[v] == color[u]) {
                return false;
            }
        }
    }
    int part0 = int(std::count(color.begin(), color.end(), 0));
    if (part0 == 0 || part0 == n) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (color[u] != color[v] && !g.adjacent(u, v)) return false;
    return true;
}

} // namespace

GraphShape shape(const SimpleGraph& g) {
    GraphShape s;
    const int n = g.vertex_count();
    const int e = g.edge_count();
    s.is_empty = e == 0;
    s.is_complete = e == n * (n - 1) / 2;
    const bool connected = is_connected(g);
    s.is_tree = n >= 1 && connected && e == n - 1;
    if (s.is_tree && n >= 2) {
        int max_deg = 0;
        for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
        s.is_star = max_deg == n - 1;
    }
    s.is_lollipop = lollipop_check(g);
    s.is_complete_bipartite = complete_bipartite_check(g);
    s.regular_degree = regular_degree(g);
    if (s.regular_degree == 1) {
        s.is_disjoint_union_of_edges = true;
        s.k_edges = n / 2;
    }
    return s;
}

// --- exact maximum clique -------------------------------------------------
//
// Branch and bound on single-word bitsets (vertex cap 64) with a greedy
// coloring bound, vertices preordered by descending degree.

namespace {

struct CliqueSearcher {
    int n = 0;
    std::vector<std::uint64_t> nbr;   // permuted adjacency
    std::vector<int> perm;            // search position -> original vertex
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    int best = 0;
    std::uint64_t best_mask = 0;

    // greedy coloring upper bound on the candidate set; also orders the
    // candidates by color for the branch loop
    int color_bound(std::uint64_t cand, std::vector<int>& order,
                    std::vector<int>& color) const {
        order.clear();
        color.clear();
        int colors = 0;
        std::uint64_t left = cand;
        while (left) {
            ++colors;
            std::uint64_t avail = left;
            while (avail) {
                const int v = std::countr_zero(avail);
                avail &= avail - 1;
                avail &= ~nbr[v];
                left &= ~(std::uint64_t(1) << v);
                order.push_back(v);
                color.push_back(colors);
            }
        }
        return colors;
    }

    void expand(std::uint64_t cand, std::uint64_t current, int depth) {
        if (exhausted) return;
        std::vector<int> order, color;
        color_bound(cand, order, color);
        for (int i = int(order.size()) - 1; i >= 0; --i) {
            if (depth + color[i] <= best) return;  // bound: colors left too few
            if (++nodes > budget) { exhausted = true; return; }
            const int v = order[i];
            const std::uint64_t vbit = std::uint64_t(1) << v;
            const std::uint64_t next = cand & nbr[v];
            if (depth + 1 > best) {
                best = depth + 1;
                best_mask = current | vbit;
            }
            if (next) expand(next, current | vbit, depth + 1);
            if (exhausted) return;
            cand &= ~vbit;
        }
    }
};

} // namespace

CliqueResult clique_number(const SimpleGraph& g, std::uint64_t node_budget) {
    const int n = g.vertex_count();
    if (n > kExactSearchVertexCap)
        throw std::invalid_argument("clique_number: graph exceeds the " +
                                    std::to_string(kExactSearchVertexCap) +
                                    "-vertex cap");
    CliqueResult result;
    if (n == 0) {
        result.decided = true;
        return result;
    }

    CliqueSearcher s;
    s.n = n;
    s.budget = node_budget;
    s.perm.resize(n);
    std::iota(s.perm.begin(), s.perm.end(), 0);
    std::stable_sort(s.perm.begin(), s.perm.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[s.perm[i]] = i;
    s.nbr.assign(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (g.adjacent(u, v)) s.nbr[pos[u]] |= std::uint64_t(1) << pos[v];

    const std::uint64_t all = n == 64 ? ~std::uint64_t(0)
                                      : (std::uint64_t(1) << n) - 1;
    s.expand(all, 0, 0);

    result.nodes = s.nodes;
    if (s.exhausted) return result;  // undecided
    result.decided = true;
    result.size = s.best;
    for (int i = 0; i < n; ++i)
        if ((s.best_mask >> i) & 1) result.witness.push_back(s.perm[i]);
    std::sort(result.witness.begin(), result.witness.end());
    return result;
}

// --- graph isomorphism ------------------------------------------------------
//
// Iterated degree refinement assigns stable colors; backtracking then maps
// color classes across, counting assignments against the budget. Any mapping
// found is re-verified edge by edge before being reported.

namespace {

// Degree refinement run jointly over both graphs so that class ids are
// comparable across them: every round draws canonical ids from one shared
// key map. Refinement only ever splits classes, so a round that does not
// increase the class count has reached the stable partition.
std::pair<std::vector<int>, std::vector<int>> joint_stable_colors(
    const SimpleGraph& g, const SimpleGraph& h) {
    const int n = g.vertex_count();
    std::vector<int> gc(n), hc(n);
    for (int v = 0; v < n; ++v) gc[v] = g.degree(v);
    for (int v = 0; v < n; ++v) hc[v] = h.degree(v);
    auto class_count = [&] {
        std::map<int, int> seen;
        for (int c : gc) seen[c]++;
        for (int c : hc) seen[c]++;
        return seen.size();
    };
    std::size_t classes = class_count();
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        auto refine = [&](const SimpleGraph& graph, const std::vector<int>& old,
                          std::vector<int>& next) {
            for (int v = 0; v < n; ++v) {
                std::vector<int> neigh;
                for (int u = 0; u < n; ++u)
                    if (graph.adjacent(v, u)) neigh.push_back(old[u]);
                std::sort(neigh.begin(), neigh.end());
                auto key = std::make_pair(old[v], std::move(neigh));
                auto [it, _] = ids.try_emplace(std::move(key), int(ids.size()));
                next[v] = it->second;
            }
        };
        std::vector<int> gn(n), hn(n);
        refine(g, gc, gn);
        refine(h, hc, hn);
        gc = std::move(gn);
        hc = std::move(hn);
        const std::size_t now = class_count();
        if (now == classes) break;
        classes = now;
    }
    return {gc, hc};
}

std::map<int, int> color_histogram(const std::vector<int>& colors) {
    std::map<int, int> h;
    for (int c : colors) h[c]++;
    return h;
}

bool verify_mapping(const SimpleGraph& g, const SimpleGraph& h,
                    const std::vector<int>& map) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
    return true;
}

struct IsoSearcher {
    const SimpleGraph* g = nullptr;
    const SimpleGraph* h = nullptr;
    std::vector<int> gcolor, hcolor;
    std::vector<int> order;      // g-vertices, most constrained first
    std::vector<int> mapping;    // g -> h, -1 unassigned
    std::vector<bool> used;      // h-vertex already used
    std::uint64_t budget = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;

    bool backtrack(std::size_t pos) {
        if (pos == order.size()) return true;
        const int u = order[pos];
        const int n = g->vertex_count();
        for (int w = 0; w < n; ++w) {
            if (used[w] || hcolor[w] != gcolor[u]) continue;
            if (++nodes > budget) { exhausted = true; return false; }
            bool ok = true;
            for (std::size_t q = 0; q < pos && ok; ++q) {
                const int v = order[q];
                ok = g->adjacent(u, v) == h->adjacent(w, mapping[v]);
            }
            if (!ok) continue;
            mapping[u] = w;
            used[w] = true;
            if (backtrack(pos + 1)) return true;
            if (exhausted) return false;
            mapping[u] = -1;
            used[w] = false;
        }
        return false;
    }
};

} // namespace

IsoResult graph_isomorphic(const SimpleGraph& g, const SimpleGraph& h,
                           std::uint64_t node_budget) {
    if (g.vertex_count() > kExactSearchVertexCap ||
        h.vertex_count() > kExactSearchVertexCap)
        throw std::invalid_argument("graph_isomorphic: graph exceeds the " +
                                    std::to_string(kExactSearchVertexCap) +
                                    "-vertex cap");
    IsoResult result;
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return result;  // none
    const int n = g.vertex_count();
    if (n == 0) {
        result.outcome = SearchOutcome::found;
        return result;
    }

    IsoSearcher s;
    s.g = &g;
    s.h = &h;
    std::tie(s.gcolor, s.hcolor) = joint_stable_colors(g, h);
    if (color_histogram(s.gcolor) != color_histogram(s.hcolor)) {
        // any isomorphism preserves stable colors, so differing histograms
        // rule it out
        return result;
    }

    std::map<int, int> class_size;
    for (int c : s.hcolor) class_size[c]++;
    s.order.resize(n);
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&](int a, int b) {
        return class_size[s.gcolor[a]] < class_size[s.gcolor[b]];
    });
    s.mapping.assign(n, -1);
    s.used.assign(n, false);
    s.budget = node_budget;

    const bool found = s.backtrack(0);
    result.nodes = s.nodes;
    if (s.exhausted) {
        result.outcome = SearchOutcome::undecided;
        return result;
    }
    if (!found) return result;  // none
    if (!verify_mapping(g, h, s.mapping)) {
        // a mapping that fails re-verification is a bug, not a "none"
        throw std::logic_error("graph_isomorphic: candidate failed verification");
    }
    result.outcome = SearchOutcome::found;
    result.mapping = s.mapping;
    return result;
}

} // namespace ringtk
