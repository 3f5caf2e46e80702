#ifndef RINGTK_GRAPH_ANALYSIS_HPP
#define RINGTK_GRAPH_ANALYSIS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ringtk/graph.hpp"

namespace ringtk {

/// Largest vertex count the exact clique / isomorphism searches accept.
inline constexpr int kExactSearchVertexCap = 64;

/// Default node budgets; overridable per call and via cli environment.
inline constexpr std::uint64_t kDefaultCliqueBudget = 50'000'000;
inline constexpr std::uint64_t kDefaultIsoBudget = 50'000'000;

struct GraphShape {
    bool is_complete = false;
    bool is_empty = false;           // no edges
    bool is_tree = false;
    bool is_star = false;            // K_{1,n}, n >= 1
    bool is_lollipop = false;        // K_m (m >= 3) bridged to a path P_t (t >= 1)
    bool is_complete_bipartite = false;  // both parts nonempty
    std::optional<int> regular_degree;
    bool is_disjoint_union_of_edges = false;  // kK_2, i.e. 1-regular
    int k_edges = 0;                          // the k of kK_2 when 1-regular
};

/// Exact classification of a small graph against the shapes above.
GraphShape shape(const SimpleGraph& g);

/// k if every vertex has degree k, nullopt otherwise.
std::optional<int> regular_degree(const SimpleGraph& g);

/// Component id per vertex, ids numbered by first occurrence.
struct Components {
    int count = 0;
    std::vector<int> id;
};
Components connected_components(const SimpleGraph& g);

/// BFS distance; nullopt when v is unreachable from u.
std::optional<int> distance(const SimpleGraph& g, int u, int v);

/// Graph diameter. unbounded is set iff the graph is disconnected (then
/// value is meaningless); a single vertex has diameter 0.
struct Diameter {
    bool unbounded = false;
    int value = 0;
};
Diameter diameter(const SimpleGraph& g);

/// Exact maximum clique by branch and bound with a greedy-coloring upper
/// bound. decided == false means the node budget ran out before the search
/// finished. Throws std::invalid_argument above kExactSearchVertexCap.
struct CliqueResult {
    bool decided = false;
    int size = 0;
    std::vector<int> witness;  // one maximum clique when decided
    std::uint64_t nodes = 0;
};
CliqueResult clique_number(const SimpleGraph& g,
                           std::uint64_t node_budget = kDefaultCliqueBudget);

enum class SearchOutcome { found, none, undecided };

/// Graph isomorphism by backtracking over color classes from iterated
/// degree refinement. A returned mapping is verified edge-by-edge first;
/// budget exhaustion reports undecided, never a false negative.
/// Throws std::invalid_argument above kExactSearchVertexCap.
struct IsoResult {
    SearchOutcome outcome = SearchOutcome::none;
    std::vector<int> mapping;  // g-vertex -> h-vertex when found
    std::uint64_t nodes = 0;
};
IsoResult graph_isomorphic(const SimpleGraph& g, const SimpleGraph& h,
                           std::uint64_t node_budget = kDefaultIsoBudget);

} // namespace ringtk

#endif
