#ifndef RINGTK_GRAPH_HPP
#define RINGTK_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ringtk/finite_ring.hpp"

namespace ringtk {

/// Labeled simple undirected graph; adjacency kept as bitset rows.
/// Kept symmetric with a false diagonal by every mutation path.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count, std::string name = {});

    int vertex_count() const { return n_; }
    const std::string& name() const { return name_; }
    void set_name(std::string s) { name_ = std::move(s); }

    const std::string& label(int v) const { return labels_[v]; }
    void set_label(int v, std::string s) { labels_[v] = std::move(s); }
    /// Ring element index a vertex originated from (-1 if not ring-derived).
    int origin(int v) const { return origin_[v]; }
    void set_origin(int v, int elem) { origin_[v] = elem; }

    bool adjacent(int u, int v) const {
        return (adj_[std::size_t(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
    }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    int degree(int v) const;
    std::vector<int> degree_sequence() const;  // ascending
    int edge_count() const;
    /// Edges as (i, j) with i < j, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;

    const std::uint64_t* row(int v) const { return adj_.data() + std::size_t(v) * words_; }
    int words_per_row() const { return words_; }

    /// Raw row access for bulk builders; the caller keeps the matrix
    /// symmetric and the diagonal false.
    std::uint64_t* mutable_row(int v) { return adj_.data() + std::size_t(v) * words_; }

    bool same_adjacency(const SimpleGraph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }

private:
    int n_ = 0;
    int words_ = 0;
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<int> origin_;
    std::vector<std::uint64_t> adj_;
};

/// r-noncommuting graph on all of R: x ~ y iff x != y and [x,y] is neither
/// r nor -r. Vertices in element-index order.
SimpleGraph r_noncommuting_graph(const FiniteRing& ring, int r);

/// Induced subgraph of the r-noncommuting graph on the noncentral elements.
SimpleGraph noncentral_subgraph(const FiniteRing& ring, int r);

} // namespace ringtk

#endif
