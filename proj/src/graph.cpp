#include "ringtk/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "ringtk/kernels.hpp"

namespace ringtk {

SimpleGraph::SimpleGraph(int vertex_count, std::string name)
    : n_(vertex_count),
      words_((vertex_count + 63) / 64),
      name_(std::move(name)),
      labels_(vertex_count),
      origin_(vertex_count, -1),
      adj_(std::size_t(vertex_count) * ((vertex_count + 63) / 64), 0) {
    if (vertex_count < 0) throw std::invalid_argument("SimpleGraph: negative size");
    for (int v = 0; v < vertex_count; ++v) labels_[v] = std::to_string(v);
}

void SimpleGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("SimpleGraph: no self loops");
    adj_[std::size_t(u) * words_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    adj_[std::size_t(v) * words_ + (u >> 6)] |= std::uint64_t(1) << (u & 63);
}

void SimpleGraph::remove_edge(int u, int v) {
    adj_[std::size_t(u) * words_ + (v >> 6)] &= ~(std::uint64_t(1) << (v & 63));
    adj_[std::size_t(v) * words_ + (u >> 6)] &= ~(std::uint64_t(1) << (u & 63));
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(r[w]);
    return d;
}

std::vector<int> SimpleGraph::degree_sequence() const {
    std::vector<int> seq(n_);
    for (int v = 0; v < n_; ++v) seq[v] = degree(v);
    std::sort(seq.begin(), seq.end());
    return seq;
}

int SimpleGraph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

SimpleGraph r_noncommuting_graph(const FiniteRing& ring, int r) {
    const int n = ring.order();
    if (r < 0 || r >= n)
        throw std::invalid_argument("r_noncommuting_graph: r out of range");
    SimpleGraph g(n, ring.name() + " r=" + ring.element_name(r));
    for (int v = 0; v < n; ++v) {
        g.set_label(v, ring.element_name(v));
        g.set_origin(v, v);
    }
    if (n >= kernels::kParallelThreshold)
        kernels::graph_adjacency_parallel(ring, r, g);
    else
        kernels::graph_adjacency_serial(ring, r, g);
    return g;
}

SimpleGraph noncentral_subgraph(const FiniteRing& ring, int r) {
    const SimpleGraph full = r_noncommuting_graph(ring, r);
    const std::vector<int> vertices = [&] {
        std::vector<int> vs;
        for (int x = 0; x < ring.order(); ++x)
            if (!ring.is_central(x)) vs.push_back(x);
        return vs;
    }();
    SimpleGraph g(int(vertices.size()),
                  ring.name() + " r=" + ring.element_name(r) + " noncentral");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        g.set_label(int(i), ring.element_name(vertices[i]));
        g.set_origin(int(i), vertices[i]);
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (full.adjacent(vertices[i], vertices[j])) g.add_edge(int(i), int(j));
    }
    return g;
}

} // namespace ringtk
