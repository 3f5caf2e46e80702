#ifndef RINGTK_GRAPH_EXPORT_HPP
#define RINGTK_GRAPH_EXPORT_HPP

#include <string>

#include "ringtk/graph.hpp"

namespace ringtk {

/// Graphviz DOT text: vertices in index order, edges (i < j) in
/// lexicographic order. Byte-deterministic for a given graph.
std::string export_dot(const SimpleGraph& g);

/// JSON text: {"name": ..., "vertices": [{"id", "label"}...],
/// "edges": [[i, j]...]} with i < j, lexicographic. Deterministic.
std::string export_json(const SimpleGraph& g);

/// Inverse of export_json. Throws std::invalid_argument on malformed input.
SimpleGraph import_json(const std::string& text);

} // namespace ringtk

#endif
