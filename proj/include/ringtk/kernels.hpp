#ifndef RINGTK_KERNELS_HPP
#define RINGTK_KERNELS_HPP

#include <cstdint>
#include <vector>

#include "ringtk/finite_ring.hpp"

namespace ringtk {
class SimpleGraph;
}

// Hot inner loops, each in a serial reference version and an OpenMP version.
// Both versions of a kernel produce identical output (witness reductions are
// order-independent), so the public entry points can dispatch on problem
// size and the test suite can compare the two directly.
namespace ringtk::kernels {

/// Problem size at and above which the dispatching wrappers use OpenMP.
inline constexpr int kParallelThreshold = 32;

ValidationReport validate_tables_serial(const CayleyTable& add, const CayleyTable& mul);
ValidationReport validate_tables_parallel(const CayleyTable& add, const CayleyTable& mul);

/// Adjacency of the r-noncommuting graph: x ~ y iff x != y and
/// [x,y] differs from both r and -r. Writes a full symmetric matrix.
void graph_adjacency_serial(const FiniteRing& ring, int r, SimpleGraph& out);
void graph_adjacency_parallel(const FiniteRing& ring, int r, SimpleGraph& out);

/// Membership mask of K(R) over all n^2 commutators.
std::vector<bool> commutator_set_serial(const FiniteRing& ring);
std::vector<bool> commutator_set_parallel(const FiniteRing& ring);

/// All-pairs BFS distances, flattened row-major; -1 marks unreachable.
std::vector<int> all_pairs_distances_serial(const SimpleGraph& g);
std::vector<int> all_pairs_distances_parallel(const SimpleGraph& g);

} // namespace ringtk::kernels

#endif
