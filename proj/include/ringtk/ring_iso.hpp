#ifndef RINGTK_RING_ISO_HPP
#define RINGTK_RING_ISO_HPP

#include <optional>
#include <vector>

#include "ringtk/finite_ring.hpp"

namespace ringtk {

/// Ring isomorphism by exhaustive bijection search fixing 0, pruned by
/// per-element invariants (additive order, centralizer size, idempotency,
/// centrality). Cheap invariant mismatches answer immediately at any order;
/// a full search runs only up to order 16 and is thrown as
/// std::invalid_argument beyond that rather than guessing.
/// Returns the element bijection when one exists.
std::optional<std::vector<int>> ring_isomorphic(const FiniteRing& r1,
                                                const FiniteRing& r2);

} // namespace ringtk

#endif
