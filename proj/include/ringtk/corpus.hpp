#ifndef RINGTK_CORPUS_HPP
#define RINGTK_CORPUS_HPP

#include <memory>
#include <string>
#include <vector>

#include "ringtk/finite_ring.hpp"

namespace ringtk {

/// Named collection of validated rings. Rings never move once registered,
/// so references stay stable for the lifetime of the registry.
class RingRegistry {
public:
    /// Throws std::invalid_argument on duplicate names.
    const FiniteRing& add(FiniteRing ring);
    const FiniteRing& add_from_file(const std::string& path);

    const FiniteRing* find(const std::string& name) const;
    /// Throws std::out_of_range when absent.
    const FiniteRing& get(const std::string& name) const;

    std::vector<const FiniteRing*> rings() const;  // registration order
    std::size_t size() const { return rings_.size(); }

private:
    std::vector<std::unique_ptr<FiniteRing>> rings_;
};

/// The built-in corpus: Z1..Z9, E4, F4, E9, F9, UT2_Z2, UT2_Z3, M2_Z2,
/// Z2xE4, E4xF4, Z4xE4.
RingRegistry default_corpus();

/// Ring named by an element expression context; parses "a+2b", "2*a + b",
/// a bare element name, or a numeric index against the ring's names.
/// Throws std::invalid_argument when the expression does not resolve.
int parse_element(const FiniteRing& ring, const std::string& expr);

} // namespace ringtk

#endif
