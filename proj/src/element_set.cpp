#include "ringtk/element_set.hpp"

#include <bit>
#include <stdexcept>

namespace ringtk {

ElementSet ElementSet::intersect(const ElementSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("ElementSet::intersect: universe mismatch");
    ElementSet out(universe_);
    int count = 0;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        out.bits_[w] = bits_[w] & other.bits_[w];
        count += std::popcount(out.bits_[w]);
    }
    out.count_ = count;
    return out;
}

int ElementSet::intersect_size(const ElementSet& other) const {
    if (universe_ != other.universe_)
        throw std::invalid_argument("ElementSet::intersect_size: universe mismatch");
    int count = 0;
    for (std::size_t w = 0; w < bits_.size(); ++w)
        count += std::popcount(bits_[w] & other.bits_[w]);
    return count;
}

} // namespace ringtk
