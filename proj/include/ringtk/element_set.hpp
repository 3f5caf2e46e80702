#ifndef RINGTK_ELEMENT_SET_HPP
#define RINGTK_ELEMENT_SET_HPP

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ringtk {

/// A subset of the element indices [0, n) of a finite ring, stored as a
/// bitset. Used for centers, centralizers, commutator sets, subrings.
class ElementSet {
public:
    ElementSet() = default;
    explicit ElementSet(int universe)
        : universe_(universe), bits_((universe + 63) / 64, 0) {}

    static ElementSet of(int universe, std::initializer_list<int> xs) {
        ElementSet s(universe);
        for (int x : xs) s.insert(x);
        return s;
    }
    static ElementSet full(int universe) {
        ElementSet s(universe);
        for (int x = 0; x < universe; ++x) s.insert(x);
        return s;
    }

    int universe() const { return universe_; }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    bool contains(int x) const {
        return (bits_[x >> 6] >> (x & 63)) & 1u;
    }
    void insert(int x) {
        std::uint64_t& w = bits_[x >> 6];
        std::uint64_t m = std::uint64_t(1) << (x & 63);
        if (!(w & m)) { w |= m; ++count_; }
    }
    void erase(int x) {
        std::uint64_t& w = bits_[x >> 6];
        std::uint64_t m = std::uint64_t(1) << (x & 63);
        if (w & m) { w &= ~m; --count_; }
    }

    /// Ascending list of members.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int x = 0; x < universe_; ++x)
            if (contains(x)) out.push_back(x);
        return out;
    }

    ElementSet intersect(const ElementSet& other) const;
    int intersect_size(const ElementSet& other) const;

    bool operator==(const ElementSet& other) const = default;

private:
    int universe_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> bits_;
};

} // namespace ringtk

#endif
