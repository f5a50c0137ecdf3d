#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace mgt {

/// Subset of {0,...,63} backed by a single machine word.
/// All set algebra is exact; iteration yields members in ascending order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t raw) : bits(raw) {}

    static constexpr VertexSet universe(int n) {
        return VertexSet(n >= 64 ? ~0ULL : (1ULL << n) - 1);
    }
    static constexpr VertexSet singleton(int v) { return VertexSet(1ULL << v); }
    /// {a,b}; collapses to a singleton when a == b.
    static constexpr VertexSet pair(int a, int b) {
        return VertexSet((1ULL << a) | (1ULL << b));
    }
    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    constexpr bool contains(int v) const { return (bits >> v) & 1ULL; }
    constexpr void add(int v) { bits |= 1ULL << v; }
    constexpr void remove(int v) { bits &= ~(1ULL << v); }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }
    /// Proper subset.
    constexpr bool strict_subset_of(VertexSet o) const {
        return subset_of(o) && bits != o.bits;
    }
    /// Smallest member; undefined on the empty set.
    constexpr int first() const { return std::countr_zero(bits); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits & b.bits); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits | b.bits); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits & ~b.bits); }
    constexpr bool operator==(const VertexSet&) const = default;

    class iterator {
    public:
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr bool operator!=(const iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    constexpr iterator begin() const { return iterator(bits); }
    constexpr iterator end() const { return iterator(0); }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int v : *this) out.push_back(v);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool sep = false;
        for (int v : *this) {
            if (sep) s += ',';
            s += std::to_string(v);
            sep = true;
        }
        return s + "}";
    }

    std::uint64_t bits = 0;
};

} // namespace mgt
