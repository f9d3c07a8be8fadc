#ifndef IDPOLY_VERTEX_SET_HPP
#define IDPOLY_VERTEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace idpoly {

inline constexpr std::size_t max_mask_order = 64;

/// Set of vertex labels below 64, stored as a bitmask. Iteration and
/// to_vector() yield labels in increasing order.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    VertexSet(std::initializer_list<Vertex> labels)
    {
        for (Vertex v : labels)
            insert(v);
    }

    static VertexSet from_labels(const std::vector<Vertex>& labels)
    {
        VertexSet s;
        for (Vertex v : labels)
            s.insert(v);
        return s;
    }

    /// {0, ..., n-1}
    static VertexSet prefix(std::size_t n)
    {
        if (n > max_mask_order)
            throw std::length_error("vertex set supports at most 64 labels");
        return VertexSet(n == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    void insert(Vertex v)
    {
        if (v >= max_mask_order)
            throw std::out_of_range("vertex " + std::to_string(v) + " exceeds the 64-label bitmask");
        bits_ |= std::uint64_t{1} << v;
    }

    constexpr bool contains(Vertex v) const noexcept { return v < 64 && ((bits_ >> v) & 1u); }
    constexpr std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    constexpr std::uint64_t bits() const noexcept { return bits_; }

    /// Largest label + 1, or 0 when empty.
    constexpr std::size_t span() const noexcept { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

    std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        for (auto b = bits_; b != 0; b &= b - 1)
            out.push_back(static_cast<Vertex>(std::countr_zero(b)));
        return out;
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

}  // namespace idpoly

#endif  // IDPOLY_VERTEX_SET_HPP
