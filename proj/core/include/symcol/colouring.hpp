#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "symcol/graph.hpp"

namespace symcol {

enum class Colour : std::uint8_t { Red = 0, Green = 1, Blue = 2 };

inline constexpr int kColourCount = 3;

std::string_view colour_name(Colour c);
/// Accepts "red", "green", "blue"; throws InputError otherwise.
Colour parse_colour(std::string_view name);

/// Partial assignment of colours to the edges of one graph, indexed by
/// EdgeId. Unassigned slots model uncoloured edges.
class EdgeColouring {
public:
    EdgeColouring() = default;
    explicit EdgeColouring(std::size_t edge_count) : slots_(edge_count) {}
    EdgeColouring(std::size_t edge_count, Colour fill) : slots_(edge_count, fill) {}

    std::size_t edge_count() const noexcept { return slots_.size(); }

    std::optional<Colour> at(EdgeId e) const { return slots_.at(e); }
    bool is_coloured(EdgeId e) const { return slots_.at(e).has_value(); }
    void set(EdgeId e, Colour c) { slots_.at(e) = c; }
    void clear(EdgeId e) { slots_.at(e).reset(); }

    bool is_total() const;
    /// Number of distinct colours appearing.
    int colours_used() const;

    /// Copy keeping only the listed edges coloured.
    EdgeColouring restricted_to(const std::vector<EdgeId>& keep) const;

    friend bool operator==(const EdgeColouring&, const EdgeColouring&) = default;

private:
    std::vector<std::optional<Colour>> slots_;
};

/// Vertices all of whose incident edges are Blue (isolated vertices are
/// excluded since they have no incident edges to colour).
std::vector<Vertex> all_blue_vertices(const Graph& g, const EdgeColouring& c);

/// At most one all-Blue vertex, and none when g is complete.
bool satisfies_star(const Graph& g, const EdgeColouring& c);

} // namespace symcol
