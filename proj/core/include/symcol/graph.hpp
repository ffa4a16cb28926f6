#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace symcol {

using Vertex = int;
using EdgeId = std::size_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
    Vertex u{};
    Vertex v{};

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are numbered in lexicographic
/// (u, v) order; every module keys colourings and edge sets by that id.
class Graph {
public:
    Graph() = default;

    /// Throws InputError on self-loops, duplicates, or out-of-range ends.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    int order() const noexcept { return n_; }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    const std::vector<Vertex>& neighbours(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    bool adjacent(Vertex a, Vertex b) const {
        return a != b && edge_index_[index(a, b)] >= 0;
    }

    std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
        if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
        auto id = edge_index_[index(a, b)];
        if (id < 0) return std::nullopt;
        return static_cast<EdgeId>(id);
    }

    /// Edge ids incident to v, ascending.
    const std::vector<EdgeId>& incident_edges(Vertex v) const { return incident_[v]; }

    /// Subgraph induced on `vertices`, relabelled 0..k-1 in the given order.
    Graph induced(std::span<const Vertex> vertices) const;

    /// Vertex-disjoint union; `other` is shifted by order().
    Graph disjoint_union(const Graph& other) const;

    Graph complement() const;

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    std::size_t index(Vertex a, Vertex b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(b);
    }

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::vector<std::vector<EdgeId>> incident_;
    std::vector<std::int32_t> edge_index_;
};

/// Common degree if the graph is regular, nullopt otherwise. The empty
/// graph on zero vertices has no degree.
std::optional<int> regularity(const Graph& g);

bool is_connected(const Graph& g);

/// BFS distances from r; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, Vertex r);

bool is_complete(const Graph& g);

// Generators for the families used throughout the toolkit.

Graph complete(int n);
Graph complete_bipartite(int p, int q);
Graph cycle(int n);
Graph path(int n);
Graph petersen();
/// Vertices 0..n-1, edge i ~ i+s (mod n) for each step s in 1..n/2.
Graph circulant(int n, std::span<const int> steps);
Graph circulant(int n, std::initializer_list<int> steps);

struct RandomRegularOptions {
    std::uint64_t seed = 0;
    int max_retries = 1000;
};

/// Uniform pairing model with rejection of loops and multi-edges.
/// Throws InputError when n*d is odd or d >= n, BudgetExceeded when every
/// retry produced a non-simple pairing.
Graph random_regular(int n, int d, const RandomRegularOptions& options = {});

} // namespace symcol
