#include "symcol/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "symcol/errors.hpp"
#include "rng.hpp"

namespace symcol {

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
    if (n < 0) throw InputError("negative vertex count");
    edges_.assign(edges.begin(), edges.end());
    for (const auto& e : edges_) {
        if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n)
            throw InputError("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             "} out of range for n=" + std::to_string(n));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw InputError("duplicate edge");

    adj_.assign(n, {});
    incident_.assign(n, {});
    edge_index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
    for (EdgeId id = 0; id < edges_.size(); ++id) {
        const auto [u, v] = edges_[id];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        incident_[u].push_back(id);
        incident_[v].push_back(id);
        edge_index_[index(u, v)] = static_cast<std::int32_t>(id);
        edge_index_[index(v, u)] = static_cast<std::int32_t>(id);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
    std::vector<int> relabel(n_, -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) relabel[vertices[i]] = static_cast<int>(i);
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (relabel[e.u] >= 0 && relabel[e.v] >= 0) out.emplace_back(relabel[e.u], relabel[e.v]);
    return Graph(static_cast<int>(vertices.size()), out);
}

Graph Graph::disjoint_union(const Graph& other) const {
    std::vector<Edge> out = edges_;
    for (const auto& e : other.edges_) out.emplace_back(e.u + n_, e.v + n_);
    return Graph(n_ + other.n_, out);
}

Graph Graph::complement() const {
    std::vector<Edge> out;
    for (Vertex a = 0; a < n_; ++a)
        for (Vertex b = a + 1; b < n_; ++b)
            if (!adjacent(a, b)) out.emplace_back(a, b);
    return Graph(n_, out);
}

std::optional<int> regularity(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    const int d = g.degree(0);
    for (Vertex v = 1; v < g.order(); ++v)
        if (g.degree(v) != d) return std::nullopt;
    return d;
}

std::vector<int> distances_from(const Graph& g, Vertex r) {
    if (r < 0 || r >= g.order()) throw InputError("root out of range");
    std::vector<int> dist(g.order(), -1);
    std::deque<Vertex> queue{r};
    dist[r] = 0;
    while (!queue.empty()) {
        const Vertex v = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbours(v)) {
            if (dist[w] >= 0) continue;
            dist[w] = dist[v] + 1;
            queue.push_back(w);
        }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_complete(const Graph& g) {
    const auto n = static_cast<std::size_t>(g.order());
    return g.size() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph complete(int n) {
    if (n < 1) throw InputError("complete graph needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
    return Graph(n, edges);
}

Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw InputError("complete bipartite graph needs p, q >= 1");
    std::vector<Edge> edges;
    for (Vertex a = 0; a < p; ++a)
        for (Vertex b = 0; b < q; ++b) edges.emplace_back(a, p + b);
    return Graph(p + q, edges);
}

Graph cycle(int n) {
    if (n < 3) throw InputError("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph path(int n) {
    if (n < 1) throw InputError("path needs n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph petersen() {
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return Graph(10, edges);
}

Graph circulant(int n, std::span<const int> steps) {
    if (n < 1) throw InputError("circulant needs n >= 1");
    std::vector<int> normalised;
    for (int s : steps) {
        if (s < 1 || s > n / 2)
            throw InputError("circulant step " + std::to_string(s) + " outside 1..n/2");
        normalised.push_back(s);
    }
    std::sort(normalised.begin(), normalised.end());
    normalised.erase(std::unique(normalised.begin(), normalised.end()), normalised.end());
    std::vector<Edge> edges;
    for (int s : normalised)
        for (Vertex v = 0; v < n; ++v) {
            // the diameter step 2s == n contributes each chord once
            if (2 * s == n && v >= s) continue;
            edges.emplace_back(v, (v + s) % n);
        }
    return Graph(n, edges);
}

Graph circulant(int n, std::initializer_list<int> steps) {
    return circulant(n, std::span<const int>(steps.begin(), steps.size()));
}

Graph random_regular(int n, int d, const RandomRegularOptions& options) {
    if (n < 1 || d < 0) throw InputError("random_regular needs n >= 1, d >= 0");
    if (d >= n) throw InputError("random_regular needs d < n");
    if ((static_cast<long long>(n) * d) % 2 != 0) throw InputError("n*d must be even");

    detail::SplitMix rng(options.seed);
    std::vector<Vertex> points(static_cast<std::size_t>(n) * d);
    for (int attempt = 0; attempt < options.max_retries; ++attempt) {
        for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Vertex>(i / d);
        for (std::size_t i = points.size(); i > 1; --i)
            std::swap(points[i - 1], points[rng.below(i)]);

        std::vector<Edge> edges;
        edges.reserve(points.size() / 2);
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            if (points[i] == points[i + 1]) simple = false;
            else edges.emplace_back(points[i], points[i + 1]);
        }
        if (!simple) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return Graph(n, edges);
    }
    throw BudgetExceeded("random_regular: no simple pairing after " +
                         std::to_string(options.max_retries) + " retries");
}

} // namespace symcol
