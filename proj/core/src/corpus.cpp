#include "symcol/corpus.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_map>

#include "symcol/aut_search.hpp"
#include "symcol/errors.hpp"

namespace symcol {

namespace {

// Isomorphism invariant: sorted rows of (degree sums, common-neighbour
// profile) plus closed-walk counts of length 3.
std::uint64_t invariant(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> a2(n, std::vector<int>(n, 0));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex w : g.neighbours(v))
            for (Vertex x : g.neighbours(w)) ++a2[v][x];
    std::vector<std::vector<int>> rows(n);
    for (Vertex v = 0; v < n; ++v) {
        int triangles = 0;
        for (Vertex w : g.neighbours(v)) triangles += a2[v][w];
        rows[v] = a2[v];
        std::sort(rows[v].begin(), rows[v].end());
        rows[v].push_back(triangles);
    }
    std::sort(rows.begin(), rows.end());
    std::uint64_t h = 1469598103934665603ull;
    for (const auto& row : rows)
        for (int x : row) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
    return h;
}

Graph start_graph(int n, int d) {
    std::vector<int> steps;
    for (int s = 1; s <= d / 2; ++s) steps.push_back(s);
    if (d % 2 == 1) steps.push_back(n / 2);
    return circulant(n, steps);
}

// Graphs reachable by one double-edge switch: ab, cd -> ac, bd.
std::vector<Graph> switches(const Graph& g) {
    std::vector<Graph> out;
    const auto& edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            const auto [a, b] = edges[i];
            const auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            for (int orient = 0; orient < 2; ++orient) {
                const Vertex x = orient == 0 ? c : d;
                const Vertex y = orient == 0 ? d : c;
                if (g.adjacent(a, x) || g.adjacent(b, y)) continue;
                std::vector<Edge> next;
                next.reserve(edges.size());
                for (std::size_t k = 0; k < edges.size(); ++k)
                    if (k != i && k != j) next.push_back(edges[k]);
                next.emplace_back(a, x);
                next.emplace_back(b, y);
                out.emplace_back(g.order(), next);
            }
        }
    return out;
}

} // namespace

std::vector<Graph> connected_regular_graphs(int n, int d) {
    if (n < 1 || d < 0) throw InputError("connected_regular_graphs needs n >= 1, d >= 0");
    if (n == 1 && d == 0) return {Graph(1, {})};
    if (d == 0) return {};
    if (d >= n) throw InputError("connected_regular_graphs needs d < n");
    if ((n * d) % 2 != 0) throw InputError("n*d must be even");

    // The switch graph on d-regular graphs of fixed order is connected, so a
    // search over isomorphism classes from any start reaches all of them.
    std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
    std::vector<Graph> classes;
    std::deque<std::size_t> queue;
    auto admit = [&](Graph g) {
        auto& bucket = buckets[invariant(g)];
        for (std::size_t idx : bucket)
            if (are_isomorphic(classes[idx], g)) return;
        bucket.push_back(classes.size());
        queue.push_back(classes.size());
        classes.push_back(std::move(g));
    };
    admit(start_graph(n, d));
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        for (auto& h : switches(classes[idx])) admit(std::move(h));
    }

    std::vector<Graph> out;
    for (auto& g : classes)
        if (is_connected(g)) out.push_back(std::move(g));
    return out;
}

std::vector<Graph> connected_regular_corpus(int min_n, int max_n) {
    std::vector<Graph> out;
    for (int n = std::max(min_n, 1); n <= max_n; ++n) {
        if (n == 1) out.emplace_back(1, std::initializer_list<Edge>{});
        for (int d = 1; d < n; ++d) {
            if ((n * d) % 2 != 0) continue;
            for (auto& g : connected_regular_graphs(n, d)) out.push_back(std::move(g));
        }
    }
    return out;
}

} // namespace symcol
