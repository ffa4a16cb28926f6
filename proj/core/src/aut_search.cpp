#include "symcol/aut_search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "symcol/errors.hpp"

namespace symcol {

namespace {

bool in_range(const Graph& g, Vertex v) { return v >= 0 && v < g.order(); }

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

template <typename T, typename Fn>
std::vector<std::vector<T>> close_orbits(const std::vector<T>& domain, std::size_t universe,
                                         const std::vector<Permutation>& gens, Fn&& image) {
    std::vector<int> slot(universe, -1);
    for (std::size_t i = 0; i < domain.size(); ++i) slot[domain[i]] = static_cast<int>(i);

    std::vector<std::size_t> parent(domain.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (const auto& p : gens)
        for (std::size_t i = 0; i < domain.size(); ++i) {
            const auto target = image(p, domain[i]);
            if (!target || slot[*target] < 0)
                throw std::invalid_argument("generator does not preserve the orbit domain");
            const auto a = find(i);
            const auto b = find(static_cast<std::size_t>(slot[*target]));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }

    std::map<std::size_t, std::vector<T>> groups;
    for (std::size_t i = 0; i < domain.size(); ++i) groups[find(i)].push_back(domain[i]);
    std::vector<std::vector<T>> out;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Two copies of g side by side: joint vertex x < n is x on the source side,
// joint vertex n + y is y on the target side. A colour-respecting bijection
// from source to target cells is exactly an automorphism meeting the
// constraint's label requirements.
class Engine {
public:
    Engine(const Graph& g, const AutConstraint& c) : g_(g), c_(c), n_(g.order()) {
        build();
    }

    bool feasible() const { return feasible_; }
    int joint() const { return 2 * n_; }

    struct Colouring {
        std::vector<int> colour;
        int count = 0;
    };

    Colouring initial() const { return {base_colour_, base_count_}; }

    // Equitable refinement; false when some cell has unequal numbers of
    // source and target vertices.
    bool refine(Colouring& c) const {
        const int total = joint();
        std::vector<std::vector<long long>> sig(total);
        std::vector<int> order(total);
        while (true) {
            for (int w = 0; w < total; ++w) {
                auto& s = sig[w];
                s.clear();
                for (const auto& [nbr, label] : adj_[w])
                    s.push_back(static_cast<long long>(label) * total + c.colour[nbr]);
                std::sort(s.begin(), s.end());
            }
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                if (c.colour[a] != c.colour[b]) return c.colour[a] < c.colour[b];
                return sig[a] < sig[b];
            });
            std::vector<int> next(total);
            int count = 0;
            for (int i = 0; i < total; ++i) {
                if (i > 0 && (c.colour[order[i]] != c.colour[order[i - 1]] ||
                              sig[order[i]] != sig[order[i - 1]]))
                    ++count;
                next[order[i]] = count;
            }
            ++count;
            c.colour = std::move(next);
            if (!balanced(c, count)) return false;
            if (count == c.count) return true;
            c.count = count;
        }
    }

    static void individualise(Colouring& c, int source, int target_joint) {
        c.colour[source] = c.count;
        c.colour[target_joint] = c.count;
        ++c.count;
    }

    // Target-side vertices (as plain vertex ids) sharing x's colour.
    std::vector<Vertex> candidates(const Colouring& c, Vertex x) const {
        std::vector<Vertex> out;
        for (Vertex y = 0; y < n_; ++y)
            if (c.colour[n_ + y] == c.colour[x]) out.push_back(y);
        return out;
    }

    bool discrete(const Colouring& c) const { return c.count == joint() / 2 || n_ == 0; }

    std::optional<Permutation> search(Colouring c) const {
        if (!refine(c)) return std::nullopt;
        return descend(c);
    }

    // Same as search but assumes c is already refined.
    std::optional<Permutation> descend(const Colouring& c) const {
        if (c.count == n_) {
            std::vector<Vertex> images(n_);
            std::vector<Vertex> source_of(c.count, -1);
            for (Vertex x = 0; x < n_; ++x) source_of[c.colour[x]] = x;
            for (Vertex y = 0; y < n_; ++y) images[source_of[c.colour[n_ + y]]] = y;
            Permutation p(std::move(images));
            if (satisfies(g_, c_, p)) return p;
            return std::nullopt;
        }
        // smallest non-singleton cell, least colour on ties
        std::vector<int> size(c.count, 0);
        for (Vertex x = 0; x < n_; ++x) ++size[c.colour[x]];
        int best = -1;
        for (int k = 0; k < c.count; ++k)
            if (size[k] > 1 && (best < 0 || size[k] < size[best])) best = k;
        Vertex x = 0;
        while (c.colour[x] != best) ++x;
        for (Vertex y = 0; y < n_; ++y) {
            if (c.colour[n_ + y] != best) continue;
            Colouring branch = c;
            individualise(branch, x, n_ + y);
            if (auto found = search(std::move(branch))) return found;
        }
        return std::nullopt;
    }

private:
    bool balanced(const Colouring& c, int count) const {
        std::vector<int> diff(count, 0);
        for (Vertex x = 0; x < n_; ++x) ++diff[c.colour[x]];
        for (Vertex y = 0; y < n_; ++y) --diff[c.colour[n_ + y]];
        return std::all_of(diff.begin(), diff.end(), [](int d) { return d == 0; });
    }

    void build() {
        const int total = joint();
        std::vector<std::vector<int>> vlabel(total, std::vector<int>{-1});

        std::vector<Vertex> pin_of(n_, -1), pinned_from(n_, -1);
        auto pin = [&](Vertex a, Vertex b) {
            if (pin_of[a] >= 0 && pin_of[a] != b) feasible_ = false;
            if (pinned_from[b] >= 0 && pinned_from[b] != a) feasible_ = false;
            pin_of[a] = b;
            pinned_from[b] = a;
        };
        for (const auto& [a, b] : c_.pinned) pin(a, b);
        for (Vertex x : c_.pointwise_fixed) pin(x, x);
        for (Vertex a = 0; a < n_; ++a)
            if (pin_of[a] >= 0) {
                vlabel[a][0] = a;
                vlabel[n_ + pin_of[a]][0] = a;
            }

        for (std::size_t k = 0; k < c_.setwise_pairs.size(); ++k) {
            const auto& [from, to] = c_.setwise_pairs[k];
            for (Vertex x : sorted_unique(from)) vlabel[x].push_back(static_cast<int>(k));
            for (Vertex y : sorted_unique(to)) vlabel[n_ + y].push_back(static_cast<int>(k));
        }

        std::map<std::vector<int>, int> vintern;
        for (const auto& l : vlabel) vintern.emplace(l, 0);
        int id = 0;
        for (auto& [key, value] : vintern) value = id++;
        base_colour_.resize(total);
        for (int w = 0; w < total; ++w) base_colour_[w] = vintern.at(vlabel[w]);
        base_count_ = id;

        const std::size_t m = g_.size();
        std::vector<std::vector<int>> src(m), tgt(m);
        for (EdgeId e = 0; e < m; ++e) {
            int colour = 0;
            if (c_.colour_preserve) {
                if (auto col = c_.colour_preserve->at(e)) colour = 1 + static_cast<int>(*col);
            }
            src[e].push_back(colour);
            tgt[e].push_back(colour);
        }
        for (std::size_t k = 0; k < c_.edge_setwise_pairs.size(); ++k) {
            const auto& [from, to] = c_.edge_setwise_pairs[k];
            for (EdgeId e : from) src[e].push_back(static_cast<int>(k));
            for (EdgeId e : to) tgt[e].push_back(static_cast<int>(k));
        }
        std::map<std::vector<int>, int> eintern;
        for (EdgeId e = 0; e < m; ++e) {
            std::sort(src[e].begin() + 1, src[e].end());
            src[e].erase(std::unique(src[e].begin() + 1, src[e].end()), src[e].end());
            std::sort(tgt[e].begin() + 1, tgt[e].end());
            tgt[e].erase(std::unique(tgt[e].begin() + 1, tgt[e].end()), tgt[e].end());
            eintern.emplace(src[e], 0);
            eintern.emplace(tgt[e], 0);
        }
        id = 0;
        for (auto& [key, value] : eintern) value = id++;

        adj_.assign(total, {});
        for (EdgeId e = 0; e < m; ++e) {
            const auto [u, v] = g_.edge(e);
            const int ls = eintern.at(src[e]);
            const int lt = eintern.at(tgt[e]);
            adj_[u].emplace_back(v, ls);
            adj_[v].emplace_back(u, ls);
            adj_[n_ + u].emplace_back(n_ + v, lt);
            adj_[n_ + v].emplace_back(n_ + u, lt);
        }
    }

    const Graph& g_;
    const AutConstraint& c_;
    int n_;
    bool feasible_ = true;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<int> base_colour_;
    int base_count_ = 0;
};

} // namespace

void validate(const Graph& g, const AutConstraint& c) {
    auto bad = [](const std::string& what) { throw std::invalid_argument("AutConstraint: " + what); };
    std::vector<bool> image_used(g.order(), false);
    for (const auto& [a, b] : c.pinned) {
        if (!in_range(g, a) || !in_range(g, b)) bad("pinned vertex out of range");
        if (image_used[b]) bad("pinned images are not distinct");
        image_used[b] = true;
    }
    for (Vertex x : c.pointwise_fixed)
        if (!in_range(g, x)) bad("pointwise_fixed vertex out of range");
    for (const auto& [from, to] : c.setwise_pairs) {
        for (Vertex x : from)
            if (!in_range(g, x)) bad("setwise source out of range");
        for (Vertex x : to)
            if (!in_range(g, x)) bad("setwise target out of range");
        if (sorted_unique(from).size() != sorted_unique(to).size())
            bad("setwise pair with unequal cardinalities");
    }
    for (const auto& [from, to] : c.edge_setwise_pairs) {
        for (EdgeId e : from)
            if (e >= g.size()) bad("edge setwise source out of range");
        for (EdgeId e : to)
            if (e >= g.size()) bad("edge setwise target out of range");
        auto a = from, b = to;
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        if (a.size() != b.size()) bad("edge setwise pair with unequal cardinalities");
    }
    if (c.colour_preserve && c.colour_preserve->edge_count() != g.size())
        bad("colour_preserve sized for a different graph");
    if (c.nontrivial_on)
        for (Vertex x : *c.nontrivial_on)
            if (!in_range(g, x)) bad("nontrivial_on vertex out of range");
}

bool satisfies(const Graph& g, const AutConstraint& c, const Permutation& p) {
    if (!is_automorphism(g, p)) return false;
    for (const auto& [a, b] : c.pinned)
        if (p(a) != b) return false;
    for (Vertex x : c.pointwise_fixed)
        if (p(x) != x) return false;
    for (const auto& [from, to] : c.setwise_pairs) {
        const auto target = sorted_unique(to);
        std::vector<Vertex> image;
        for (Vertex x : sorted_unique(from)) image.push_back(p(x));
        if (sorted_unique(image) != target) return false;
    }
    for (const auto& [from, to] : c.edge_setwise_pairs) {
        std::vector<EdgeId> image, target(to);
        for (EdgeId e : from) image.push_back(*g.edge_id(p(g.edge(e).u), p(g.edge(e).v)));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        std::sort(target.begin(), target.end());
        target.erase(std::unique(target.begin(), target.end()), target.end());
        if (image != target) return false;
    }
    if (c.colour_preserve)
        for (EdgeId e = 0; e < g.size(); ++e) {
            const auto img = *g.edge_id(p(g.edge(e).u), p(g.edge(e).v));
            if (c.colour_preserve->at(e) != c.colour_preserve->at(img)) return false;
        }
    if (c.nontrivial_on) {
        bool moved = false;
        for (Vertex x : *c.nontrivial_on) moved = moved || p(x) != x;
        if (!moved) return false;
    }
    return true;
}

std::optional<Permutation> find_automorphism(const Graph& g, const AutConstraint& c) {
    validate(g, c);
    Engine engine(g, c);
    if (!engine.feasible()) return std::nullopt;
    auto colouring = engine.initial();
    if (!engine.refine(colouring)) return std::nullopt;
    if (!c.nontrivial_on) return engine.descend(colouring);

    // First moved element x of nontrivial_on: everything before x is fixed,
    // x goes to some y != x.
    for (Vertex x : sorted_unique(*c.nontrivial_on)) {
        for (Vertex y : engine.candidates(colouring, x)) {
            if (y == x) continue;
            auto branch = colouring;
            Engine::individualise(branch, x, g.order() + y);
            if (auto found = engine.search(std::move(branch))) return found;
        }
        if (engine.candidates(colouring, x).size() <= 1) continue;
        Engine::individualise(colouring, x, g.order() + x);
        if (!engine.refine(colouring)) return std::nullopt;
    }
    return std::nullopt;
}

std::uint64_t StabiliserChain::order() const {
    std::uint64_t total = 1;
    for (auto s : orbit_sizes) total *= s;
    return total;
}

StabiliserChain subgroup_chain(const Graph& g, const AutConstraint& subgroup) {
    validate(g, subgroup);
    if (!subgroup.pinned.empty() || subgroup.nontrivial_on)
        throw std::invalid_argument("subgroup_chain: pinned/nontrivial_on do not define a subgroup");
    for (const auto& [from, to] : subgroup.setwise_pairs)
        if (sorted_unique(from) != sorted_unique(to))
            throw std::invalid_argument("subgroup_chain: setwise pairs must map a set to itself");
    for (const auto& [from, to] : subgroup.edge_setwise_pairs) {
        auto a = from, b = to;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        if (a != b) throw std::invalid_argument("subgroup_chain: edge pairs must map a set to itself");
    }

    StabiliserChain chain;
    const auto fixed = sorted_unique(subgroup.pointwise_fixed);
    for (Vertex v = 0; v < g.order(); ++v)
        if (!std::binary_search(fixed.begin(), fixed.end(), v)) chain.base.push_back(v);
    chain.orbit_sizes.assign(chain.base.size(), 1);

    Engine engine(g, subgroup);
    // prefix[k]: refined colouring with base[0..k-1] individualised
    std::vector<Engine::Colouring> prefix;
    auto current = engine.initial();
    if (!engine.refine(current)) throw std::logic_error("subgroup_chain: identity rejected");
    for (std::size_t k = 0; k < chain.base.size(); ++k) {
        prefix.push_back(current);
        if (engine.discrete(current)) break;
        Engine::individualise(current, chain.base[k], g.order() + chain.base[k]);
        engine.refine(current);
    }

    for (std::size_t k = prefix.size(); k-- > 0;) {
        const Vertex point = chain.base[k];
        const auto candidates = engine.candidates(prefix[k], point);
        if (candidates.size() <= 1) continue;
        auto orbit_of = [&]() {
            return close_orbits<Vertex>(std::vector<Vertex>(candidates), g.order(), chain.generators,
                                        [&](const Permutation& p, Vertex v) -> std::optional<Vertex> {
                                            return p(v);
                                        });
        };
        // Candidates form a union of orbits of the current level group, so the
        // closure never leaves that set.
        auto orbit_size = [&]() -> std::size_t {
            for (const auto& o : orbit_of())
                if (std::binary_search(o.begin(), o.end(), point)) return o.size();
            return 1;
        };
        auto in_orbit = [&](Vertex y) {
            for (const auto& o : orbit_of())
                if (std::binary_search(o.begin(), o.end(), point))
                    return std::binary_search(o.begin(), o.end(), y);
            return false;
        };
        for (Vertex y : candidates) {
            if (y == point || in_orbit(y)) continue;
            auto branch = prefix[k];
            Engine::individualise(branch, point, g.order() + y);
            if (auto found = engine.search(std::move(branch))) chain.generators.push_back(*found);
        }
        chain.orbit_sizes[k] = orbit_size();
    }
    return chain;
}

std::vector<Permutation> stabiliser_generators(const Graph& g, Vertex r) {
    if (!in_range(g, r)) throw std::invalid_argument("stabiliser_generators: root out of range");
    AutConstraint c;
    c.pointwise_fixed = {r};
    return subgroup_chain(g, c).generators;
}

std::vector<VertexSet> vertex_orbits(const Graph& g, const std::vector<Permutation>& gens,
                                     const VertexSet& domain) {
    return close_orbits<Vertex>(sorted_unique(domain), g.order(), gens,
                                [](const Permutation& p, Vertex v) -> std::optional<Vertex> { return p(v); });
}

std::vector<EdgeSet> edge_orbits(const Graph& g, const std::vector<Permutation>& gens, const EdgeSet& domain) {
    auto d = domain;
    std::sort(d.begin(), d.end());
    d.erase(std::unique(d.begin(), d.end()), d.end());
    return close_orbits<EdgeId>(d, g.size(), gens, [&](const Permutation& p, EdgeId e) {
        const auto& edge = g.edge(e);
        return g.edge_id(p(edge.u), p(edge.v));
    });
}

std::uint64_t group_order(const Graph& g, int max_order) {
    if (g.order() > max_order)
        throw InputError("group_order: order " + std::to_string(g.order()) + " exceeds guard " +
                         std::to_string(max_order));
    return subgroup_chain(g, AutConstraint{}).order();
}

std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
    const int n = a.order();
    const Graph both = a.disjoint_union(b);
    AutConstraint c;
    VertexSet left(n), right(n);
    std::iota(left.begin(), left.end(), 0);
    std::iota(right.begin(), right.end(), n);
    c.setwise_pairs.emplace_back(left, right);
    auto swap = find_automorphism(both, c);
    if (!swap) return std::nullopt;
    std::vector<Vertex> images(n);
    for (Vertex x = 0; x < n; ++x) images[x] = (*swap)(x)-n;
    return Permutation(std::move(images));
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

} // namespace symcol
