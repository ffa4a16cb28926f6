#include "symcol/layered.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

#include "symcol/errors.hpp"

namespace symcol {

namespace {

bool contains(const EdgeSet& sorted, EdgeId e) { return std::binary_search(sorted.begin(), sorted.end(), e); }

EdgeSet sorted(EdgeSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::string describe(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }

// Layer of the endpoint of e that is not in layer i (or i for horizontal).
int other_layer(const Graph& g, const OrbitLayering& L, EdgeId e, int i) {
    const auto& edge = g.edge(e);
    const int a = L.layer_of[edge.u];
    const int b = L.layer_of[edge.v];
    return a == i ? b : a;
}

// Edges of g restricted to the horizontal edges of layer i.
EdgeColouring horizontal_restriction(const Graph& g, const OrbitLayering& L, const EdgeColouring& c, int i) {
    EdgeSet horizontal;
    for (EdgeId e : L.incident[i])
        if (L.layer_of[g.edge(e).u] == i && L.layer_of[g.edge(e).v] == i) horizontal.push_back(e);
    return c.restricted_to(horizontal);
}

std::vector<Vertex> cyclic_order(const Graph& g) {
    std::vector<Vertex> order{0};
    Vertex prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < g.order()) {
        const auto& nb = g.neighbours(cur);
        const Vertex next = nb[0] != prev ? nb[0] : nb[1];
        prev = cur;
        cur = next;
        order.push_back(cur);
    }
    return order;
}

void verify_final(const Graph& g, const EdgeColouring& c, const std::string& method) {
    if (!c.is_total()) throw VerificationFailure(method + ": colouring is partial");
    if (c.colours_used() > kColourCount) throw VerificationFailure(method + ": too many colours");
    if (!satisfies_star(g, c)) throw VerificationFailure(method + ": star property fails");
    if (!is_distinguishing(g, c)) throw VerificationFailure(method + ": colouring is not distinguishing");
}

bool final_ok(const Graph& g, const EdgeColouring& c) {
    return c.is_total() && satisfies_star(g, c) && is_distinguishing(g, c);
}

} // namespace

VertexSet OrbitLayering::before(int i) const {
    VertexSet out;
    for (int j = 0; j < i; ++j) out.insert(out.end(), layers[j].begin(), layers[j].end());
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view rule_name(HorizontalRule r) {
    switch (r) {
    case HorizontalRule::H0: return "H0";
    case HorizontalRule::H1: return "H1";
    case HorizontalRule::H2Plus: return "H2plus";
    }
    return "?";
}

ColourStats& ColourStats::operator+=(const ColourStats& o) {
    layered_runs += o.layered_runs;
    layers += o.layers;
    fallback_layers += o.fallback_layers;
    global_fallbacks += o.global_fallbacks;
    steps_checked += o.steps_checked;
    violations += o.violations;
    claim_checks += o.claim_checks;
    claim_failures += o.claim_failures;
    return *this;
}

OrbitLayering build_layering(const Graph& g, Vertex r) {
    if (r < 0 || r >= g.order()) throw InputError("build_layering: root out of range");
    if (!is_connected(g)) throw InputError("build_layering: graph is disconnected");

    OrbitLayering L;
    L.root = r;
    const auto dist = distances_from(g, r);
    VertexSet all(g.order());
    std::iota(all.begin(), all.end(), 0);
    auto orbits = vertex_orbits(g, stabiliser_generators(g, r), all);
    for (const auto& orbit : orbits)
        for (Vertex v : orbit)
            if (dist[v] != dist[orbit.front()]) throw std::logic_error("build_layering: orbit mixes distances");
    std::sort(orbits.begin(), orbits.end(), [&](const VertexSet& a, const VertexSet& b) {
        if (dist[a.front()] != dist[b.front()]) return dist[a.front()] < dist[b.front()];
        return a.front() < b.front();
    });
    L.layers = std::move(orbits);
    const int count = L.size();
    L.layer_of.assign(g.order(), -1);
    for (int i = 0; i < count; ++i) {
        L.distance.push_back(dist[L.layers[i].front()]);
        for (Vertex v : L.layers[i]) L.layer_of[v] = i;
    }

    L.incident.assign(count, {});
    std::vector<int> touches(count);
    for (int i = 0; i < count; ++i) {
        touches[i] = i;
        EdgeSet e;
        for (Vertex v : L.layers[i])
            for (EdgeId id : g.incident_edges(v)) {
                e.push_back(id);
                touches[i] = std::max(touches[i], other_layer(g, L, id, i));
            }
        L.incident[i] = sorted(std::move(e));
    }
    int running = 0;
    for (int i = 0; i < count; ++i) {
        running = std::max(running, touches[i]);
        L.reach.push_back(running);
        EdgeSet closed;
        for (EdgeId id = 0; id < g.size(); ++id)
            if (L.layer_of[g.edge(id).u] <= running && L.layer_of[g.edge(id).v] <= running) closed.push_back(id);
        L.closed.push_back(std::move(closed));
    }

    for (int i = 0; i < count; ++i) {
        if (i + 1 < count && L.reach[i] < i + 1) throw std::logic_error("build_layering: reach below i+1");
        for (EdgeId e : L.incident[i])
            if (!contains(L.closed[i], e)) throw std::logic_error("build_layering: incident edge not closed");
        if (i > 0)
            for (EdgeId e : L.closed[i - 1])
                if (!contains(L.closed[i], e)) throw std::logic_error("build_layering: closed sets not nested");
    }
    return L;
}

LayerEdgeClasses classify_layer(const Graph& g, const OrbitLayering& L, int i) {
    if (i < 0 || i >= L.size()) throw std::out_of_range("classify_layer: layer index");
    LayerEdgeClasses out;
    for (EdgeId e : L.incident[i]) {
        const int j = other_layer(g, L, e, i);
        if (j < i) out.back.push_back(e);
        else if (j > i) out.forward.push_back(e);
        else out.horizontal.push_back(e);
    }
    bool first = true;
    for (Vertex v : L.layers[i]) {
        int f = 0, b = 0, h = 0;
        for (EdgeId e : g.incident_edges(v)) {
            const int j = other_layer(g, L, e, i);
            (j < i ? b : j > i ? f : h) += 1;
        }
        if (first) {
            out.f = f;
            out.b = b;
            out.h = h;
            first = false;
        } else if (f != out.f || b != out.b || h != out.h) {
            throw std::logic_error("classify_layer: non-uniform edge counts in layer " + std::to_string(i));
        }
    }
    if (i > 0 && out.b == 0) throw std::logic_error("classify_layer: layer without back edges");
    return out;
}

std::vector<Component> horizontal_components(const Graph& g, const OrbitLayering& L, int i) {
    std::vector<Component> out;
    std::set<Vertex> seen;
    for (Vertex start : L.layers[i]) {
        if (seen.count(start)) continue;
        Component k;
        std::vector<Vertex> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            k.vertices.push_back(v);
            for (EdgeId e : g.incident_edges(v)) {
                const auto& edge = g.edge(e);
                const Vertex w = edge.u == v ? edge.v : edge.u;
                if (L.layer_of[w] != i) continue;
                k.edges.push_back(e);
                if (seen.insert(w).second) stack.push_back(w);
            }
        }
        std::sort(k.vertices.begin(), k.vertices.end());
        k.edges = sorted(std::move(k.edges));
        out.push_back(std::move(k));
    }
    return out;
}

StepState initial_colouring(const Graph& g, const OrbitLayering& L) {
    StepState s;
    s.layer = 0;
    s.colouring = EdgeColouring(g.size(), Colour::Green);
    for (EdgeId e : g.incident_edges(L.root)) s.colouring.set(e, Colour::Blue);
    StepRecord record;
    record.layer = 0;
    s.audit.push_back(record);
    return s;
}

HorizontalRule colour_horizontal(const Graph& g, const OrbitLayering& L, StepState& state, int i,
                                 const ColourOptions& options, ColourStats& stats) {
    const auto classes = classify_layer(g, L, i);
    if (classes.h == 0) return HorizontalRule::H0;

    if (classes.h == 1) {
        AutConstraint fixed;
        fixed.pointwise_fixed = L.before(i);
        const auto gens = subgroup_chain(g, fixed).generators;
        for (const auto& orbit : edge_orbits(g, gens, classes.horizontal)) {
            if (orbit.size() == 1) {
                state.colouring.set(orbit.front(), Colour::Green);
                continue;
            }
            for (std::size_t k = 0; k < orbit.size(); ++k)
                state.colouring.set(orbit[k], static_cast<Colour>(k % kColourCount));
        }
        return HorizontalRule::H1;
    }

    for (const auto& k : horizontal_components(g, L, i)) {
        const Graph sub = g.induced(k.vertices);
        ColourOptions nested = options;
        nested.root.reset();
        ColourResult result;
        try {
            result = colour_regular(sub, nested);
        } catch (const std::exception& e) {
            throw VerificationFailure("layer " + std::to_string(i) + ", component at vertex " +
                                      std::to_string(k.vertices.front()) + ": " + e.what());
        }
        stats += result.stats;
        for (EdgeId local = 0; local < sub.size(); ++local) {
            const auto& edge = sub.edge(local);
            const EdgeId global = *g.edge_id(k.vertices[edge.u], k.vertices[edge.v]);
            state.colouring.set(global, *result.colouring.at(local));
        }
    }
    return HorizontalRule::H2Plus;
}

AutConstraint persistent_constraint(const Graph& g, const OrbitLayering& L, const StepState& state, int i) {
    AutConstraint c;
    c.pointwise_fixed = L.before(i);
    c.colour_preserve = horizontal_restriction(g, L, state.colouring, i);
    return c;
}

std::optional<Permutation> persistent_exists(const Graph& g, const OrbitLayering& L, const StepState& state,
                                             int i, const AutConstraint& extra) {
    if (extra.colour_preserve) throw std::invalid_argument("persistent_exists: extra colour_preserve given");
    AutConstraint c = persistent_constraint(g, L, state, i);
    c.pointwise_fixed.insert(c.pointwise_fixed.end(), extra.pointwise_fixed.begin(), extra.pointwise_fixed.end());
    c.pinned = extra.pinned;
    c.setwise_pairs = extra.setwise_pairs;
    c.edge_setwise_pairs = extra.edge_setwise_pairs;
    c.nontrivial_on = extra.nontrivial_on;
    return find_automorphism(g, c);
}

std::vector<Decoration> enumerate_decorations(const Graph& g, const OrbitLayering& L, const StepState& state,
                                              int i, const Component& k) {
    const auto classes = classify_layer(g, L, i);
    VertexSet eligible;
    if (classes.h == 0 || classes.h == 1) {
        eligible.push_back(k.vertices.front());
    } else {
        for (Vertex v : k.vertices)
            for (EdgeId e : g.incident_edges(v))
                if (contains(k.edges, e) && state.colouring.at(e) != Colour::Blue) {
                    eligible.push_back(v);
                    break;
                }
    }

    EdgeSet forward_star, back_candidates;
    for (Vertex v : eligible)
        for (EdgeId e : g.incident_edges(v)) {
            const int j = other_layer(g, L, e, i);
            if (j > i) forward_star.push_back(e);
            else if (j < i && state.colouring.at(e) != Colour::Blue) back_candidates.push_back(e);
        }
    forward_star = sorted(std::move(forward_star));
    back_candidates = sorted(std::move(back_candidates));

    // keep back edges no persistent automorphism maps onto one another
    EdgeSet back_star;
    for (EdgeId e : back_candidates) {
        bool movable = false;
        for (EdgeId kept : back_star) {
            AutConstraint move;
            move.edge_setwise_pairs.push_back({{e}, {kept}});
            if (persistent_exists(g, L, state, i, move)) {
                movable = true;
                break;
            }
        }
        if (!movable) back_star.push_back(e);
    }

    std::vector<EdgeSet> back_options{{}};
    for (EdgeId e : back_star)
        if (state.colouring.at(e) == Colour::Red) back_options.push_back({e});
    for (std::size_t a = 0; a < back_star.size(); ++a)
        for (std::size_t b = a + 1; b < back_star.size(); ++b)
            if (state.colouring.at(back_star[a]) == Colour::Green &&
                state.colouring.at(back_star[b]) == Colour::Green)
                back_options.push_back({back_star[a], back_star[b]});

    std::vector<Decoration> out;
    for (std::size_t size = 0; size <= forward_star.size(); ++size) {
        EdgeSet f(forward_star.begin(), forward_star.begin() + static_cast<std::ptrdiff_t>(size));
        for (const auto& b : back_options) out.push_back({f, b});
    }
    return out;
}

bool decoration_is_asymmetric(const Graph& g, const OrbitLayering& L, const StepState& state, int i,
                              const Component& k, const Decoration& d) {
    AutConstraint c;
    c.setwise_pairs.emplace_back(k.vertices, k.vertices);
    c.edge_setwise_pairs.emplace_back(d.forward, d.forward);
    c.edge_setwise_pairs.emplace_back(d.back, d.back);
    c.nontrivial_on = k.vertices;
    return !persistent_exists(g, L, state, i, c).has_value();
}

bool decorations_similar(const Graph& g, const OrbitLayering& L, const StepState& state, int i,
                         const Component& k, const Decoration& d, const Component& k2, const Decoration& d2) {
    if (k.vertices.size() != k2.vertices.size() || d.forward.size() != d2.forward.size() ||
        d.back.size() != d2.back.size())
        return false;
    AutConstraint c;
    c.setwise_pairs.emplace_back(k.vertices, k2.vertices);
    c.edge_setwise_pairs.emplace_back(d.forward, d2.forward);
    c.edge_setwise_pairs.emplace_back(d.back, d2.back);
    return persistent_exists(g, L, state, i, c).has_value();
}

void assign_decorations(const Graph& g, const OrbitLayering& L, StepState& state, int i, StepRecord& record) {
    const auto components = horizontal_components(g, L, i);
    const auto chain = subgroup_chain(g, persistent_constraint(g, L, state, i));
    const auto orbits = vertex_orbits(g, chain.generators, L.layers[i]);

    std::map<Vertex, std::size_t> component_of;
    for (std::size_t c = 0; c < components.size(); ++c)
        for (Vertex v : components[c].vertices) component_of[v] = c;
    // persistent automorphisms permute components, so vertex orbits glue
    // components into component orbits
    std::vector<std::size_t> parent(components.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& orbit : orbits)
        for (Vertex v : orbit) {
            const auto a = find(component_of.at(orbit.front()));
            const auto b = find(component_of.at(v));
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t c = 0; c < components.size(); ++c) groups[find(c)].push_back(c);

    std::vector<Decoration> chosen(components.size());
    for (const auto& [root, members] : groups) {
        const int reachable = static_cast<int>(members.size());
        std::vector<std::size_t> done;
        for (std::size_t c : members) {
            const auto& k = components[c];
            const auto candidates = enumerate_decorations(g, L, state, i, k);
            std::vector<std::optional<bool>> asym(candidates.size());
            auto is_asym = [&](std::size_t idx) {
                if (!asym[idx]) asym[idx] = decoration_is_asymmetric(g, L, state, i, k, candidates[idx]);
                return *asym[idx];
            };

            ClaimCheck claim;
            claim.component = k.vertices;
            claim.reachable = reachable;
            for (std::size_t idx = 0; idx < candidates.size() && claim.available < reachable; ++idx)
                if (is_asym(idx)) ++claim.available;
            record.claims.push_back(claim);

            std::optional<std::size_t> pick;
            for (std::size_t idx = 0; idx < candidates.size() && !pick; ++idx) {
                if (!is_asym(idx)) continue;
                bool clash = false;
                for (std::size_t other : done)
                    if (decorations_similar(g, L, state, i, components[other], chosen[other], k, candidates[idx])) {
                        clash = true;
                        break;
                    }
                if (!clash) pick = idx;
            }
            if (!pick)
                throw DecorationShortage("layer " + std::to_string(i) + ": no free decoration for component at " +
                                         std::to_string(k.vertices.front()) + " (orbit of " +
                                         std::to_string(reachable) + ")");
            chosen[c] = candidates[*pick];
            done.push_back(c);
        }
    }

    for (std::size_t c = 0; c < components.size(); ++c) {
        const auto& k = components[c];
        const auto& d = chosen[c];
        for (Vertex v : k.vertices)
            for (EdgeId e : g.incident_edges(v))
                if (other_layer(g, L, e, i) > i)
                    state.colouring.set(e, contains(d.forward, e) ? Colour::Red : Colour::Green);
        for (EdgeId e : d.back) state.colouring.set(e, Colour::Blue);
        record.decorations.emplace_back(k.vertices, d);
    }
}

std::vector<Violation> check_step_properties(const Graph& g, const OrbitLayering& L, const StepState& state) {
    std::vector<Violation> out;
    const int i = state.layer;
    const auto& c = state.colouring;

    const auto blue = all_blue_vertices(g, c);
    if (blue != VertexSet{L.root}) {
        std::string detail = "all-blue vertices:";
        for (Vertex v : blue) detail += " " + std::to_string(v);
        out.push_back({"I", i, detail});
    }

    if (i > 0 && state.previous)
        for (EdgeId e = 0; e < g.size(); ++e)
            if (state.previous->at(e) != c.at(e) && !contains(L.incident[i], e))
                out.push_back({"II", i, "edge " + describe(g.edge(e)) + " changed outside the layer"});

    for (int j = 0; j <= i; ++j) {
        AutConstraint q;
        q.pointwise_fixed = {L.root};
        q.colour_preserve = c.restricted_to(L.closed[j]);
        q.nontrivial_on = L.layers[j];
        if (auto witness = find_automorphism(g, q)) {
            Vertex moved = -1;
            for (Vertex v : L.layers[j])
                if ((*witness)(v) != v) {
                    moved = v;
                    break;
                }
            out.push_back({"III", i,
                           "layer " + std::to_string(j) + " not fixed pointwise (vertex " + std::to_string(moved) +
                               " moves)"});
        }
    }

    for (EdgeId e = 0; e < g.size(); ++e) {
        const auto& edge = g.edge(e);
        const int lo = std::min(L.layer_of[edge.u], L.layer_of[edge.v]);
        const int hi = std::max(L.layer_of[edge.u], L.layer_of[edge.v]);
        if (lo > i && c.at(e) != Colour::Green)
            out.push_back({"IV", i, "unreached edge " + describe(edge) + " is not green"});
        if (hi > i && c.at(e) == Colour::Blue && edge.u != L.root && edge.v != L.root)
            out.push_back({"V", i, "blue edge " + describe(edge) + " reaches a later layer"});
    }
    return out;
}

namespace {

StepRecord run_step(const Graph& g, const OrbitLayering& L, StepState& state, int i, const ColourOptions& options,
                    ColourStats& stats) {
    StepRecord record;
    record.layer = i;
    const auto classes = classify_layer(g, L, i);
    record.f = classes.f;
    record.b = classes.b;
    record.h = classes.h;
    state.previous = state.colouring;
    state.layer = i;
    record.rule = colour_horizontal(g, L, state, i, options, stats);
    assign_decorations(g, L, state, i, record);
    return record;
}

// Exhaustive recolouring of the layer's incident edges, earlier choices
// kept. Forward edges stay Red/Green and root edges Blue so that IV and V
// cannot break; the first assignment passing check_step_properties wins.
std::optional<EdgeColouring> recolour_layer(const Graph& g, const OrbitLayering& L, const StepState& before,
                                            const EdgeColouring& hint, int i, std::uint64_t max_leaves) {
    const auto& edges = L.incident[i];
    std::vector<std::vector<Colour>> options(edges.size());
    for (std::size_t k = 0; k < edges.size(); ++k) {
        const EdgeId e = edges[k];
        const auto& edge = g.edge(e);
        std::vector<Colour> allowed;
        if (edge.u == L.root || edge.v == L.root) allowed = {Colour::Blue};
        else if (other_layer(g, L, e, i) > i) allowed = {Colour::Red, Colour::Green};
        else allowed = {Colour::Red, Colour::Green, Colour::Blue};
        // the generic attempt's colour goes first
        if (auto h = hint.at(e)) {
            auto it = std::find(allowed.begin(), allowed.end(), *h);
            if (it != allowed.end()) std::rotate(allowed.begin(), it, it + 1);
        }
        options[k] = std::move(allowed);
    }

    StepState trial;
    trial.layer = i;
    trial.previous = before.colouring;
    trial.colouring = before.colouring;
    std::uint64_t leaves = 0;
    std::vector<std::size_t> choice(edges.size(), 0);
    while (leaves < max_leaves) {
        for (std::size_t k = 0; k < edges.size(); ++k) trial.colouring.set(edges[k], options[k][choice[k]]);
        ++leaves;
        if (all_blue_vertices(g, trial.colouring) == VertexSet{L.root} &&
            check_step_properties(g, L, trial).empty())
            return trial.colouring;
        std::size_t k = edges.size();
        while (k > 0) {
            --k;
            if (++choice[k] < options[k].size()) break;
            choice[k] = 0;
            if (k == 0) return std::nullopt;
        }
        if (edges.empty()) return std::nullopt;
    }
    return std::nullopt;
}

ColourResult global_search(const Graph& g, const ColourOptions& options, ColourResult partial) {
    auto found = search_colouring(g, kColourCount, true, options.budget);
    if (!found) throw VerificationFailure("global search found no star-compliant 3-colouring");
    partial.colouring = *found;
    partial.method = "global-search";
    partial.stats.global_fallbacks += 1;
    return partial;
}

ColourResult layered(const Graph& g, int degree, const ColourOptions& options) {
    ColourResult result;
    result.method = "layered";
    result.stats.layered_runs = 1;
    const Vertex root = options.root.value_or(0);
    result.layering = build_layering(g, root);
    const auto& L = result.layering;
    const bool low_degree = degree <= 4;

    StepState state = initial_colouring(g, L);
    if (options.verify || low_degree) {
        state.audit.back().violations = check_step_properties(g, L, state);
        result.stats.steps_checked += 1;
        result.stats.violations += static_cast<int>(state.audit.back().violations.size());
    }

    for (int i = 1; i < L.size(); ++i) {
        result.stats.layers += 1;
        StepState trial = state;
        trial.audit.clear();
        StepRecord record;
        std::string failure;
        try {
            record = run_step(g, L, trial, i, options, result.stats);
        } catch (const DecorationShortage& e) {
            if (!low_degree) throw VerificationFailure(std::string("decoration shortage at degree >= 5: ") + e.what());
            failure = e.what();
            record.layer = i;
            trial.layer = i;
            trial.previous = state.colouring;
        }
        for (const auto& claim : record.claims) {
            if (low_degree) continue;
            result.stats.claim_checks += 1;
            if (!claim.holds()) result.stats.claim_failures += 1;
        }

        std::vector<Violation> violations;
        if (failure.empty() && (options.verify || low_degree)) violations = check_step_properties(g, L, trial);

        if (low_degree && failure.empty() && violations.empty() && options.force_fallback) failure = "forced";
        if (low_degree && (!failure.empty() || !violations.empty())) {
            record.fallback = true;
            record.fallback_reason = !failure.empty() ? failure : "property " + violations.front().property + ": " +
                                                                      violations.front().detail;
            result.stats.fallback_layers += 1;
            auto recoloured = recolour_layer(g, L, state, trial.colouring, i, options.layer_fallback_leaves);
            if (!recoloured) {
                state.audit.push_back(record);
                result.audit = state.audit;
                return global_search(g, options, std::move(result));
            }
            trial.colouring = *recoloured;
            record.decorations.clear();
            violations = check_step_properties(g, L, trial);
        }
        if (options.verify || low_degree) {
            result.stats.steps_checked += 1;
            result.stats.violations += static_cast<int>(violations.size());
        }
        record.violations = violations;
        trial.audit = std::move(state.audit);
        trial.audit.push_back(std::move(record));
        state = std::move(trial);
    }

    result.colouring = state.colouring;
    result.audit = state.audit;
    if (!final_ok(g, result.colouring)) {
        if (low_degree) return global_search(g, options, std::move(result));
        throw VerificationFailure("layered colouring failed final verification");
    }
    return result;
}

} // namespace

ColourResult colour_regular(const Graph& g, const ColourOptions& options) {
    if (!is_connected(g)) throw InputError("colour_regular: graph is disconnected");
    const auto degree = regularity(g);
    if (!degree) throw InputError("colour_regular: graph is not regular");
    if (*degree == 0) throw InputError("colour_regular: degree must be at least 1");
    if (g.order() == 2) throw NotColourable("K2 has no distinguishing edge colouring");
    if (options.root && (*options.root < 0 || *options.root >= g.order()))
        throw InputError("colour_regular: root out of range");

    ColourResult result;
    if (is_complete(g)) {
        auto found = search_colouring(g, kColourCount, true, options.budget);
        if (!found) throw VerificationFailure("no star-compliant colouring found for a complete graph");
        result.colouring = *found;
        result.method = "complete-search";
    } else if (*degree == 2) {
        const auto order = cyclic_order(g);
        const Graph canonical = cycle(g.order());
        const auto base = cycle_colouring(g.order());
        result.colouring = EdgeColouring(g.size());
        for (EdgeId e = 0; e < canonical.size(); ++e) {
            const auto& edge = canonical.edge(e);
            result.colouring.set(*g.edge_id(order[edge.u], order[edge.v]), *base.at(e));
        }
        result.method = "cycle";
    } else {
        result = layered(g, *degree, options);
    }
    verify_final(g, result.colouring, result.method);
    return result;
}

} // namespace symcol
