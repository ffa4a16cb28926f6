#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symcol/colouring.hpp"
#include "symcol/graph.hpp"
#include "symcol/permutation.hpp"

namespace symcol {

using VertexSet = std::vector<Vertex>;
using EdgeSet = std::vector<EdgeId>;

/// Declarative description of the automorphisms a query is asking for.
///
/// An automorphism p satisfies the constraint when
///   - p(a) == b for every pinned pair (a, b),
///   - p(x) == x for every x in pointwise_fixed,
///   - p(A) == A' for every vertex setwise pair (A, A'),
///   - p(F) == F' for every edge setwise pair (F, F'),
///   - colour_preserve[p(e)] == colour_preserve[e] for every edge e, where an
///     uncoloured edge must map to an uncoloured edge,
///   - p(x) != x for some x in nontrivial_on, when that set is given.
struct AutConstraint {
    std::vector<std::pair<Vertex, Vertex>> pinned;
    VertexSet pointwise_fixed;
    std::vector<std::pair<VertexSet, VertexSet>> setwise_pairs;
    std::vector<std::pair<EdgeSet, EdgeSet>> edge_setwise_pairs;
    std::optional<EdgeColouring> colour_preserve;
    std::optional<VertexSet> nontrivial_on;
};

/// Throws std::invalid_argument when the constraint does not refer to g
/// consistently (out-of-range ids, unequal setwise cardinalities, repeated
/// pinned images, colouring of the wrong size).
void validate(const Graph& g, const AutConstraint& c);

/// Direct edge-by-edge check of every constraint field.
bool satisfies(const Graph& g, const AutConstraint& c, const Permutation& p);

/// Complete backtracking search with joint colour refinement. Returns a
/// witness satisfying every field of `c`, or nullopt when none exists.
std::optional<Permutation> find_automorphism(const Graph& g, const AutConstraint& c);

/// Strong generating data for a subgroup of Aut(G) cut out by a
/// constraint whose fields all describe stabilisers (pointwise_fixed,
/// colour_preserve, A->A setwise pairs, F->F edge pairs).
struct StabiliserChain {
    VertexSet base;
    std::vector<Permutation> generators;
    /// orbit_sizes[k]: orbit of base[k] under the pointwise stabiliser of
    /// base[0..k-1] inside the subgroup.
    std::vector<std::uint64_t> orbit_sizes;

    std::uint64_t order() const;
};

/// Throws std::invalid_argument when `subgroup` is not of stabiliser form.
StabiliserChain subgroup_chain(const Graph& g, const AutConstraint& subgroup);

/// Generators of Aut(G, r).
std::vector<Permutation> stabiliser_generators(const Graph& g, Vertex r);

/// Orbit partition of `domain` under the group generated by `gens`, each
/// orbit ascending, orbits ordered by least element. Throws
/// std::invalid_argument when a generator maps domain outside itself.
std::vector<VertexSet> vertex_orbits(const Graph& g, const std::vector<Permutation>& gens,
                                     const VertexSet& domain);
std::vector<EdgeSet> edge_orbits(const Graph& g, const std::vector<Permutation>& gens,
                                 const EdgeSet& domain);

/// |Aut(G)| via the orbit-stabiliser chain. Throws InputError when
/// g.order() exceeds `max_order`.
std::uint64_t group_order(const Graph& g, int max_order = 16);

/// Isomorphism test through an automorphism of the disjoint union that
/// swaps the two halves.
std::optional<Permutation> find_isomorphism(const Graph& a, const Graph& b);
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace symcol
