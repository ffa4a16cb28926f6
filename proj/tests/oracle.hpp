#pragma once

// Brute-force references the library is checked against. Nothing here
// shares code with the search engine beyond Graph and EdgeColouring.

#include <cstdint>
#include <optional>
#include <vector>

#include "symcol/aut_search.hpp"
#include "symcol/graph.hpp"

namespace oracle {

using symcol::Graph;

/// Every automorphism as an image vector, identity first. n! enumeration.
std::vector<std::vector<int>> automorphisms(const Graph& g);

bool satisfies(const Graph& g, const symcol::AutConstraint& c, const std::vector<int>& p);

/// First permutation (lexicographic) satisfying c, if any.
std::optional<std::vector<int>> find(const Graph& g, const symcol::AutConstraint& c);
std::uint64_t count(const Graph& g, const symcol::AutConstraint& c);

/// Least k such that some k-colouring (all k^m of them, in order) is preserved
/// only by the identity; nullopt when no k <= max_k works.
std::optional<int> distinguishing_index(const Graph& g, int max_k);

bool distinguishes(const Graph& g, const std::vector<std::vector<int>>& auts, const std::vector<int>& labels);

/// All graphs on n vertices up to isomorphism, grown by vertex addition.
std::vector<Graph> all_graphs(int n);
std::vector<Graph> connected_graphs(int n);

} // namespace oracle
