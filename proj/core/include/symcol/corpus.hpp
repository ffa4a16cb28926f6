#pragma once

#include <vector>

#include "symcol/graph.hpp"

namespace symcol {

/// Every connected d-regular graph on n vertices, one per isomorphism
/// class, in discovery order. Throws InputError when n*d is odd or d >= n
/// (except the trivial n = 1, d = 0).
std::vector<Graph> connected_regular_graphs(int n, int d);

/// connected_regular_graphs for every n in [min_n, max_n] and every degree
/// 1..n-1 (degree 0 only for n = 1), ordered by n then degree.
std::vector<Graph> connected_regular_corpus(int min_n, int max_n);

} // namespace symcol
