#pragma once

#include <cstdint>
#include <string>

#include "twowalk/graph.hpp"

namespace twowalk {

/// Canonical byte string: equal exactly for isomorphic graphs.
///
/// Computed by iterated neighborhood refinement followed by backtracking over
/// the remaining cells, selecting the lexicographically minimal adjacency
/// encoding. Intended for the graph sizes this library works at (a few dozen
/// vertices); no external isomorphism library is involved.
std::string canonical_form(const Graph& g);

/// Canonical form packed into a single word, for fast dedup sets.
/// Requires n <= 10 (45 adjacency bits + order).
std::uint64_t canonical_key_small(int n, const std::uint64_t* adjacency_masks);

/// Screens on order, size and degree sequence, then compares canonical forms.
bool is_isomorphic(const Graph& a, const Graph& b);

}  // namespace twowalk
