#pragma once

#include <array>
#include <string>
#include <vector>

#include "twowalk/graph.hpp"

namespace twowalk {

/// The eight topological types of tricyclic bases.
enum class BaseType : int { T1 = 1, T2, T3, T4, T5, T6, T7, T8 };

std::string to_string(BaseType t);

/// A tricyclic base with its degree-2 vertices suppressed: branch vertices
/// (degree >= 3) plus a multiset of arcs carrying the suppressed segment
/// lengths. A loop (u == v) is an internal cycle through one branch vertex.
struct ReducedMultigraph {
    int branch_count = 0;
    /// {u, v, length} with u <= v, sorted; length counts edges.
    std::vector<std::array<int, 3>> arcs;

    int total_length() const;
};

/// Suppresses degree-2 vertices of a pendant-free tricyclic graph.
/// Throws std::invalid_argument if g has a vertex of degree < 2 or is not
/// tricyclic.
ReducedMultigraph reduce_base(const Graph& g);

/// Shape of a reduced multigraph with lengths forgotten, canonical under
/// branch-vertex permutation. Two bases are homeomorphic iff equal shapes.
std::string reduced_shape(const ReducedMultigraph& r);

/// Base type of a tricyclic graph: base(g) is reduced and matched against the
/// stored catalog of base shapes. Throws std::invalid_argument on
/// non-tricyclic input and std::logic_error if no catalog entry matches
/// (which would mean the catalog transcription is wrong).
BaseType base_type(const Graph& g);

/// One of the fifteen shapes a reduced tricyclic base can take. Branch
/// vertices of a type's drawing coincide when connecting segments contract,
/// which is why most types own several shapes.
struct BaseShape {
    BaseType type;
    int branch_count;
    std::vector<std::pair<int, int>> arcs;  // loops as (v, v)
};

/// All fifteen shapes, grouped by type; the source of truth for both
/// base_type() and the structured enumerator.
const std::vector<BaseShape>& base_shape_catalog();

/// Maximal path whose endpoints have degree > 2 and whose interior vertices
/// have degree exactly 2 (degrees in g itself); a cycle when the endpoints
/// coincide. length counts edges.
struct InternalPath {
    int endpoint_a = -1;
    int endpoint_b = -1;
    int length = 0;
    bool is_cycle = false;
};

std::vector<InternalPath> internal_paths(const Graph& g);

/// Largest internal path/cycle length, 0 if none exist.
int max_internal_path_length(const Graph& g);

}  // namespace twowalk
