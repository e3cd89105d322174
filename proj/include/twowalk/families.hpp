#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twowalk/graph.hpp"
#include "twowalk/reduced.hpp"

namespace twowalk {

/// Identifier of a catalog member: a fixed graph H_i (i = 1..30) or a member
/// of a parameterized family G_j (j = 1..8) with its integer parameters.
struct FamilyId {
    enum class Kind { H, G };
    Kind kind = Kind::H;
    int index = 0;
    std::vector<long> params;  // empty for H; per-family meaning for G

    std::string str() const;  // "H13", "G2(1,0)", "G7(2)"
    bool operator==(const FamilyId&) const = default;
};

/// Length-parameterized tricyclic bases T_1..T_8. Parameters are the vertex
/// counts of the constituent paths, in the order listed below; shared
/// endpoints are counted once and triangles sit at the free path ends.
///
///   T1 (n,m,k)        three arms meeting at a hub, triangle at each far end;
///                     n,m,k >= 1 (an arm of 1 puts its triangle on the hub)
///   T2 (k,l,n,m)      cycle through A,B via paths u(n), v(m); arm w(k) from A
///                     and arm r(l) from B each ending in a triangle;
///                     k,l >= 1, n,m >= 2
///   T3 (n,m,k,l)      theta A-B via paths u(n), v(m), w(k); arm r(l) from B
///                     ending in a triangle; n,m,k >= 2, l >= 1
///   T4 (k,p,q,n,m)    cycle A-B via u(n), v(m); paths s(p): A-C, t(q): B-C;
///                     arm w(k) from C ending in a triangle; k >= 1, rest >= 2
///   T5 (n,m,k,p,q)    u(n): A-B, v(m),s(p): A-C, w(k),t(q): C-B; all >= 2
///   T6 (d1,d2,d3,d4)  four internally disjoint A-B paths; all >= 2
///   T7 (n,m,k,l,p,q)  u(n),w(k): A-B, v(m),r(l): C-D, s(p): A-C, t(q): B-D;
///                     all >= 2
///   T8 (n,m,k,l,p,q)  subdivided K4 on A,B,C,D: u(n): A-B, v(m): A-C,
///                     w(k): A-D, s(p): D-B, t(q): B-C, r(l): C-D; all >= 2
///
/// Throws std::invalid_argument when a floor is violated or the parameters
/// would force a multi-edge.
Graph build_base(BaseType t, const std::vector<int>& lengths);

/// The thirty fixed catalog graphs. Throws std::invalid_argument unless
/// 1 <= i <= 30.
Graph build_h(int i);

int h_order(int i);

/// The eight parameterized families:
///   G1 (l1)      l1 >= 1   cycle vertices carrying two pendants each
///   G2 (k1,k2)   max >= 1  pendant-bearing interiors of the two arms
///   G3 (k1,k2)   max >= 1  pendant-bearing interiors of arm w / path u
///   G4 (l1)      l1 >= 1   path vertices carrying two pendants each
///   G5 (k1,k2)   max >= 1  pendant-bearing interiors of connectors s / t
///   G6 (k1,k2)   max >= 1  pendant-bearing interiors of parallel paths w / r
///   G7 (b)       b >= 1    b pendants on every K4 vertex; 2-walk (3,b)-linear
///   G8 (k1,k2)   max >= 1  pendant-bearing interiors of paths w / t
Graph build_g(int j, const std::vector<long>& params);

/// The (a, b) pair a catalog member verifies against. For G7, b equals the
/// family parameter.
std::pair<long, long> expected_linearity(const FamilyId& id);

/// Base type each catalog member reduces to.
BaseType expected_base_type(const FamilyId& id);

/// All catalog members with exactly n vertices, deduplicated by isomorphism
/// (H before G, ascending index, parameters in lexicographic order).
std::vector<std::pair<FamilyId, Graph>> family_members_of_order(int n);

/// FamilyId of a catalog member isomorphic to g, if any.
std::optional<FamilyId> classify(const Graph& g);

}  // namespace twowalk
