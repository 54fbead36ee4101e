#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "rsz/algebra.hpp"

namespace rsz {

// Vertex label: block index (1-based) plus the level of the separated
// construction.  level is -1 for ordinary quivers, 0 for source copies and
// 1 for sink copies of separated quivers.
struct Vertex {
  int64_t block = 0;
  int level = -1;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Finite directed multigraph; arrows index into the vertex list.
struct Quiver {
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> arrows;
};

// One nonnegative integer per vertex of an associated quiver or graph.
using DimVector = std::vector<int64_t>;

// Vertices 1..k, arrow i -> j iff the pattern entry (i,j) is nonzero.
Quiver ordinary_quiver(const AlgebraSpec& spec);

// Vertices (1,0)..(k,0),(1,1)..(k,1); arrow (i,0) -> (j,1) per pattern
// entry.  Always bipartite and loop-free.
Quiver separated_quiver(const AlgebraSpec& spec);

// Same vertices, every arrow flipped.  Involutive.
Quiver reverse(const Quiver& q);

// (a_1,...,a_k, r_1,...,r_k), aligned with separated_quiver vertex order.
DimVector dimension_vector(const AlgebraSpec& spec);

// Undirected graph on vertices 0..n-1.  Produced from quivers by forgetting
// orientation; kept as a plain edge list.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

// One undirected edge per arrow.  Loops are kept as (v,v) edges; consumers
// that require simple graphs reject them.
Graph underlying_graph(const Quiver& q);

// Sorted neighbor lists (an endpoint of a loop lists itself once).
std::vector<std::vector<int>> adjacency(const Graph& g);

// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<int>> connected_components(const Graph& g);

}  // namespace rsz
