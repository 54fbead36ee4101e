#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rsz/quiver.hpp"

namespace rsz {

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int n = 1;  // A: n >= 1, D: n >= 4, E: 6, 7 or 8
  friend bool operator==(const DynkinType&, const DynkinType&) = default;
};

std::string to_string(const DynkinType& t);  // "A5", "D4", "E8"

enum class EuclideanKind { Atilde, Dtilde, E6tilde, E7tilde, E8tilde };

std::string to_string(EuclideanKind kind);  // "Atilde", ..., "E8tilde"

// Template graphs with a fixed vertex order; radical generators and
// embeddings are expressed in this order.
//   Atilde(n):  cycle 0-1-...-n-0                       (n+1 vertices, n >= 2)
//   Dtilde(n):  [tip0, tip1, path 2..n-2, tip n-1, tip n]; tips 0,1 attach to
//               the first path vertex, tips n-1,n to the last (n >= 4)
//   E6tilde:    row 0-1-2-3-4, branch 2-5-6
//   E7tilde:    row 0-1-2-3-4-5-6, branch 3-7
//   E8tilde:    row 0-1-2-3-4-5-6-7, branch 2-8
Graph euclidean_template(EuclideanKind kind, int n);

// Dynkin shapes, used by root enumeration and tests.
//   A(n): path 0-...-n-1
//   D(n): tips 0,1 on vertex 2, then path 2-3-...-n-1
//   E(n): row 0-...-n-2, branch at row index 2 to vertex n-1
Graph dynkin_template(const DynkinType& t);

// A witnessed occurrence of a Euclidean graph inside a host graph:
// embedding[t] is the host vertex carrying template vertex t.  The embedding
// is a subgraph embedding (injective, edge-preserving), not necessarily
// induced.
struct EuclideanCertificate {
  EuclideanKind kind = EuclideanKind::Atilde;
  int n = 2;
  std::vector<int> embedding;
};

// Edge-by-edge check of a certificate against the host graph.
bool verify_embedding(const Graph& host, const EuclideanCertificate& cert);

struct ComponentClass {
  std::vector<int> vertices;  // sorted host vertex ids
  bool dynkin = false;
  DynkinType type;             // meaningful iff dynkin
  EuclideanCertificate cert;   // meaningful iff !dynkin
};

struct GraphClassification {
  std::vector<ComponentClass> components;
  bool all_dynkin() const;
};

// Per-component ADE trichotomy.  Each component is either named as a Dynkin
// diagram or equipped with a verified Euclidean certificate; the outcomes
// are mutually exclusive and exhaustive.  Rejects self-loops and
// multi-edges.
//
// Certificate search order (fixes golden outputs; kind and parameter are
// invariant under relabeling, the embedding is not):
//   (a) a component with a cycle yields an Atilde on a shortest cycle,
//       canonicalized to start at its least vertex, ties broken by the
//       lexicographically least vertex sequence;
//   (b) a tree with a vertex of degree >= 4 yields the Dtilde(4) star on the
//       least such vertex and its four least neighbors;
//   (c) a tree with two or more degree-3 vertices yields Dtilde(n) on a
//       nearest pair of them (ties to the least indices), the path between
//       them, and their off-path neighbors;
//   (d) a tree with exactly one degree-3 vertex is resolved by its sorted arm
//       lengths (p,q,s): (1,1,s) -> D; (1,2,2)/(1,2,3)/(1,2,4) -> E6/E7/E8;
//       (1,2,s>=5) -> E8tilde; (1,q>=3,s) -> E7tilde; (p>=2,q,s) -> E6tilde,
//       arms assigned to template arms in sorted order;
//   (e) no degree-3 vertex -> A.
GraphClassification classify(const Graph& g);

// Certificate for one connected graph, or nullopt iff it is Dynkin.
std::optional<EuclideanCertificate> find_euclidean_subgraph(const Graph& connected);

// A shortest cycle under the search order of classify, as a vertex sequence
// (consecutive vertices adjacent, last adjacent to first).  nullopt on
// forests.
std::optional<std::vector<int>> find_cycle(const Graph& g);

}  // namespace rsz
