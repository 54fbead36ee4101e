#include "rsz/quiver.hpp"

#include <algorithm>

namespace rsz {

Quiver ordinary_quiver(const AlgebraSpec& spec) {
  require_valid(spec);
  Quiver q;
  for (int64_t i = 0; i < spec.k; ++i) q.vertices.push_back({i + 1, -1});
  for (int64_t i = 0; i < spec.k; ++i) {
    for (int64_t j = 0; j < spec.k; ++j) {
      if (spec.j_at(i, j)) q.arrows.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  }
  return q;
}

Quiver separated_quiver(const AlgebraSpec& spec) {
  require_valid(spec);
  Quiver q;
  for (int64_t i = 0; i < spec.k; ++i) q.vertices.push_back({i + 1, 0});
  for (int64_t i = 0; i < spec.k; ++i) q.vertices.push_back({i + 1, 1});
  for (int64_t i = 0; i < spec.k; ++i) {
    for (int64_t j = 0; j < spec.k; ++j) {
      if (spec.j_at(i, j)) {
        q.arrows.emplace_back(static_cast<int>(i), static_cast<int>(spec.k + j));
      }
    }
  }
  return q;
}

Quiver reverse(const Quiver& q) {
  Quiver out;
  out.vertices = q.vertices;
  out.arrows.reserve(q.arrows.size());
  for (const auto& [s, t] : q.arrows) out.arrows.emplace_back(t, s);
  return out;
}

DimVector dimension_vector(const AlgebraSpec& spec) {
  DimVector d = a_vector(spec);
  d.insert(d.end(), spec.r.begin(), spec.r.end());
  return d;
}

Graph underlying_graph(const Quiver& q) {
  Graph g;
  g.n = static_cast<int>(q.vertices.size());
  g.edges = q.arrows;
  return g;
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(static_cast<size_t>(g.n));
  for (const auto& [u, v] : g.edges) {
    if (u == v) {
      adj[static_cast<size_t>(u)].push_back(v);
    } else {
      adj[static_cast<size_t>(u)].push_back(v);
      adj[static_cast<size_t>(v)].push_back(u);
    }
  }
  for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
  return adj;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  auto adj = adjacency(g);
  std::vector<int> comp(static_cast<size_t>(g.n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.n; ++s) {
    if (comp[static_cast<size_t>(s)] >= 0) continue;
    std::vector<int> members;
    std::vector<int> stack{s};
    comp[static_cast<size_t>(s)] = static_cast<int>(out.size());
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      members.push_back(v);
      for (int w : adj[static_cast<size_t>(v)]) {
        if (comp[static_cast<size_t>(w)] < 0) {
          comp[static_cast<size_t>(w)] = static_cast<int>(out.size());
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

}  // namespace rsz
