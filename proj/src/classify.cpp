#include "rsz/classify.hpp"

#include <algorithm>
#include <set>
#include <variant>

#include "rsz/errors.hpp"

namespace rsz {

std::string to_string(const DynkinType& t) {
  const char* fam = t.family == DynkinFamily::A ? "A" : t.family == DynkinFamily::D ? "D" : "E";
  return fam + std::to_string(t.n);
}

std::string to_string(EuclideanKind kind) {
  switch (kind) {
    case EuclideanKind::Atilde: return "Atilde";
    case EuclideanKind::Dtilde: return "Dtilde";
    case EuclideanKind::E6tilde: return "E6tilde";
    case EuclideanKind::E7tilde: return "E7tilde";
    case EuclideanKind::E8tilde: return "E8tilde";
  }
  return "?";
}

Graph euclidean_template(EuclideanKind kind, int n) {
  Graph g;
  switch (kind) {
    case EuclideanKind::Atilde: {
      if (n < 2) throw InvariantError("Atilde parameter must be >= 2");
      g.n = n + 1;
      for (int i = 0; i < n; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(n, 0);
      return g;
    }
    case EuclideanKind::Dtilde: {
      if (n < 4) throw InvariantError("Dtilde parameter must be >= 4");
      g.n = n + 1;
      g.edges.emplace_back(0, 2);
      g.edges.emplace_back(1, 2);
      for (int i = 2; i + 1 <= n - 2; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(n - 2, n - 1);
      g.edges.emplace_back(n - 2, n);
      return g;
    }
    case EuclideanKind::E6tilde: {
      if (n != 6) throw InvariantError("E6tilde has fixed parameter 6");
      g.n = 7;
      for (int i = 0; i < 4; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(2, 5);
      g.edges.emplace_back(5, 6);
      return g;
    }
    case EuclideanKind::E7tilde: {
      if (n != 7) throw InvariantError("E7tilde has fixed parameter 7");
      g.n = 8;
      for (int i = 0; i < 6; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(3, 7);
      return g;
    }
    case EuclideanKind::E8tilde: {
      if (n != 8) throw InvariantError("E8tilde has fixed parameter 8");
      g.n = 9;
      for (int i = 0; i < 7; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(2, 8);
      return g;
    }
  }
  throw InvariantError("unknown Euclidean kind");
}

Graph dynkin_template(const DynkinType& t) {
  Graph g;
  switch (t.family) {
    case DynkinFamily::A: {
      if (t.n < 1) throw InvariantError("A parameter must be >= 1");
      g.n = t.n;
      for (int i = 0; i + 1 < t.n; ++i) g.edges.emplace_back(i, i + 1);
      return g;
    }
    case DynkinFamily::D: {
      if (t.n < 4) throw InvariantError("D parameter must be >= 4");
      g.n = t.n;
      g.edges.emplace_back(0, 2);
      g.edges.emplace_back(1, 2);
      for (int i = 2; i + 1 < t.n; ++i) g.edges.emplace_back(i, i + 1);
      return g;
    }
    case DynkinFamily::E: {
      if (t.n < 6 || t.n > 8) throw InvariantError("E parameter must be 6, 7 or 8");
      g.n = t.n;
      for (int i = 0; i + 2 < t.n; ++i) g.edges.emplace_back(i, i + 1);
      g.edges.emplace_back(2, t.n - 1);
      return g;
    }
  }
  throw InvariantError("unknown Dynkin family");
}

bool verify_embedding(const Graph& host, const EuclideanCertificate& cert) {
  Graph tmpl;
  try {
    tmpl = euclidean_template(cert.kind, cert.n);
  } catch (const InvariantError&) {
    return false;
  }
  if (static_cast<int>(cert.embedding.size()) != tmpl.n) return false;
  std::set<int> image;
  for (int v : cert.embedding) {
    if (v < 0 || v >= host.n) return false;
    if (!image.insert(v).second) return false;  // not injective
  }
  std::set<std::pair<int, int>> host_edges;
  for (auto [u, v] : host.edges) {
    host_edges.insert({std::min(u, v), std::max(u, v)});
  }
  for (auto [s, t] : tmpl.edges) {
    int u = cert.embedding[static_cast<size_t>(s)];
    int v = cert.embedding[static_cast<size_t>(t)];
    if (!host_edges.count({std::min(u, v), std::max(u, v)})) return false;
  }
  return true;
}

bool GraphClassification::all_dynkin() const {
  return std::all_of(components.begin(), components.end(),
                     [](const ComponentClass& c) { return c.dynkin; });
}

namespace {

void require_simple(const Graph& g) {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) {
      throw InvariantError("edge endpoint out of range");
    }
    if (u == v) throw InvariantError("self-loops are not allowed here");
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      throw InvariantError("multi-edges are not allowed here");
    }
  }
}

// Rotate to start at the least vertex and walk toward its smaller neighbor.
std::vector<int> canonical_cycle(std::vector<int> cycle) {
  auto least = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), least, cycle.end());
  if (cycle.back() < cycle[1]) {
    std::reverse(cycle.begin() + 1, cycle.end());
  }
  return cycle;
}

// A shortest cycle: per edge, the path reconnecting its endpoints without
// it, canonicalized; ties broken by the lexicographically least sequence.
// The cycle length (the girth) is invariant under relabeling.
std::optional<std::vector<int>> find_cycle_impl(const Graph& g,
                                                const std::vector<std::vector<int>>& adj) {
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());

  std::optional<std::vector<int>> best;
  for (auto [u, v] : edges) {
    std::vector<int> parent(static_cast<size_t>(g.n), -2);
    std::vector<int> queue{u};
    parent[static_cast<size_t>(u)] = -1;
    for (size_t head = 0; head < queue.size() && parent[static_cast<size_t>(v)] == -2; ++head) {
      int x = queue[head];
      for (int y : adj[static_cast<size_t>(x)]) {
        if ((x == u && y == v) || (x == v && y == u)) continue;  // not this edge
        if (parent[static_cast<size_t>(y)] != -2) continue;
        parent[static_cast<size_t>(y)] = x;
        queue.push_back(y);
      }
    }
    if (parent[static_cast<size_t>(v)] == -2) continue;  // bridge
    std::vector<int> cycle;
    for (int x = v; x != -1; x = parent[static_cast<size_t>(x)]) cycle.push_back(x);
    cycle = canonical_cycle(std::move(cycle));
    if (!best || cycle.size() < best->size() ||
        (cycle.size() == best->size() && cycle < *best)) {
      best = std::move(cycle);
    }
  }
  return best;
}

// Distinguishes the two outcomes on a connected component.
struct TypeOrCert {
  bool dynkin;
  DynkinType type;
  EuclideanCertificate cert;
};

// The arms of a spider: for each neighbor of the center in increasing order,
// the vertex list walking outward (excluding the center).
std::vector<std::vector<int>> arms_of(const std::vector<std::vector<int>>& adj, int center) {
  std::vector<std::vector<int>> arms;
  for (int first : adj[static_cast<size_t>(center)]) {
    std::vector<int> arm{first};
    int prev = center, cur = first;
    while (adj[static_cast<size_t>(cur)].size() == 2) {
      int next = adj[static_cast<size_t>(cur)][0] == prev ? adj[static_cast<size_t>(cur)][1]
                                                          : adj[static_cast<size_t>(cur)][0];
      arm.push_back(next);
      prev = cur;
      cur = next;
    }
    arms.push_back(std::move(arm));
  }
  return arms;
}

// Unique path between two vertices of a tree, endpoints included.
std::vector<int> tree_path(const std::vector<std::vector<int>>& adj, int from, int to) {
  std::vector<int> parent(adj.size(), -2);
  std::vector<int> queue{from};
  parent[static_cast<size_t>(from)] = -1;
  for (size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (v == to) break;
    for (int w : adj[static_cast<size_t>(v)]) {
      if (parent[static_cast<size_t>(w)] == -2) {
        parent[static_cast<size_t>(w)] = v;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> path;
  for (int v = to; v != -1; v = parent[static_cast<size_t>(v)]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

TypeOrCert classify_connected(const Graph& g) {
  auto adj = adjacency(g);
  const int n = g.n;
  const int m = static_cast<int>(g.edges.size());

  // (a) Any cycle gives an Atilde certificate on the cycle itself.
  if (m >= n) {
    auto cycle = find_cycle_impl(g, adj);
    EuclideanCertificate cert;
    cert.kind = EuclideanKind::Atilde;
    cert.n = static_cast<int>(cycle->size()) - 1;
    cert.embedding = *cycle;
    return {false, {}, cert};
  }

  // Tree from here on (connected, m = n-1).
  // (b) Degree >= 4: the star on the vertex and its four least neighbors.
  for (int v = 0; v < n; ++v) {
    if (adj[static_cast<size_t>(v)].size() >= 4) {
      EuclideanCertificate cert;
      cert.kind = EuclideanKind::Dtilde;
      cert.n = 4;
      cert.embedding = {adj[static_cast<size_t>(v)][0], adj[static_cast<size_t>(v)][1], v,
                        adj[static_cast<size_t>(v)][2], adj[static_cast<size_t>(v)][3]};
      return {false, {}, cert};
    }
  }

  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[static_cast<size_t>(v)].size() == 3) branch.push_back(v);
  }

  // (c) Two forks: Dtilde on a nearest pair of forks and the path between
  // them.  The minimal fork distance is invariant under relabeling, so the
  // parameter is too; ties go to the smallest vertex indices.
  if (branch.size() >= 2) {
    int b1 = branch[0], b2 = branch[1];
    size_t best_len = tree_path(adj, b1, b2).size();
    for (size_t x = 0; x < branch.size(); ++x) {
      for (size_t y = x + 1; y < branch.size(); ++y) {
        size_t len = tree_path(adj, branch[x], branch[y]).size();
        if (len < best_len) {
          best_len = len;
          b1 = branch[x];
          b2 = branch[y];
        }
      }
    }
    std::vector<int> path = tree_path(adj, b1, b2);
    auto off_path = [&](int b, int on_path_nbr) {
      std::vector<int> tips;
      for (int w : adj[static_cast<size_t>(b)]) {
        if (w != on_path_nbr) tips.push_back(w);
      }
      return tips;  // exactly two, already sorted
    };
    std::vector<int> t1 = off_path(b1, path[1]);
    std::vector<int> t2 = off_path(b2, path[path.size() - 2]);
    EuclideanCertificate cert;
    cert.kind = EuclideanKind::Dtilde;
    cert.n = static_cast<int>(path.size()) + 3;  // 4 tips + path = n + 1 vertices
    cert.embedding = {t1[0], t1[1]};
    cert.embedding.insert(cert.embedding.end(), path.begin(), path.end());
    cert.embedding.push_back(t2[0]);
    cert.embedding.push_back(t2[1]);
    return {false, {}, cert};
  }

  // (e) No fork: a path (possibly a single vertex).
  if (branch.empty()) {
    return {true, {DynkinFamily::A, n}, {}};
  }

  // (d) One fork: sorted arm lengths decide.
  int c = branch[0];
  std::vector<std::vector<int>> arms = arms_of(adj, c);
  std::stable_sort(arms.begin(), arms.end(),
                   [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const size_t p = arms[0].size(), q = arms[1].size(), s = arms[2].size();

  if (p == 1 && q == 1) return {true, {DynkinFamily::D, static_cast<int>(s) + 3}, {}};
  if (p == 1 && q == 2 && s == 2) return {true, {DynkinFamily::E, 6}, {}};
  if (p == 1 && q == 2 && s == 3) return {true, {DynkinFamily::E, 7}, {}};
  if (p == 1 && q == 2 && s == 4) return {true, {DynkinFamily::E, 8}, {}};

  EuclideanCertificate cert;
  if (p == 1 && q == 2) {
    // s >= 5: row = arm[1] reversed, center, first five of arm[2]; branch = arm[0].
    cert.kind = EuclideanKind::E8tilde;
    cert.n = 8;
    cert.embedding = {arms[1][1], arms[1][0], c,          arms[2][0], arms[2][1],
                      arms[2][2], arms[2][3], arms[2][4], arms[0][0]};
  } else if (p == 1) {
    // q, s >= 3.
    cert.kind = EuclideanKind::E7tilde;
    cert.n = 7;
    cert.embedding = {arms[1][2], arms[1][1], arms[1][0], c,
                      arms[2][0], arms[2][1], arms[2][2], arms[0][0]};
  } else {
    // p, q, s >= 2.
    cert.kind = EuclideanKind::E6tilde;
    cert.n = 6;
    cert.embedding = {arms[0][1], arms[0][0], c,          arms[1][0],
                      arms[1][1], arms[2][0], arms[2][1]};
  }
  return {false, {}, cert};
}

Graph component_subgraph(const Graph& g, const std::vector<int>& vertices,
                         std::vector<int>& to_host) {
  to_host = vertices;  // sorted host ids; local id = position
  std::vector<int> to_local(static_cast<size_t>(g.n), -1);
  for (size_t i = 0; i < vertices.size(); ++i) {
    to_local[static_cast<size_t>(vertices[i])] = static_cast<int>(i);
  }
  Graph sub;
  sub.n = static_cast<int>(vertices.size());
  for (auto [u, v] : g.edges) {
    int lu = to_local[static_cast<size_t>(u)], lv = to_local[static_cast<size_t>(v)];
    if (lu >= 0 && lv >= 0) sub.edges.emplace_back(lu, lv);
  }
  return sub;
}

}  // namespace

std::optional<std::vector<int>> find_cycle(const Graph& g) {
  require_simple(g);
  return find_cycle_impl(g, adjacency(g));
}

std::optional<EuclideanCertificate> find_euclidean_subgraph(const Graph& connected) {
  require_simple(connected);
  if (connected_components(connected).size() != 1) {
    throw InvariantError("find_euclidean_subgraph expects a connected graph");
  }
  TypeOrCert res = classify_connected(connected);
  if (res.dynkin) return std::nullopt;
  return res.cert;
}

GraphClassification classify(const Graph& g) {
  require_simple(g);
  GraphClassification out;
  for (const std::vector<int>& members : connected_components(g)) {
    std::vector<int> to_host;
    Graph sub = component_subgraph(g, members, to_host);
    TypeOrCert res = classify_connected(sub);
    ComponentClass cc;
    cc.vertices = members;
    cc.dynkin = res.dynkin;
    if (res.dynkin) {
      cc.type = res.type;
    } else {
      cc.cert = res.cert;
      for (int& v : cc.cert.embedding) v = to_host[static_cast<size_t>(v)];
    }
    out.components.push_back(std::move(cc));
  }
  return out;
}

}  // namespace rsz
