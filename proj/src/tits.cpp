#include "rsz/tits.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "rsz/errors.hpp"

namespace rsz {

QuadraticForm form_of(const Quiver& q) {
  return {static_cast<int64_t>(q.vertices.size()), q.arrows};
}

QuadraticForm form_of(const Graph& g) { return {g.n, g.edges}; }

int64_t tits_value(const QuadraticForm& form, const DimVector& x) {
  if (static_cast<int64_t>(x.size()) != form.vertex_count) {
    throw InvariantError("dimension vector has " + std::to_string(x.size()) +
                         " entries, form has " + std::to_string(form.vertex_count) +
                         " vertices");
  }
  int64_t value = 0;
  for (int64_t xi : x) value += xi * xi;
  for (auto [s, t] : form.pairs) {
    value -= x[static_cast<size_t>(s)] * x[static_cast<size_t>(t)];
  }
  return value;
}

DimVector radical_generator(EuclideanKind kind, int n) {
  switch (kind) {
    case EuclideanKind::Atilde: {
      if (n < 2) throw InvariantError("Atilde parameter must be >= 2");
      return DimVector(static_cast<size_t>(n) + 1, 1);
    }
    case EuclideanKind::Dtilde: {
      if (n < 4) throw InvariantError("Dtilde parameter must be >= 4");
      DimVector g(static_cast<size_t>(n) + 1, 2);
      g[0] = g[1] = g[static_cast<size_t>(n) - 1] = g[static_cast<size_t>(n)] = 1;
      return g;
    }
    case EuclideanKind::E6tilde:
      if (n != 6) throw InvariantError("E6tilde has fixed parameter 6");
      return {1, 2, 3, 2, 1, 2, 1};
    case EuclideanKind::E7tilde:
      if (n != 7) throw InvariantError("E7tilde has fixed parameter 7");
      return {1, 2, 3, 4, 3, 2, 1, 2};
    case EuclideanKind::E8tilde:
      if (n != 8) throw InvariantError("E8tilde has fixed parameter 8");
      return {2, 4, 6, 5, 4, 3, 2, 1, 3};
  }
  throw InvariantError("unknown Euclidean kind");
}

std::vector<DimVector> positive_roots(const Graph& connected_dynkin) {
  GraphClassification cls = classify(connected_dynkin);
  if (cls.components.size() != 1) {
    throw InvariantError("positive_roots expects a connected graph");
  }
  if (!cls.components[0].dynkin) {
    throw InvariantError("positive_roots rejects non-Dynkin graphs: the root set is infinite");
  }

  // Saturate from the unit vectors: every positive root of a Dynkin graph is
  // reachable from a unit vector through roots by single coordinate
  // increments, so the closure is the full root set.
  QuadraticForm form = form_of(connected_dynkin);
  const size_t n = static_cast<size_t>(connected_dynkin.n);
  std::set<DimVector> seen;
  std::queue<DimVector> frontier;
  for (size_t i = 0; i < n; ++i) {
    DimVector unit(n, 0);
    unit[i] = 1;
    seen.insert(unit);
    frontier.push(unit);
  }
  while (!frontier.empty()) {
    DimVector x = frontier.front();
    frontier.pop();
    for (size_t i = 0; i < n; ++i) {
      ++x[i];
      if (!seen.count(x) && tits_value(form, x) == 1) {
        seen.insert(x);
        frontier.push(x);
      }
      --x[i];
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<Obstruction> radical_obstruction(const AlgebraSpec& spec) {
  require_valid(spec);
  Graph g = underlying_graph(separated_quiver(spec));
  DimVector d = dimension_vector(spec);
  GraphClassification cls = classify(g);
  for (const ComponentClass& comp : cls.components) {
    if (comp.dynkin) continue;
    DimVector gen = radical_generator(comp.cert.kind, comp.cert.n);
    DimVector e(comp.cert.embedding.size());
    for (size_t t = 0; t < e.size(); ++t) {
      e[t] = d[static_cast<size_t>(comp.cert.embedding[t])];
    }
    bool fits = true;
    for (size_t t = 0; t < e.size(); ++t) {
      if (gen[t] > e[t]) {
        fits = false;
        break;
      }
    }
    if (fits) return Obstruction{comp.cert, std::move(gen), std::move(e)};
  }
  return std::nullopt;
}

namespace {

// Cells of the dynamic program live in memory at once; absurd dimension
// vectors are rejected rather than thrashing.
constexpr uint64_t kMaxDpCells = 4'000'000;

// Number of multisets of the given roots summing exactly to target.
BigInt multiset_decompositions(const std::vector<DimVector>& roots, const DimVector& target) {
  const size_t n = target.size();
  uint64_t cells = 1;
  for (int64_t t : target) {
    uint64_t span = static_cast<uint64_t>(t) + 1;
    if (cells > kMaxDpCells / span) {
      throw BudgetError("class-count table would exceed " + std::to_string(kMaxDpCells) +
                        " cells");
    }
    cells *= span;
  }

  std::vector<uint64_t> stride(n);
  uint64_t acc = 1;
  for (size_t i = 0; i < n; ++i) {
    stride[i] = acc;
    acc *= static_cast<uint64_t>(target[i]) + 1;
  }

  std::vector<BigInt> ways(cells);
  ways[0] = 1;
  std::vector<int64_t> x(n, 0);
  for (const DimVector& root : roots) {
    bool usable = true;
    uint64_t offset = 0;
    for (size_t i = 0; i < n; ++i) {
      if (root[i] > target[i]) {
        usable = false;
        break;
      }
      offset += static_cast<uint64_t>(root[i]) * stride[i];
    }
    if (!usable) continue;
    std::fill(x.begin(), x.end(), 0);
    for (uint64_t idx = 0;; ++idx) {
      bool ge = true;
      for (size_t i = 0; i < n; ++i) {
        if (x[i] < root[i]) {
          ge = false;
          break;
        }
      }
      if (ge) ways[idx] += ways[idx - offset];
      // Odometer step.
      size_t pos = 0;
      while (pos < n && x[pos] == target[pos]) {
        x[pos] = 0;
        ++pos;
      }
      if (pos == n) break;
      ++x[pos];
    }
  }
  return ways[cells - 1];
}

}  // namespace

ClassCount count_classes(const AlgebraSpec& spec) {
  require_valid(spec);
  Graph g = underlying_graph(separated_quiver(spec));
  DimVector d = dimension_vector(spec);
  GraphClassification cls = classify(g);

  if (cls.all_dynkin()) {
    // Roots of a disjoint union live in single components, so the multiset
    // count factors over components.
    BigInt total = 1;
    for (const ComponentClass& comp : cls.components) {
      Graph sub;
      sub.n = static_cast<int>(comp.vertices.size());
      std::vector<int> to_local(static_cast<size_t>(g.n), -1);
      for (size_t i = 0; i < comp.vertices.size(); ++i) {
        to_local[static_cast<size_t>(comp.vertices[i])] = static_cast<int>(i);
      }
      for (auto [u, v] : g.edges) {
        int lu = to_local[static_cast<size_t>(u)], lv = to_local[static_cast<size_t>(v)];
        if (lu >= 0 && lv >= 0) sub.edges.emplace_back(lu, lv);
      }
      DimVector target(comp.vertices.size());
      for (size_t i = 0; i < comp.vertices.size(); ++i) {
        target[i] = d[static_cast<size_t>(comp.vertices[i])];
      }
      total *= multiset_decompositions(positive_roots(sub), target);
    }
    return {ClassCount::Kind::Finite, std::move(total)};
  }

  if (radical_obstruction(spec)) return {ClassCount::Kind::Infinite, 0};
  return {ClassCount::Kind::Unknown, 0};
}

}  // namespace rsz
