#include <doctest.h>

#include <random>

#include "rsz/quiver.hpp"

using rsz::AlgebraSpec;
using rsz::Quiver;

namespace {

const AlgebraSpec kLoop{1, {6}, {{1}}};
const AlgebraSpec kChain{2, {6, 7}, {{0, 1}, {0, 0}}};
const AlgebraSpec kFull{2, {6, 6}, {{1, 1}, {1, 1}}};
const AlgebraSpec kSemisimple{2, {3, 4}, {{0, 0}, {0, 0}}};

}  // namespace

TEST_CASE("ordinary quiver mirrors the pattern") {
  Quiver q = rsz::ordinary_quiver(kLoop);
  CHECK(q.vertices.size() == 1);
  CHECK(q.arrows == std::vector<std::pair<int, int>>{{0, 0}});

  q = rsz::ordinary_quiver(kChain);
  CHECK(q.arrows == std::vector<std::pair<int, int>>{{0, 1}});

  q = rsz::ordinary_quiver(kFull);
  CHECK(q.arrows.size() == 4);
  int loops = 0;
  for (auto [s, t] : q.arrows) loops += s == t;
  CHECK(loops == 2);
}

TEST_CASE("separated quiver splits vertices and stays bipartite") {
  Quiver q = rsz::separated_quiver(kLoop);
  REQUIRE(q.vertices.size() == 2);
  CHECK(q.vertices[0] == rsz::Vertex{1, 0});
  CHECK(q.vertices[1] == rsz::Vertex{1, 1});
  CHECK(q.arrows == std::vector<std::pair<int, int>>{{0, 1}});  // underlying graph is A2

  q = rsz::separated_quiver(kFull);
  REQUIRE(q.vertices.size() == 4);
  CHECK(q.arrows.size() == 4);  // complete bipartite on 2+2

  q = rsz::separated_quiver(kSemisimple);
  CHECK(q.vertices.size() == 4);
  CHECK(q.arrows.empty());
}

TEST_CASE("separated arrows go from level 0 to level 1") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    int64_t k = 1 + trial % 5;
    AlgebraSpec spec;
    spec.k = k;
    spec.r.assign(static_cast<size_t>(k), 1 + trial % 3);
    int64_t expected_arrows = 0;
    for (int64_t i = 0; i < k; ++i) {
      std::vector<uint8_t> row;
      for (int64_t j = 0; j < k; ++j) {
        row.push_back(static_cast<uint8_t>(bit(rng)));
        expected_arrows += row.back();
      }
      spec.j.push_back(std::move(row));
    }
    Quiver q = rsz::separated_quiver(spec);
    CHECK(static_cast<int64_t>(q.arrows.size()) == expected_arrows);
    for (auto [s, t] : q.arrows) {
      CHECK(q.vertices[static_cast<size_t>(s)].level == 0);
      CHECK(q.vertices[static_cast<size_t>(t)].level == 1);
    }
  }
}

TEST_CASE("reverse flips arrows and is an involution") {
  Quiver a2;
  a2.vertices = {{1, -1}, {2, -1}};
  a2.arrows = {{0, 1}};
  Quiver rev = rsz::reverse(a2);
  CHECK(rev.arrows == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(rsz::reverse(rev).arrows == a2.arrows);

  Quiver empty;
  empty.vertices = {{1, -1}};
  CHECK(rsz::reverse(empty).arrows.empty());

  Quiver sep = rsz::separated_quiver(kFull);
  Quiver sep_rev = rsz::reverse(sep);
  for (auto [s, t] : sep_rev.arrows) {
    CHECK(sep_rev.vertices[static_cast<size_t>(s)].level == 1);
    CHECK(sep_rev.vertices[static_cast<size_t>(t)].level == 0);
  }
}

TEST_CASE("dimension vector is a followed by r") {
  CHECK(rsz::dimension_vector(kLoop) == rsz::DimVector{6, 6});
  CHECK(rsz::dimension_vector(kFull) == rsz::DimVector{12, 12, 6, 6});
  CHECK(rsz::dimension_vector(kChain) == rsz::DimVector{7, 0, 6, 7});
}

TEST_CASE("a zero dimension entry at level 0 means an isolated vertex") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> bit(0, 1);
  for (int trial = 0; trial < 40; ++trial) {
    int64_t k = 1 + trial % 4;
    AlgebraSpec spec;
    spec.k = k;
    spec.r.assign(static_cast<size_t>(k), 2);
    for (int64_t i = 0; i < k; ++i) {
      std::vector<uint8_t> row;
      for (int64_t j = 0; j < k; ++j) row.push_back(static_cast<uint8_t>(bit(rng)));
      spec.j.push_back(std::move(row));
    }
    rsz::DimVector d = rsz::dimension_vector(spec);
    auto adj = rsz::adjacency(rsz::underlying_graph(rsz::separated_quiver(spec)));
    for (int64_t i = 0; i < k; ++i) {
      bool isolated = adj[static_cast<size_t>(i)].empty();
      CHECK((d[static_cast<size_t>(i)] == 0) == isolated);
    }
  }
}

TEST_CASE("underlying graph keeps one edge per arrow") {
  rsz::Graph g = rsz::underlying_graph(rsz::separated_quiver(kFull));
  CHECK(g.n == 4);
  CHECK(g.edges.size() == 4);
  auto comps = rsz::connected_components(g);
  CHECK(comps.size() == 1);

  g = rsz::underlying_graph(rsz::separated_quiver(kSemisimple));
  CHECK(rsz::connected_components(g).size() == 4);
}
