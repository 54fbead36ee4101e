#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "rsz/tits.hpp"

using rsz::AlgebraSpec;
using rsz::DimVector;
using rsz::DynkinFamily;
using rsz::EuclideanKind;
using rsz::Graph;

TEST_CASE("form values on pinned inputs") {
  Graph point;
  point.n = 1;
  CHECK(rsz::tits_value(rsz::form_of(point), {1}) == 1);

  Graph a2;
  a2.n = 2;
  a2.edges = {{0, 1}};
  CHECK(rsz::tits_value(rsz::form_of(a2), {1, 1}) == 1);

  Graph c4 = rsz::euclidean_template(EuclideanKind::Atilde, 3);
  CHECK(rsz::tits_value(rsz::form_of(c4), {1, 1, 1, 1}) == 0);

  // E8tilde in its displayed layout: a row of eight carrying 2 4 6 5 4 3 2 1
  // with a 3 attached above the third entry.
  Graph e8row;
  e8row.n = 9;
  for (int i = 0; i + 1 < 8; ++i) e8row.edges.emplace_back(i, i + 1);
  e8row.edges.emplace_back(2, 8);
  CHECK(rsz::tits_value(rsz::form_of(e8row), {2, 4, 6, 5, 4, 3, 2, 1, 3}) == 0);

  CHECK_THROWS_AS(rsz::tits_value(rsz::form_of(a2), {1, 1, 1}), rsz::InvariantError);
}

TEST_CASE("unit vectors score one minus the loop count") {
  AlgebraSpec loop{1, {6}, {{1}}};
  rsz::QuadraticForm ordinary = rsz::form_of(rsz::ordinary_quiver(loop));
  CHECK(rsz::tits_value(ordinary, {1}) == 0);  // one loop

  rsz::QuadraticForm separated = rsz::form_of(rsz::separated_quiver(loop));
  CHECK(rsz::tits_value(separated, {1, 0}) == 1);
  CHECK(rsz::tits_value(separated, {0, 1}) == 1);
}

TEST_CASE("form value is orientation invariant") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> bit(0, 1);
  std::uniform_int_distribution<int64_t> val(0, 6);
  for (int trial = 0; trial < 40; ++trial) {
    int64_t k = 1 + trial % 4;
    AlgebraSpec spec;
    spec.k = k;
    spec.r.assign(static_cast<size_t>(k), 1);
    for (int64_t i = 0; i < k; ++i) {
      std::vector<uint8_t> row;
      for (int64_t j = 0; j < k; ++j) row.push_back(static_cast<uint8_t>(bit(rng)));
      spec.j.push_back(std::move(row));
    }
    rsz::Quiver q = rsz::separated_quiver(spec);
    rsz::QuadraticForm fwd = rsz::form_of(q);
    rsz::QuadraticForm bwd = rsz::form_of(rsz::reverse(q));
    DimVector x(q.vertices.size());
    for (auto& xi : x) xi = val(rng);
    CHECK(rsz::tits_value(fwd, x) == rsz::tits_value(bwd, x));
  }
}

TEST_CASE("radical generators annihilate their forms") {
  CHECK(rsz::radical_generator(EuclideanKind::Atilde, 3) == DimVector{1, 1, 1, 1});
  CHECK(rsz::radical_generator(EuclideanKind::Dtilde, 4) == DimVector{1, 1, 2, 1, 1});

  DimVector e8 = rsz::radical_generator(EuclideanKind::E8tilde, 8);
  CHECK(*std::max_element(e8.begin(), e8.end()) == 6);
  CHECK(e8[2] == 6);  // the branch vertex of the template carries the 6

  auto check_kind = [](EuclideanKind kind, int n) {
    Graph tmpl = rsz::euclidean_template(kind, n);
    DimVector gen = rsz::radical_generator(kind, n);
    REQUIRE(static_cast<int>(gen.size()) == tmpl.n);
    CHECK(rsz::tits_value(rsz::form_of(tmpl), gen) == 0);
    for (int64_t coord : gen) {
      CHECK(coord >= 1);
      CHECK(coord <= 6);
    }
    // The whole line through the generator is annihilated.
    for (int64_t t = 0; t <= 5; ++t) {
      DimVector scaled = gen;
      for (int64_t& v : scaled) v *= t;
      CHECK(rsz::tits_value(rsz::form_of(tmpl), scaled) == 0);
    }
  };
  for (int n = 2; n <= 9; ++n) check_kind(EuclideanKind::Atilde, n);
  for (int n = 4; n <= 9; ++n) check_kind(EuclideanKind::Dtilde, n);
  check_kind(EuclideanKind::E6tilde, 6);
  check_kind(EuclideanKind::E7tilde, 7);
  check_kind(EuclideanKind::E8tilde, 8);

  CHECK_THROWS_AS(rsz::radical_generator(EuclideanKind::Atilde, 1), rsz::InvariantError);
  CHECK_THROWS_AS(rsz::radical_generator(EuclideanKind::Dtilde, 3), rsz::InvariantError);
}

TEST_CASE("positive roots of A2") {
  Graph a2 = rsz::dynkin_template({DynkinFamily::A, 2});
  auto roots = rsz::positive_roots(a2);
  CHECK(roots == std::vector<DimVector>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("root enumeration matches the exhaustive box scan") {
  for (int n = 1; n <= 6; ++n) {
    Graph g = rsz::dynkin_template({DynkinFamily::A, n});
    auto roots = rsz::positive_roots(g);
    CHECK(static_cast<int>(roots.size()) == n * (n + 1) / 2);
    CHECK(roots == oracles::box_roots(g, 7));
  }
  Graph d5 = rsz::dynkin_template({DynkinFamily::D, 5});
  CHECK(rsz::positive_roots(d5) == oracles::box_roots(d5, 7));
  CHECK(rsz::positive_roots(d5).size() == 20);

  Graph e6 = rsz::dynkin_template({DynkinFamily::E, 6});
  CHECK(rsz::positive_roots(e6).size() == 36);
  CHECK(rsz::positive_roots(e6) == oracles::box_roots(e6, 7));
}

TEST_CASE("root enumeration rejects non-Dynkin and disconnected graphs") {
  CHECK_THROWS_AS(rsz::positive_roots(rsz::euclidean_template(EuclideanKind::Atilde, 3)),
                  rsz::InvariantError);
  Graph two_points;
  two_points.n = 2;
  CHECK_THROWS_AS(rsz::positive_roots(two_points), rsz::InvariantError);
}

TEST_CASE("positive definiteness witness on Dynkin graphs up to eight vertices") {
  for (auto type : {rsz::DynkinType{DynkinFamily::A, 4}, rsz::DynkinType{DynkinFamily::D, 4},
                    rsz::DynkinType{DynkinFamily::E, 6}, rsz::DynkinType{DynkinFamily::A, 8},
                    rsz::DynkinType{DynkinFamily::D, 8}, rsz::DynkinType{DynkinFamily::E, 8}}) {
    Graph g = rsz::dynkin_template(type);
    CHECK(oracles::box_min(g, 6) == 1);
  }
}

TEST_CASE("the largest root of E8 fills the box") {
  auto roots = rsz::positive_roots(rsz::dynkin_template({DynkinFamily::E, 8}));
  CHECK(roots.size() == 120);
  int64_t top = 0;
  for (const DimVector& r : roots) {
    top = std::max(top, *std::max_element(r.begin(), r.end()));
  }
  CHECK(top == 6);
}

TEST_CASE("radical obstruction on pinned specs") {
  AlgebraSpec big_cycle{2, {6, 6}, {{1, 1}, {1, 1}}};
  auto obs = rsz::radical_obstruction(big_cycle);
  REQUIRE(obs.has_value());
  CHECK(obs->cert.kind == EuclideanKind::Atilde);
  CHECK(obs->generator == DimVector{1, 1, 1, 1});
  for (size_t t = 0; t < obs->e.size(); ++t) CHECK(obs->e[t] >= obs->generator[t]);

  AlgebraSpec loop{1, {6}, {{1}}};
  CHECK_FALSE(rsz::radical_obstruction(loop).has_value());

  AlgebraSpec small_cycle{2, {1, 1}, {{1, 1}, {1, 1}}};
  obs = rsz::radical_obstruction(small_cycle);
  REQUIRE(obs.has_value());
  CHECK(obs->e == DimVector{2, 1, 2, 1});  // cycle order (1,0),(1,1),(2,0),(2,1)
}

TEST_CASE("no obstruction when the generator does not fit") {
  // Star with a level-1 center of weight 1: the Dtilde generator needs 2.
  AlgebraSpec spec{5,
                   {2, 2, 2, 2, 1},
                   {{0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 1},
                    {0, 0, 0, 0, 0}}};
  CHECK_FALSE(rsz::radical_obstruction(spec).has_value());
  rsz::ClassCount count = rsz::count_classes(spec);
  CHECK(count.kind == rsz::ClassCount::Kind::Unknown);
}

TEST_CASE("class counts on pinned specs") {
  for (int64_t n = 1; n <= 4; ++n) {
    rsz::ClassCount count = rsz::count_classes(AlgebraSpec{1, {n}, {{1}}});
    REQUIRE(count.kind == rsz::ClassCount::Kind::Finite);
    CHECK(count.value == n + 1);
  }

  rsz::ClassCount two = rsz::count_classes(AlgebraSpec{2, {1, 1}, {{0, 1}, {0, 0}}});
  REQUIRE(two.kind == rsz::ClassCount::Kind::Finite);
  CHECK(two.value == 2);

  CHECK(rsz::count_classes(AlgebraSpec{2, {6, 6}, {{1, 1}, {1, 1}}}).kind ==
        rsz::ClassCount::Kind::Infinite);

  // Semisimple: only the zero ideal.
  rsz::ClassCount semi = rsz::count_classes(AlgebraSpec{2, {3, 4}, {{0, 0}, {0, 0}}});
  REQUIRE(semi.kind == rsz::ClassCount::Kind::Finite);
  CHECK(semi.value == 1);
}

TEST_CASE("class count rejects dimension boxes beyond the cell budget") {
  CHECK_THROWS_AS(rsz::count_classes(AlgebraSpec{1, {1000000}, {{1}}}), rsz::BudgetError);
}

TEST_CASE("obstructions survive componentwise enlargement") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int64_t> rd(1, 5);
  for (int trial = 0; trial < 30; ++trial) {
    AlgebraSpec spec{2, {rd(rng), rd(rng)}, {{1, 1}, {1, 1}}};
    REQUIRE(rsz::radical_obstruction(spec).has_value());
    AlgebraSpec bigger = spec;
    bigger.r[static_cast<size_t>(trial % 2)] += rd(rng);
    CHECK(rsz::radical_obstruction(bigger).has_value());
  }
}
