#include <doctest.h>

#include <random>

#include "rsz/algebra.hpp"

using rsz::AlgebraSpec;

namespace {

AlgebraSpec make(int64_t k, std::vector<int64_t> r, std::vector<std::vector<uint8_t>> j) {
  return AlgebraSpec{k, std::move(r), std::move(j)};
}

AlgebraSpec random_spec(std::mt19937& rng, int64_t max_k = 4, int64_t max_r = 7) {
  std::uniform_int_distribution<int64_t> kd(1, max_k);
  int64_t k = kd(rng);
  std::uniform_int_distribution<int64_t> rd(1, max_r);
  std::uniform_int_distribution<int> bit(0, 9);
  AlgebraSpec spec;
  spec.k = k;
  for (int64_t i = 0; i < k; ++i) spec.r.push_back(rd(rng));
  for (int64_t i = 0; i < k; ++i) {
    std::vector<uint8_t> row;
    for (int64_t j = 0; j < k; ++j) row.push_back(bit(rng) < 4 ? 1 : 0);
    spec.j.push_back(std::move(row));
  }
  return spec;
}

}  // namespace

TEST_CASE("validate accepts well-formed specs") {
  CHECK(rsz::validate(make(1, {6}, {{1}})).ok());
  CHECK(rsz::validate(make(2, {1, 1}, {{0, 1}, {0, 0}})).ok());
  CHECK(rsz::validate(make(1, {1}, {{0}})).ok());  // semisimple
}

TEST_CASE("validate lists every violation") {
  auto report = rsz::validate(make(1, {0}, {{0}}));
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].code == "r_nonpositive");

  report = rsz::validate(make(0, {}, {}));
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations[0].code == "k_nonpositive");

  // Non-square pattern and short r at the same time.
  report = rsz::validate(make(2, {3}, {{1, 0}}));
  bool saw_r = false, saw_rows = false;
  for (const auto& v : report.violations) {
    saw_r = saw_r || v.code == "r_length";
    saw_rows = saw_rows || v.code == "j_rows";
  }
  CHECK(saw_r);
  CHECK(saw_rows);
}

TEST_CASE("a_vector follows the pattern rows") {
  CHECK(rsz::a_vector(make(1, {6}, {{1}})) == std::vector<int64_t>{6});
  CHECK(rsz::a_vector(make(2, {6, 7}, {{0, 1}, {0, 0}})) == std::vector<int64_t>{7, 0});
  CHECK(rsz::a_vector(make(2, {6, 6}, {{1, 1}, {1, 1}})) == std::vector<int64_t>{12, 12});
}

TEST_CASE("a_vector rejects invalid specs") {
  CHECK_THROWS_AS(rsz::a_vector(make(1, {0}, {{0}})), rsz::InvariantError);
}

TEST_CASE("scale multiplies block sizes and keeps the pattern") {
  AlgebraSpec scaled = rsz::scale(make(1, {1}, {{1}}), 6);
  CHECK(scaled.r == std::vector<int64_t>{6});
  CHECK(scaled.j == std::vector<std::vector<uint8_t>>{{1}});

  AlgebraSpec spec = make(2, {2, 3}, {{0, 1}, {1, 0}});
  AlgebraSpec doubled = rsz::scale(spec, 2);
  CHECK(doubled.r == std::vector<int64_t>{4, 6});
  CHECK(doubled.j == spec.j);

  AlgebraSpec same = rsz::scale(spec, 1);
  CHECK(same.r == spec.r);
  CHECK(same.j == spec.j);

  CHECK_THROWS_AS(rsz::scale(spec, 0), rsz::InvariantError);
}

TEST_CASE("parse round trip and canonical form") {
  AlgebraSpec spec = rsz::parse_spec(R"({"k":1,"r":[6],"j":[[1]]})");
  CHECK(spec.k == 1);
  CHECK(spec.r == std::vector<int64_t>{6});
  CHECK(spec.j_at(0, 0));

  // Field order is irrelevant on input; output is canonical.
  std::string shuffled = R"({"j":[[1]],"k":1,"r":[6]})";
  std::string canonical = rsz::serialize_spec(rsz::parse_spec(shuffled));
  CHECK(canonical == R"({"k":1,"r":[6],"j":[[1]]})");
  CHECK(rsz::serialize_spec(rsz::parse_spec(canonical)) == canonical);
}

TEST_CASE("parse distinguishes error kinds") {
  CHECK_THROWS_AS(rsz::parse_spec("{\"k\":1,"), rsz::ParseError);
  CHECK_THROWS_AS(rsz::parse_spec(R"({"k":2,"r":[6],"j":[[1]]})"), rsz::SchemaError);
  CHECK_THROWS_AS(rsz::parse_spec(R"({"k":1,"r":[6],"j":[[2]]})"), rsz::SchemaError);
  CHECK_THROWS_AS(rsz::parse_spec(R"({"k":1,"r":[6]})"), rsz::SchemaError);
  CHECK_THROWS_AS(rsz::parse_spec(R"({"k":1,"r":[6],"j":[[1]],"extra":0})"), rsz::SchemaError);
  CHECK_THROWS_AS(rsz::parse_spec(R"({"k":1,"r":[0],"j":[[0]]})"), rsz::InvariantError);

  try {
    rsz::parse_spec("not json");
  } catch (const rsz::ParseError& e) {
    CHECK(e.position > 0);
  }
}

TEST_CASE("a_vector commutes with scale") {
  std::mt19937 rng(20240811);
  for (int trial = 0; trial < 60; ++trial) {
    AlgebraSpec spec = random_spec(rng);
    for (int64_t m = 1; m <= 5; ++m) {
      std::vector<int64_t> lhs = rsz::a_vector(rsz::scale(spec, m));
      std::vector<int64_t> rhs = rsz::a_vector(spec);
      for (int64_t& v : rhs) v *= m;
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("a_i is bounded by the total dimension with equality on full rows") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    AlgebraSpec spec = random_spec(rng);
    std::vector<int64_t> a = rsz::a_vector(spec);
    int64_t n = 0;
    for (int64_t ri : spec.r) n += ri;
    for (int64_t i = 0; i < spec.k; ++i) {
      CHECK(a[static_cast<size_t>(i)] <= n);
      bool full_row = true;
      for (int64_t j = 0; j < spec.k; ++j) full_row = full_row && spec.j_at(i, j);
      CHECK((a[static_cast<size_t>(i)] == n) == full_row);
      bool empty_row = true;
      for (int64_t j = 0; j < spec.k; ++j) empty_row = empty_row && !spec.j_at(i, j);
      CHECK((a[static_cast<size_t>(i)] == 0) == empty_row);
    }
  }
}

TEST_CASE("serialize round trips random specs") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    AlgebraSpec spec = random_spec(rng);
    AlgebraSpec back = rsz::parse_spec(rsz::serialize_spec(spec));
    CHECK(back.k == spec.k);
    CHECK(back.r == spec.r);
    CHECK(back.j == spec.j);
  }
}
