#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rsz/errors.hpp"

namespace rsz {

// Block data of a radical-square-zero algebra with a distributive ideal
// lattice: A/J(A) is a sum of k matrix blocks of sizes r[i], and j[i][j]
// records whether the radical component between block i and block j is
// nonzero.  Multiplicities above 1 are not representable, so distributivity
// is built into the type.
struct AlgebraSpec {
  int64_t k = 0;
  std::vector<int64_t> r;               // k block sizes, each >= 1
  std::vector<std::vector<uint8_t>> j;  // k x k pattern, entries 0 or 1

  bool j_at(int64_t row, int64_t col) const {
    return j[static_cast<size_t>(row)][static_cast<size_t>(col)] != 0;
  }
};

struct Violation {
  std::string code;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Total check; never throws.  Lists every violated invariant.
ValidationReport validate(const AlgebraSpec& spec);

// Throws InvariantError with the full violation list.
void require_valid(const AlgebraSpec& spec);

// a[i] = sum of r[j] over the nonzero entries of row i of the pattern.
std::vector<int64_t> a_vector(const AlgebraSpec& spec);

// Multiplies every block size by m, keeping the pattern.  Models passing
// from the algebra to its m x m matrix algebra.
AlgebraSpec scale(const AlgebraSpec& spec, int64_t m);

// JSON {"k":..,"r":[..],"j":[[0|1,..],..]}.  Throws ParseError on bad
// syntax, SchemaError on shape mismatches, InvariantError on invalid specs.
AlgebraSpec parse_spec(const std::string& text);

// Canonical form: keys in the order k, r, j; blocks in input order.
std::string serialize_spec(const AlgebraSpec& spec);

}  // namespace rsz
