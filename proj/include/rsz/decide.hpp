#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rsz/tits.hpp"

namespace rsz {

enum class Status { Finite, Infinite, Unknown };
enum class RepType { Finite, Infinite };

// The separated graph decomposes into the named Dynkin diagrams; the class
// semigroup is finite for every choice of block sizes.
struct DynkinDecomposition {
  std::vector<DynkinType> components;
};

// Basic algebra, acyclic separated graph, every a_i at most 3.
struct BasicCriterion {
  int64_t max_a = 0;
};

// Basic algebra failing the criterion: either some a_i exceeds 3 or the
// separated graph has a cycle.
struct BasicViolation {
  std::optional<int64_t> a_index;  // 0-based block index, set iff an a-bound fails
  int64_t a_value = 0;
  std::vector<int> cycle;  // set iff the graph has a cycle
};

struct RadicalObstructionCert {
  Obstruction obstruction;
};

// No rule applied; one line per ladder rule explaining why it failed.
struct NoApplicableTheorem {
  std::vector<std::string> rule_failures;
};

using Certificate = std::variant<DynkinDecomposition, BasicCriterion, BasicViolation,
                                 RadicalObstructionCert, NoApplicableTheorem>;

struct Verdict {
  Status status = Status::Unknown;
  RepType rep_type = RepType::Infinite;
  Certificate certificate = NoApplicableTheorem{};
  std::vector<std::string> citations;
};

// Decision ladder, first applicable rule wins:
//   (1) separated graph all Dynkin            -> Finite  (DynkinDecomposition)
//   (2) basic spec (all r_i = 1): acyclic and max a_i <= 3 -> Finite
//       (BasicCriterion), otherwise Infinite  (BasicViolation)
//   (3) radical obstruction exists            -> Infinite (RadicalObstructionCert)
//   (4) otherwise                             -> Unknown  (NoApplicableTheorem)
// rep_type is Finite exactly when the separated graph is all Dynkin, and is
// always reported.
Verdict decide(const AlgebraSpec& spec);

// decide(scale(spec, m)).  For m >= 6 the status is never Unknown.
Verdict decide_scaled(const AlgebraSpec& spec, int64_t m);

// Independent re-check of a verdict's certificate against the algebra:
// re-classifies, re-tests bounds, re-verifies embeddings and coordinate
// comparisons.  Intended as the machine check that every emitted verdict
// must survive.
bool verify(const AlgebraSpec& spec, const Verdict& verdict);

std::string to_string(Status s);
std::string to_string(RepType t);

}  // namespace rsz
