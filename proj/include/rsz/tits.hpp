#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "rsz/classify.hpp"
#include "rsz/quiver.hpp"

namespace rsz {

using BigInt = boost::multiprecision::cpp_int;

// q(x) = sum x_i^2 - sum over arrows (s,t) of x_s x_t.  Orientation is
// irrelevant; the arrow multiset may contain loops, each contributing
// x_i * x_i.
struct QuadraticForm {
  int64_t vertex_count = 0;
  std::vector<std::pair<int, int>> pairs;
};

QuadraticForm form_of(const Quiver& q);
QuadraticForm form_of(const Graph& g);

int64_t tits_value(const QuadraticForm& form, const DimVector& x);

// Positive generator of the radical of the form of euclidean_template(kind,n),
// in template vertex order:
//   Atilde:  (1,...,1)
//   Dtilde:  tips 1, internal path 2
//   E6tilde: (1,2,3,2,1, 2,1)
//   E7tilde: (1,2,3,4,3,2,1, 2)
//   E8tilde: (2,4,6,5,4,3,2,1, 3)
// Always evaluates to 0; max coordinate 6 (attained by E8tilde).
DimVector radical_generator(EuclideanKind kind, int n);

// All positive roots of a connected Dynkin graph: x > 0 with q(x) = 1.
// Every coordinate of a root is at most 6, so the result equals the
// exhaustive scan of the 6-box.  Rejects non-Dynkin graphs, whose root set
// is infinite.  Sorted lexicographically.
std::vector<DimVector> positive_roots(const Graph& connected_dynkin);

// Witness that the class semigroup is infinite: a Euclidean subgraph of the
// separated graph whose radical generator fits under the dimension vector.
struct Obstruction {
  EuclideanCertificate cert;
  DimVector generator;  // template order
  DimVector e;          // dimension vector pulled back through the embedding
};

// Scans the certificates produced by classify over the components of the
// separated graph, in component order; returns the first whose generator
// e' satisfies e' <= e coordinatewise, if any.
std::optional<Obstruction> radical_obstruction(const AlgebraSpec& spec);

struct ClassCount {
  enum class Kind { Finite, Infinite, Unknown } kind = Kind::Unknown;
  BigInt value;  // meaningful iff Finite
};

// Number of conjugacy classes of nilpotent left ideals.
//   - separated graph all Dynkin: the number of multisets of positive roots
//     summing to the dimension vector (exact, arbitrary precision);
//   - a radical obstruction exists: Infinite;
//   - otherwise: Unknown.
ClassCount count_classes(const AlgebraSpec& spec);

}  // namespace rsz
