#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "rsz/algebra.hpp"
#include "rsz/tits.hpp"

namespace rsz {

// Arithmetic tables for GF(q), q in {2,3,4,5}.  GF(4) is GF(2)[x]/(x^2+x+1)
// with elements encoded as bit pairs b1*x + b0.
class GF {
 public:
  explicit GF(int q);
  int q() const { return q_; }
  uint8_t add(uint8_t a, uint8_t b) const { return add_[a][b]; }
  uint8_t sub(uint8_t a, uint8_t b) const { return add_[a][neg_[b]]; }
  uint8_t mul(uint8_t a, uint8_t b) const { return mul_[a][b]; }
  uint8_t neg(uint8_t a) const { return neg_[a]; }
  uint8_t inv(uint8_t a) const;
  // Smallest generator of the multiplicative group (1 when q = 2).
  uint8_t primitive_unit() const;

 private:
  int q_;
  uint8_t add_[5][5];
  uint8_t mul_[5][5];
  uint8_t neg_[5];
  uint8_t inv_[5];
};

// Dense row-major matrix over GF(q).
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<uint8_t> v;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), v(static_cast<size_t>(r) * static_cast<size_t>(c), 0) {}
  uint8_t& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
  uint8_t at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
  static Mat identity(int n);
  friend bool operator==(const Mat&, const Mat&) = default;
};

Mat mat_mul(const GF& f, const Mat& a, const Mat& b);

// Reduced row echelon form with zero rows dropped: the canonical
// representative of the row space.
Mat rref(const GF& f, const Mat& m);

struct Budget {
  uint64_t max_states = 1'000'000;
};

// An algebra pinned to a concrete finite field.  The space attached to
// block row i has a_i coordinates: the concatenation of the width-r_j
// column blocks over the nonzero pattern entries j of row i, in increasing
// j order.
struct FFInstance {
  AlgebraSpec spec;
  int q = 2;
  std::vector<int64_t> a;
  std::vector<std::vector<int64_t>> row_blocks;  // per i: sorted nonzero js
  // per i: column offset of each entry of row_blocks[i] inside the a_i coords
  std::vector<std::vector<int64_t>> col_offset;
};

FFInstance make_instance(const AlgebraSpec& spec, int q);

// One subspace V_i (rows of an rref basis, cols = a_i) per block row.
struct SubspaceTuple {
  std::vector<Mat> spaces;
};

std::string tuple_key(const SubspaceTuple& t);

// Number of m-dimensional subspaces of GF(q)^a.
BigInt gaussian_binomial(int q, int64_t a, int64_t m);
// Number of all subspaces of GF(q)^a.
BigInt subspace_total(int q, int64_t a);
// Closed-form number of nilpotent left ideals: product of subspace totals.
BigInt ideal_count(const FFInstance& inst);

// Streams every subspace tuple exactly once, in a fixed order (dimensions
// ascending, pivot columns lexicographic, free entries in odometer order).
// Returns the count, which is checked against the closed form.
uint64_t enumerate_ideals(const FFInstance& inst,
                          const std::function<void(const SubspaceTuple&)>& visit,
                          const Budget& budget = {});

enum class GeneratorSet { Elementary, Full };

// Matrices generating GL_r(GF(q)) as a monoid (finite group, so plain BFS
// without explicit inverses reaches full orbits).  Elementary: transvections
// with coefficient 1 plus one leading diagonal scaling by a primitive unit
// for q > 2.  Full: transvections with every nonzero coefficient plus every
// nontrivial leading scaling.
std::vector<Mat> gl_generators(const GF& f, int r, GeneratorSet set);

// Right action of u in GL_{r_j} on the tuple: every V_i whose coordinates
// contain block j transforms by right multiplication on that column block,
// then is re-canonicalized.
SubspaceTuple act_block(const FFInstance& inst, const SubspaceTuple& t, int64_t block_j,
                        const Mat& u);

// Orbits of subspace tuples under the product of the block GL groups acting
// on the right, by breadth-first search over canonical forms.
uint64_t orbit_count_subspaces(const FFInstance& inst, const Budget& budget = {},
                               GeneratorSet set = GeneratorSet::Elementary);

// Orbits of raw block matrices under simultaneous left row operations (per
// block row) and right column operations (per block column), by exhaustive
// enumeration and breadth-first search.  Agrees with orbit_count_subspaces
// on every instance.
uint64_t orbit_count_matrices(const FFInstance& inst, const Budget& budget = {},
                              GeneratorSet set = GeneratorSet::Elementary);

struct GrowthRow {
  int q = 0;
  BigInt ideals;
  uint64_t orbits = 0;
  std::string error;  // nonempty iff this field size exceeded the budget
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  bool strictly_increasing = false;  // all rows ran and orbit counts strictly grow
};

// Diagnostic only: strictly growing orbit counts over increasing fields
// suggest infinitely many orbits over the algebraic closure, but are never
// used as a certificate.
GrowthTable growth_probe(const AlgebraSpec& spec, const std::vector<int>& qs,
                         const Budget& budget = {});

}  // namespace rsz
