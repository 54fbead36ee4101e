#include "rsz/ff_oracle.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>
#include <unordered_set>

namespace rsz {

GF::GF(int q) : q_(q) {
  if (q != 2 && q != 3 && q != 4 && q != 5) {
    throw InvariantError("supported field sizes are 2, 3, 4, 5; got " + std::to_string(q));
  }
  std::memset(add_, 0, sizeof add_);
  std::memset(mul_, 0, sizeof mul_);
  if (q == 4) {
    // Bit-pair encoding; multiplication reduces by x^2 = x + 1.
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        add_[a][b] = static_cast<uint8_t>(a ^ b);
        int a0 = a & 1, a1 = a >> 1, b0 = b & 1, b1 = b >> 1;
        int c0 = a0 * b0, c1 = a1 * b0 + a0 * b1, c2 = a1 * b1;
        mul_[a][b] = static_cast<uint8_t>(((c1 + c2) % 2) << 1 | ((c0 + c2) % 2));
      }
    }
    for (int a = 0; a < 4; ++a) neg_[a] = static_cast<uint8_t>(a);
  } else {
    for (int a = 0; a < q; ++a) {
      for (int b = 0; b < q; ++b) {
        add_[a][b] = static_cast<uint8_t>((a + b) % q);
        mul_[a][b] = static_cast<uint8_t>((a * b) % q);
      }
      neg_[a] = static_cast<uint8_t>((q - a) % q);
    }
  }
  inv_[0] = 0;
  for (int a = 1; a < q; ++a) {
    for (int b = 1; b < q; ++b) {
      if (mul_[a][b] == 1) inv_[a] = static_cast<uint8_t>(b);
    }
  }
}

uint8_t GF::inv(uint8_t a) const {
  if (a == 0) throw InvariantError("zero is not invertible");
  return inv_[a];
}

uint8_t GF::primitive_unit() const {
  if (q_ == 2) return 1;
  for (uint8_t g = 2; g < q_; ++g) {
    int order = 1;
    uint8_t x = g;
    while (x != 1) {
      x = mul_[x][g];
      ++order;
    }
    if (order == q_ - 1) return g;
  }
  throw std::logic_error("no primitive unit found");
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const GF& f, const Mat& a, const Mat& b) {
  if (a.cols != b.rows) throw InvariantError("matrix shape mismatch");
  Mat c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int t = 0; t < a.cols; ++t) {
      uint8_t ait = a.at(i, t);
      if (ait == 0) continue;
      for (int j = 0; j < b.cols; ++j) {
        c.at(i, j) = f.add(c.at(i, j), f.mul(ait, b.at(t, j)));
      }
    }
  }
  return c;
}

Mat rref(const GF& f, const Mat& m) {
  Mat w = m;
  int pivot_row = 0;
  for (int col = 0; col < w.cols && pivot_row < w.rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < w.rows; ++r) {
      if (w.at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    for (int c = 0; c < w.cols; ++c) std::swap(w.at(sel, c), w.at(pivot_row, c));
    uint8_t scale = f.inv(w.at(pivot_row, col));
    for (int c = 0; c < w.cols; ++c) w.at(pivot_row, c) = f.mul(w.at(pivot_row, c), scale);
    for (int r = 0; r < w.rows; ++r) {
      if (r == pivot_row || w.at(r, col) == 0) continue;
      uint8_t factor = w.at(r, col);
      for (int c = 0; c < w.cols; ++c) {
        w.at(r, c) = f.sub(w.at(r, c), f.mul(factor, w.at(pivot_row, c)));
      }
    }
    ++pivot_row;
  }
  Mat out(pivot_row, w.cols);
  for (int r = 0; r < pivot_row; ++r) {
    for (int c = 0; c < w.cols; ++c) out.at(r, c) = w.at(r, c);
  }
  return out;
}

FFInstance make_instance(const AlgebraSpec& spec, int q) {
  require_valid(spec);
  GF f(q);  // validates q
  FFInstance inst;
  inst.spec = spec;
  inst.q = q;
  inst.a = a_vector(spec);
  inst.row_blocks.resize(static_cast<size_t>(spec.k));
  inst.col_offset.resize(static_cast<size_t>(spec.k));
  for (int64_t i = 0; i < spec.k; ++i) {
    int64_t off = 0;
    for (int64_t j = 0; j < spec.k; ++j) {
      if (spec.j_at(i, j)) {
        inst.row_blocks[static_cast<size_t>(i)].push_back(j);
        inst.col_offset[static_cast<size_t>(i)].push_back(off);
        off += spec.r[static_cast<size_t>(j)];
      }
    }
  }
  return inst;
}

std::string tuple_key(const SubspaceTuple& t) {
  std::string key;
  for (const Mat& m : t.spaces) {
    key.push_back(static_cast<char>(m.rows));
    key.append(m.v.begin(), m.v.end());
    key.push_back('\xff');
  }
  return key;
}

BigInt gaussian_binomial(int q, int64_t a, int64_t m) {
  if (m < 0 || m > a) return 0;
  BigInt num = 1, den = 1;
  BigInt qq = q;
  for (int64_t i = 1; i <= m; ++i) {
    num *= boost::multiprecision::pow(qq, static_cast<unsigned>(a - m + i)) - 1;
    den *= boost::multiprecision::pow(qq, static_cast<unsigned>(i)) - 1;
  }
  return num / den;
}

BigInt subspace_total(int q, int64_t a) {
  BigInt total = 0;
  for (int64_t m = 0; m <= a; ++m) total += gaussian_binomial(q, a, m);
  return total;
}

BigInt ideal_count(const FFInstance& inst) {
  BigInt total = 1;
  for (int64_t ai : inst.a) total *= subspace_total(inst.q, ai);
  return total;
}

namespace {

// All subspaces of GF(q)^a as rref bases: dimension ascending, pivot column
// sets in lexicographic order, free entries in odometer order.
std::vector<Mat> all_subspaces(const GF& f, int64_t a) {
  const int n = static_cast<int>(a);
  std::vector<Mat> out;
  for (int m = 0; m <= n; ++m) {
    std::vector<int> pivots(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) pivots[static_cast<size_t>(i)] = i;
    while (true) {
      std::vector<bool> is_pivot(static_cast<size_t>(n), false);
      for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
      std::vector<std::pair<int, int>> free_cells;
      for (int t = 0; t < m; ++t) {
        for (int c = pivots[static_cast<size_t>(t)] + 1; c < n; ++c) {
          if (!is_pivot[static_cast<size_t>(c)]) free_cells.emplace_back(t, c);
        }
      }
      std::vector<uint8_t> vals(free_cells.size(), 0);
      while (true) {
        Mat mat(m, n);
        for (int t = 0; t < m; ++t) mat.at(t, pivots[static_cast<size_t>(t)]) = 1;
        for (size_t idx = 0; idx < free_cells.size(); ++idx) {
          mat.at(free_cells[idx].first, free_cells[idx].second) = vals[idx];
        }
        out.push_back(std::move(mat));
        size_t pos = 0;
        while (pos < vals.size() && vals[pos] == f.q() - 1) vals[pos++] = 0;
        if (pos == vals.size()) break;
        ++vals[pos];
      }
      // Next pivot combination in lexicographic order.
      int i = m - 1;
      while (i >= 0 && pivots[static_cast<size_t>(i)] == n - m + i) --i;
      if (i < 0) break;
      ++pivots[static_cast<size_t>(i)];
      for (int t = i + 1; t < m; ++t) {
        pivots[static_cast<size_t>(t)] = pivots[static_cast<size_t>(t - 1)] + 1;
      }
    }
  }
  return out;
}

void check_state_budget(const BigInt& states, const Budget& budget, const char* what) {
  if (states > BigInt(budget.max_states)) {
    throw BudgetError(std::string(what) + " needs " + states.str() +
                      " states, budget is " + std::to_string(budget.max_states));
  }
}

}  // namespace

uint64_t enumerate_ideals(const FFInstance& inst,
                          const std::function<void(const SubspaceTuple&)>& visit,
                          const Budget& budget) {
  check_state_budget(ideal_count(inst), budget, "subspace tuple enumeration");
  GF f(inst.q);
  std::vector<std::vector<Mat>> lists;
  for (int64_t ai : inst.a) lists.push_back(all_subspaces(f, ai));

  const size_t k = lists.size();
  std::vector<size_t> idx(k, 0);
  uint64_t count = 0;
  while (true) {
    SubspaceTuple t;
    for (size_t i = 0; i < k; ++i) t.spaces.push_back(lists[i][idx[i]]);
    if (visit) visit(t);
    ++count;
    size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == lists[pos - 1].size()) idx[--pos] = 0;
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  if (BigInt(count) != ideal_count(inst)) {
    throw std::logic_error("ideal enumeration disagrees with the closed-form count");
  }
  return count;
}

std::vector<Mat> gl_generators(const GF& f, int r, GeneratorSet set) {
  std::vector<Mat> gens;
  if (r <= 0) return gens;
  if (set == GeneratorSet::Elementary) {
    for (int s = 0; s < r; ++s) {
      for (int t = 0; t < r; ++t) {
        if (s == t) continue;
        Mat m = Mat::identity(r);
        m.at(s, t) = 1;
        gens.push_back(std::move(m));
      }
    }
    if (f.q() > 2) {
      Mat m = Mat::identity(r);
      m.at(0, 0) = f.primitive_unit();
      gens.push_back(std::move(m));
    }
  } else {
    for (int s = 0; s < r; ++s) {
      for (int t = 0; t < r; ++t) {
        if (s == t) continue;
        for (int lam = 1; lam < f.q(); ++lam) {
          Mat m = Mat::identity(r);
          m.at(s, t) = static_cast<uint8_t>(lam);
          gens.push_back(std::move(m));
        }
      }
    }
    for (int beta = 2; beta < f.q(); ++beta) {
      Mat m = Mat::identity(r);
      m.at(0, 0) = static_cast<uint8_t>(beta);
      gens.push_back(std::move(m));
    }
  }
  return gens;
}

SubspaceTuple act_block(const FFInstance& inst, const SubspaceTuple& t, int64_t block_j,
                        const Mat& u) {
  GF f(inst.q);
  const int rj = static_cast<int>(inst.spec.r[static_cast<size_t>(block_j)]);
  if (u.rows != rj || u.cols != rj) throw InvariantError("generator shape mismatch");
  SubspaceTuple out = t;
  for (size_t i = 0; i < inst.row_blocks.size(); ++i) {
    for (size_t b = 0; b < inst.row_blocks[i].size(); ++b) {
      if (inst.row_blocks[i][b] != block_j) continue;
      const int off = static_cast<int>(inst.col_offset[i][b]);
      Mat& m = out.spaces[i];
      Mat updated = m;
      for (int row = 0; row < m.rows; ++row) {
        for (int c = 0; c < rj; ++c) {
          uint8_t acc = 0;
          for (int s = 0; s < rj; ++s) {
            acc = f.add(acc, f.mul(m.at(row, off + s), u.at(s, c)));
          }
          updated.at(row, off + c) = acc;
        }
      }
      m = rref(f, updated);
    }
  }
  return out;
}

uint64_t orbit_count_subspaces(const FFInstance& inst, const Budget& budget, GeneratorSet set) {
  check_state_budget(ideal_count(inst), budget, "subspace orbit search");
  GF f(inst.q);
  std::vector<std::vector<Mat>> lists;
  for (int64_t ai : inst.a) lists.push_back(all_subspaces(f, ai));

  std::vector<std::pair<int64_t, Mat>> gens;  // (block j, generator)
  for (int64_t j = 0; j < inst.spec.k; ++j) {
    for (Mat& g : gl_generators(f, static_cast<int>(inst.spec.r[static_cast<size_t>(j)]), set)) {
      gens.emplace_back(j, std::move(g));
    }
  }

  std::unordered_set<std::string> visited;
  uint64_t orbits = 0;
  const size_t k = lists.size();
  std::vector<size_t> idx(k, 0);
  while (true) {
    SubspaceTuple start;
    for (size_t i = 0; i < k; ++i) start.spaces.push_back(lists[i][idx[i]]);
    if (visited.insert(tuple_key(start)).second) {
      ++orbits;
      std::vector<SubspaceTuple> stack{std::move(start)};
      while (!stack.empty()) {
        SubspaceTuple cur = std::move(stack.back());
        stack.pop_back();
        for (const auto& [j, g] : gens) {
          SubspaceTuple nxt = act_block(inst, cur, j, g);
          if (visited.insert(tuple_key(nxt)).second) stack.push_back(std::move(nxt));
        }
      }
    }
    size_t pos = k;
    while (pos > 0 && idx[pos - 1] + 1 == lists[pos - 1].size()) idx[--pos] = 0;
    if (pos == 0) break;
    ++idx[pos - 1];
  }
  return orbits;
}

namespace {

// Layout of the flattened block matrix state for the raw matrix orbit count.
struct MatrixLayout {
  int64_t total = 0;                             // entry count
  std::vector<std::vector<int64_t>> offset;      // k x k, -1 where no block
};

MatrixLayout matrix_layout(const FFInstance& inst) {
  MatrixLayout lay;
  lay.offset.assign(static_cast<size_t>(inst.spec.k),
                    std::vector<int64_t>(static_cast<size_t>(inst.spec.k), -1));
  for (int64_t i = 0; i < inst.spec.k; ++i) {
    for (int64_t j = 0; j < inst.spec.k; ++j) {
      if (!inst.spec.j_at(i, j)) continue;
      lay.offset[static_cast<size_t>(i)][static_cast<size_t>(j)] = lay.total;
      lay.total += inst.a[static_cast<size_t>(i)] * inst.spec.r[static_cast<size_t>(j)];
    }
  }
  return lay;
}

}  // namespace

uint64_t orbit_count_matrices(const FFInstance& inst, const Budget& budget, GeneratorSet set) {
  GF f(inst.q);
  MatrixLayout lay = matrix_layout(inst);
  BigInt states = boost::multiprecision::pow(BigInt(inst.q), static_cast<unsigned>(lay.total));
  check_state_budget(states, budget, "matrix orbit search");
  const uint64_t nstates = states.convert_to<uint64_t>();
  const size_t T = static_cast<size_t>(lay.total);

  std::vector<uint64_t> pow(T + 1, 1);
  for (size_t p = 1; p <= T; ++p) pow[p] = pow[p - 1] * static_cast<uint64_t>(inst.q);
  auto encode = [&](const std::vector<uint8_t>& st) {
    uint64_t code = 0;
    for (size_t p = 0; p < T; ++p) code += st[p] * pow[p];
    return code;
  };

  // Left generators act on a block row, right generators on a block column.
  struct Action {
    bool left;
    int64_t index;  // block row i or block column j
    Mat g;
  };
  std::vector<Action> actions;
  for (int64_t i = 0; i < inst.spec.k; ++i) {
    if (inst.row_blocks[static_cast<size_t>(i)].empty()) continue;
    for (Mat& g : gl_generators(f, static_cast<int>(inst.a[static_cast<size_t>(i)]), set)) {
      actions.push_back({true, i, std::move(g)});
    }
  }
  for (int64_t j = 0; j < inst.spec.k; ++j) {
    bool used = false;
    for (int64_t i = 0; i < inst.spec.k; ++i) used = used || inst.spec.j_at(i, j);
    if (!used) continue;
    for (Mat& g : gl_generators(f, static_cast<int>(inst.spec.r[static_cast<size_t>(j)]), set)) {
      actions.push_back({false, j, std::move(g)});
    }
  }

  auto apply = [&](const std::vector<uint8_t>& st, const Action& act) {
    std::vector<uint8_t> out = st;
    if (act.left) {
      const int64_t i = act.index;
      const int ai = static_cast<int>(inst.a[static_cast<size_t>(i)]);
      for (int64_t j : inst.row_blocks[static_cast<size_t>(i)]) {
        const int rj = static_cast<int>(inst.spec.r[static_cast<size_t>(j)]);
        const int64_t off = lay.offset[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int row = 0; row < ai; ++row) {
          for (int c = 0; c < rj; ++c) {
            uint8_t acc = 0;
            for (int t = 0; t < ai; ++t) {
              acc = f.add(acc, f.mul(act.g.at(row, t),
                                     st[static_cast<size_t>(off + t * rj + c)]));
            }
            out[static_cast<size_t>(off + row * rj + c)] = acc;
          }
        }
      }
    } else {
      const int64_t j = act.index;
      const int rj = static_cast<int>(inst.spec.r[static_cast<size_t>(j)]);
      for (int64_t i = 0; i < inst.spec.k; ++i) {
        if (!inst.spec.j_at(i, j)) continue;
        const int ai = static_cast<int>(inst.a[static_cast<size_t>(i)]);
        const int64_t off = lay.offset[static_cast<size_t>(i)][static_cast<size_t>(j)];
        for (int row = 0; row < ai; ++row) {
          for (int c = 0; c < rj; ++c) {
            uint8_t acc = 0;
            for (int t = 0; t < rj; ++t) {
              acc = f.add(acc, f.mul(st[static_cast<size_t>(off + row * rj + t)],
                                     act.g.at(t, c)));
            }
            out[static_cast<size_t>(off + row * rj + c)] = acc;
          }
        }
      }
    }
    return out;
  };

  auto decode = [&](uint64_t code) {
    std::vector<uint8_t> st(T);
    for (size_t p = 0; p < T; ++p) {
      st[p] = static_cast<uint8_t>(code % static_cast<uint64_t>(inst.q));
      code /= static_cast<uint64_t>(inst.q);
    }
    return st;
  };

  std::vector<bool> visited(nstates, false);
  uint64_t orbits = 0;
  for (uint64_t code = 0; code < nstates; ++code) {
    if (visited[code]) continue;
    ++orbits;
    visited[code] = true;
    std::vector<std::vector<uint8_t>> stack{decode(code)};
    while (!stack.empty()) {
      std::vector<uint8_t> cur = std::move(stack.back());
      stack.pop_back();
      for (const Action& act : actions) {
        std::vector<uint8_t> nxt = apply(cur, act);
        uint64_t nxt_code = encode(nxt);
        if (!visited[nxt_code]) {
          visited[nxt_code] = true;
          stack.push_back(std::move(nxt));
        }
      }
    }
  }
  return orbits;
}

GrowthTable growth_probe(const AlgebraSpec& spec, const std::vector<int>& qs,
                         const Budget& budget) {
  require_valid(spec);
  GrowthTable table;
  bool all_ok = true;
  for (int q : qs) {
    GrowthRow row;
    row.q = q;
    try {
      FFInstance inst = make_instance(spec, q);
      row.ideals = ideal_count(inst);
      row.orbits = orbit_count_subspaces(inst, budget);
    } catch (const std::exception& e) {
      row.error = e.what();
      all_ok = false;
    }
    table.rows.push_back(std::move(row));
  }
  table.strictly_increasing = all_ok && table.rows.size() >= 2;
  for (size_t i = 1; i < table.rows.size() && table.strictly_increasing; ++i) {
    if (table.rows[i].orbits <= table.rows[i - 1].orbits) table.strictly_increasing = false;
  }
  return table;
}

}  // namespace rsz
