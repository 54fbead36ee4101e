#include "rsz/decide.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rsz/errors.hpp"

namespace rsz {

std::string to_string(Status s) {
  switch (s) {
    case Status::Finite: return "finite";
    case Status::Infinite: return "infinite";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(RepType t) {
  return t == RepType::Finite ? "finite" : "infinite";
}

namespace {

const char* kCiteGabriel =
    "Gabriel's theorem: separated graph all Dynkin iff finite representation type";
const char* kCiteFiniteType =
    "finite representation type implies a finite semigroup of ideal classes";
const char* kCiteBasic =
    "basic criterion: class semigroup finite iff separated graph acyclic and every a_i <= 3";
const char* kCiteObstruction =
    "Tits form obstruction: a radical generator below the dimension vector on a "
    "Euclidean subgraph forces infinitely many classes";
const char* kCiteSixScaling =
    "six-fold scaling: all block sizes >= 6 make finiteness equivalent to finite "
    "representation type";

bool is_basic(const AlgebraSpec& spec) {
  return std::all_of(spec.r.begin(), spec.r.end(), [](int64_t ri) { return ri == 1; });
}

}  // namespace

Verdict decide(const AlgebraSpec& spec) {
  require_valid(spec);
  Graph g = underlying_graph(separated_quiver(spec));
  GraphClassification cls = classify(g);
  std::vector<int64_t> a = a_vector(spec);
  int64_t max_a = *std::max_element(a.begin(), a.end());
  const bool basic = is_basic(spec);
  const bool all_dynkin = cls.all_dynkin();
  const RepType rep = all_dynkin ? RepType::Finite : RepType::Infinite;

  if (all_dynkin) {
    if (basic && (find_cycle(g) || max_a > 3)) {
      // A Dynkin separated graph is a forest of maximum degree 3, so this
      // cannot happen; surface rather than silently pick a rule.
      throw std::logic_error("basic criterion conflicts with Dynkin decomposition");
    }
    DynkinDecomposition cert;
    for (const ComponentClass& comp : cls.components) cert.components.push_back(comp.type);
    return {Status::Finite, rep, std::move(cert), {kCiteGabriel, kCiteFiniteType}};
  }

  if (basic) {
    auto cycle = find_cycle(g);
    if (!cycle && max_a <= 3) {
      return {Status::Finite, rep, BasicCriterion{max_a}, {kCiteBasic}};
    }
    BasicViolation cert;
    if (max_a > 3) {
      size_t idx = 0;
      while (a[idx] <= 3) ++idx;
      cert.a_index = static_cast<int64_t>(idx);
      cert.a_value = a[idx];
    } else {
      cert.cycle = *cycle;
    }
    return {Status::Infinite, rep, std::move(cert), {kCiteBasic}};
  }

  if (auto obs = radical_obstruction(spec)) {
    return {Status::Infinite, rep, RadicalObstructionCert{std::move(*obs)}, {kCiteObstruction}};
  }

  size_t non_dynkin = 0;
  for (const ComponentClass& comp : cls.components) non_dynkin += comp.dynkin ? 0 : 1;
  NoApplicableTheorem cert;
  cert.rule_failures = {
      "separated graph has " + std::to_string(non_dynkin) + " non-Dynkin component(s)",
      "not basic: some block size exceeds 1",
      "no radical generator fits under the dimension vector on a certified "
      "Euclidean subgraph",
  };
  return {Status::Unknown, rep, std::move(cert), {}};
}

Verdict decide_scaled(const AlgebraSpec& spec, int64_t m) {
  Verdict v = decide(scale(spec, m));
  if (m >= 6) v.citations.push_back(kCiteSixScaling);
  return v;
}

namespace {

// Forest test independent of the classifier: a graph is acyclic iff
// |E| = |V| - #components.
bool is_forest(const Graph& g) {
  return g.edges.size() + connected_components(g).size() == static_cast<size_t>(g.n);
}

bool verify_cycle_witness(const Graph& g, const std::vector<int>& cycle) {
  if (cycle.size() < 3) return false;
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) return false;
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges) edges.insert({std::min(u, v), std::max(u, v)});
  for (size_t i = 0; i < cycle.size(); ++i) {
    int u = cycle[i], v = cycle[(i + 1) % cycle.size()];
    if (u < 0 || u >= g.n || v < 0 || v >= g.n) return false;
    if (!edges.count({std::min(u, v), std::max(u, v)})) return false;
  }
  return true;
}

}  // namespace

bool verify(const AlgebraSpec& spec, const Verdict& verdict) {
  if (!validate(spec).ok()) return false;
  Graph g = underlying_graph(separated_quiver(spec));
  GraphClassification cls = classify(g);
  DimVector d = dimension_vector(spec);
  std::vector<int64_t> a = a_vector(spec);
  const bool all_dynkin = cls.all_dynkin();

  if ((verdict.rep_type == RepType::Finite) != all_dynkin) return false;

  if (const auto* dyn = std::get_if<DynkinDecomposition>(&verdict.certificate)) {
    if (verdict.status != Status::Finite) return false;
    if (!all_dynkin) return false;
    if (dyn->components.size() != cls.components.size()) return false;
    for (size_t i = 0; i < cls.components.size(); ++i) {
      if (!(dyn->components[i] == cls.components[i].type)) return false;
    }
    return true;
  }

  if (const auto* basic = std::get_if<BasicCriterion>(&verdict.certificate)) {
    if (verdict.status != Status::Finite) return false;
    if (!std::all_of(spec.r.begin(), spec.r.end(), [](int64_t ri) { return ri == 1; }))
      return false;
    if (!is_forest(g)) return false;
    int64_t max_a = *std::max_element(a.begin(), a.end());
    return max_a <= 3 && basic->max_a == max_a;
  }

  if (const auto* viol = std::get_if<BasicViolation>(&verdict.certificate)) {
    if (verdict.status != Status::Infinite) return false;
    if (!std::all_of(spec.r.begin(), spec.r.end(), [](int64_t ri) { return ri == 1; }))
      return false;
    if (viol->a_index) {
      size_t idx = static_cast<size_t>(*viol->a_index);
      return idx < a.size() && a[idx] == viol->a_value && viol->a_value > 3;
    }
    return verify_cycle_witness(g, viol->cycle);
  }

  if (const auto* obs = std::get_if<RadicalObstructionCert>(&verdict.certificate)) {
    if (verdict.status != Status::Infinite) return false;
    const Obstruction& o = obs->obstruction;
    if (!verify_embedding(g, o.cert)) return false;
    DimVector gen;
    try {
      gen = radical_generator(o.cert.kind, o.cert.n);
    } catch (const InvariantError&) {
      return false;
    }
    if (gen != o.generator) return false;
    if (tits_value(form_of(euclidean_template(o.cert.kind, o.cert.n)), gen) != 0) return false;
    if (o.e.size() != gen.size()) return false;
    for (size_t t = 0; t < gen.size(); ++t) {
      if (o.e[t] != d[static_cast<size_t>(o.cert.embedding[t])]) return false;
      if (gen[t] > o.e[t]) return false;
    }
    return true;
  }

  // Unknown: every ladder rule must genuinely fail.
  if (verdict.status != Status::Unknown) return false;
  if (all_dynkin) return false;
  if (std::all_of(spec.r.begin(), spec.r.end(), [](int64_t ri) { return ri == 1; })) return false;
  return !radical_obstruction(spec).has_value();
}

}  // namespace rsz
