#include "rsz/json_io.hpp"

#include <sstream>

namespace rsz {

using nlohmann::ordered_json;

ordered_json quiver_json(const Quiver& q) {
  ordered_json out;
  ordered_json vertices = ordered_json::array();
  for (const Vertex& v : q.vertices) {
    if (v.level < 0) {
      vertices.push_back(v.block);
    } else {
      vertices.push_back(ordered_json::array({v.block, v.level}));
    }
  }
  out["vertices"] = std::move(vertices);
  ordered_json arrows = ordered_json::array();
  for (auto [s, t] : q.arrows) arrows.push_back(ordered_json::array({s, t}));
  out["arrows"] = std::move(arrows);
  return out;
}

std::string quiver_dot(const Quiver& q) {
  std::ostringstream os;
  os << "digraph quiver {\n";
  for (size_t i = 0; i < q.vertices.size(); ++i) {
    const Vertex& v = q.vertices[i];
    os << "  v" << i << " [label=\"" << v.block;
    if (v.level >= 0) os << ":" << v.level;
    os << "\"];\n";
  }
  for (auto [s, t] : q.arrows) os << "  v" << s << " -> v" << t << ";\n";
  os << "}\n";
  return os.str();
}

ordered_json classification_json(const GraphClassification& cls) {
  ordered_json out;
  ordered_json comps = ordered_json::array();
  for (const ComponentClass& c : cls.components) {
    ordered_json comp;
    comp["vertices"] = c.vertices;
    if (c.dynkin) {
      comp["type"] = to_string(c.type);
    } else {
      ordered_json eu;
      eu["kind"] = to_string(c.cert.kind);
      eu["n"] = c.cert.n;
      eu["embedding"] = c.cert.embedding;
      comp["euclidean"] = std::move(eu);
    }
    comps.push_back(std::move(comp));
  }
  out["components"] = std::move(comps);
  return out;
}

namespace {

ordered_json certificate_json(const Certificate& cert) {
  ordered_json out;
  if (const auto* dyn = std::get_if<DynkinDecomposition>(&cert)) {
    out["kind"] = "dynkin_decomposition";
    ordered_json types = ordered_json::array();
    for (const DynkinType& t : dyn->components) types.push_back(to_string(t));
    out["components"] = std::move(types);
  } else if (const auto* basic = std::get_if<BasicCriterion>(&cert)) {
    out["kind"] = "basic_criterion";
    out["acyclic"] = true;
    out["max_a"] = basic->max_a;
  } else if (const auto* viol = std::get_if<BasicViolation>(&cert)) {
    out["kind"] = "basic_violation";
    if (viol->a_index) {
      out["block"] = *viol->a_index + 1;  // user-facing 1-based block index
      out["a"] = viol->a_value;
    } else {
      out["cycle"] = viol->cycle;
    }
  } else if (const auto* obs = std::get_if<RadicalObstructionCert>(&cert)) {
    out["kind"] = "radical_obstruction";
    ordered_json eu;
    eu["kind"] = to_string(obs->obstruction.cert.kind);
    eu["n"] = obs->obstruction.cert.n;
    eu["embedding"] = obs->obstruction.cert.embedding;
    out["euclidean"] = std::move(eu);
    out["generator"] = obs->obstruction.generator;
    out["e"] = obs->obstruction.e;
  } else if (const auto* none = std::get_if<NoApplicableTheorem>(&cert)) {
    out["kind"] = "none";
    out["rule_failures"] = none->rule_failures;
  }
  return out;
}

}  // namespace

ordered_json verdict_json(const Verdict& v) {
  ordered_json out;
  out["status"] = to_string(v.status);
  out["rep_type"] = to_string(v.rep_type);
  out["certificate"] = certificate_json(v.certificate);
  out["citations"] = v.citations;
  return out;
}

ordered_json report_json(const ValidationReport& r) {
  ordered_json out;
  out["valid"] = r.ok();
  ordered_json list = ordered_json::array();
  for (const Violation& v : r.violations) {
    ordered_json item;
    item["code"] = v.code;
    item["message"] = v.message;
    list.push_back(std::move(item));
  }
  out["violations"] = std::move(list);
  return out;
}

ordered_json growth_json(const GrowthTable& t) {
  ordered_json out;
  ordered_json rows = ordered_json::array();
  for (const GrowthRow& r : t.rows) {
    ordered_json row;
    row["q"] = r.q;
    if (r.error.empty()) {
      row["ideals"] = r.ideals.str();
      row["orbits"] = r.orbits;
    } else {
      row["error"] = r.error;
    }
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  out["strictly_increasing"] = t.strictly_increasing;
  return out;
}

}  // namespace rsz
