// Command line front end: every subcommand ingests an algebra spec as JSON
// and emits JSON on stdout.  Exit codes: 0 finite/success, 1 infinite,
// 2 unknown, 3 usage error, 4 input error, 5 budget exceeded.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rsz/algebra.hpp"
#include "rsz/classify.hpp"
#include "rsz/decide.hpp"
#include "rsz/ff_oracle.hpp"
#include "rsz/json_io.hpp"
#include "rsz/quiver.hpp"
#include "rsz/tits.hpp"

namespace {

constexpr int kExitFinite = 0;
constexpr int kExitInfinite = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;
constexpr int kExitInput = 4;
constexpr int kExitBudget = 5;
constexpr int kExitInternal = 6;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Shared --spec / --json input options.
struct SpecInput {
  std::string path;
  std::string inline_json;

  void attach(CLI::App* cmd, bool required = true) {
    auto* grp = cmd->add_option_group("input");
    grp->add_option("--spec", path, "path of a spec JSON file");
    grp->add_option("--json", inline_json, "inline spec JSON text");
    if (required) {
      grp->require_option(1);
    } else {
      grp->require_option(0, 1);
    }
  }

  rsz::AlgebraSpec load() const {
    if (!inline_json.empty()) return rsz::parse_spec(inline_json);
    return rsz::parse_spec(read_file(path));
  }
};

void emit(const nlohmann::ordered_json& doc) { std::cout << doc.dump() << "\n"; }

int status_code(rsz::Status s) {
  switch (s) {
    case rsz::Status::Finite: return kExitFinite;
    case rsz::Status::Infinite: return kExitInfinite;
    case rsz::Status::Unknown: return kExitUnknown;
  }
  return kExitInternal;
}

rsz::Verdict checked_decide(const rsz::AlgebraSpec& spec, int64_t scale_m) {
  rsz::Verdict v = scale_m != 1 ? rsz::decide_scaled(spec, scale_m) : rsz::decide(spec);
  const rsz::AlgebraSpec effective = scale_m != 1 ? rsz::scale(spec, scale_m) : spec;
  if (!rsz::verify(effective, v)) {
    throw std::logic_error("verdict failed its independent certificate check");
  }
  return v;
}

int run_batch(const std::string& dir, int64_t scale_m) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InputError(dir + " is not a directory");
  std::vector<std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  bool any_error = false;
  std::ostringstream out;
  for (const std::string& file : files) {
    nlohmann::ordered_json line;
    line["file"] = file;
    try {
      rsz::AlgebraSpec spec = rsz::parse_spec(read_file(file));
      nlohmann::ordered_json v = rsz::verdict_json(checked_decide(spec, scale_m));
      for (auto& [key, value] : v.items()) line[key] = value;
    } catch (const std::exception& e) {
      line["error"] = e.what();
      any_error = true;
    }
    out << line.dump() << "\n";
  }
  std::cout << out.str();
  return any_error ? kExitInput : kExitFinite;
}

std::optional<rsz::DynkinType> parse_dynkin_name(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  rsz::DynkinFamily family;
  switch (name[0]) {
    case 'A': family = rsz::DynkinFamily::A; break;
    case 'D': family = rsz::DynkinFamily::D; break;
    case 'E': family = rsz::DynkinFamily::E; break;
    default: return std::nullopt;
  }
  int n = 0;
  for (size_t i = 1; i < name.size(); ++i) {
    if (!isdigit(static_cast<unsigned char>(name[i]))) return std::nullopt;
    n = n * 10 + (name[i] - '0');
  }
  if (family == rsz::DynkinFamily::A && n < 1) return std::nullopt;
  if (family == rsz::DynkinFamily::D && n < 4) return std::nullopt;
  if (family == rsz::DynkinFamily::E && (n < 6 || n > 8)) return std::nullopt;
  return rsz::DynkinType{family, n};
}

std::vector<int64_t> parse_int_list(const std::string& text) {
  std::vector<int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad integer list entry \"" + item + "\"");
    }
  }
  return out;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"finiteness toolkit for conjugacy classes of left ideals of "
               "radical-square-zero algebras"};
  app.set_version_flag("--version", "rsztool 1.0.0");
  app.require_subcommand(1);

  // validate
  auto* validate_cmd = app.add_subcommand("validate", "check a spec against its invariants");
  SpecInput validate_in;
  validate_in.attach(validate_cmd);

  // scale
  auto* scale_cmd = app.add_subcommand("scale", "multiply every block size by a factor");
  SpecInput scale_in;
  scale_in.attach(scale_cmd);
  int64_t scale_factor = 1;
  scale_cmd->add_option("--factor,-m", scale_factor, "scaling factor (>= 1)")->required();

  // emit-quiver
  auto* quiver_cmd = app.add_subcommand("emit-quiver", "export a quiver as JSON or DOT");
  SpecInput quiver_in;
  quiver_in.attach(quiver_cmd);
  std::string quiver_kind = "separated";
  quiver_cmd->add_option("--kind", quiver_kind, "ordinary | separated | reversed")
      ->check(CLI::IsMember({"ordinary", "separated", "reversed"}));
  bool quiver_dot_flag = false;
  quiver_cmd->add_flag("--dot", quiver_dot_flag, "emit DOT text instead of JSON");

  // classify
  auto* classify_cmd =
      app.add_subcommand("classify", "classify the components of the separated graph");
  SpecInput classify_in;
  classify_in.attach(classify_cmd);

  // tits
  auto* tits_cmd = app.add_subcommand("tits", "evaluate the quadratic form of a quiver");
  SpecInput tits_in;
  tits_in.attach(tits_cmd);
  std::string tits_dim;
  tits_cmd->add_option("--dim", tits_dim, "comma-separated dimension vector")->required();
  std::string tits_quiver = "separated";
  tits_cmd->add_option("--quiver", tits_quiver, "separated (2k entries) | ordinary (k entries)")
      ->check(CLI::IsMember({"separated", "ordinary"}));

  // roots
  auto* roots_cmd = app.add_subcommand("roots", "positive roots of a Dynkin diagram");
  std::string roots_type;
  roots_cmd->add_option("--dynkin", roots_type, "diagram name, e.g. A5, D6, E8")->required();

  // count
  auto* count_cmd = app.add_subcommand("count", "count conjugacy classes of nilpotent ideals");
  SpecInput count_in;
  count_in.attach(count_cmd);

  // decide
  auto* decide_cmd = app.add_subcommand("decide", "finiteness verdict with certificate");
  SpecInput decide_in;
  decide_in.attach(decide_cmd, /*required=*/false);
  int64_t decide_scale = 1;
  decide_cmd->add_option("--scale", decide_scale, "decide on the scaled spec (factor >= 1)");
  std::string decide_batch;
  decide_cmd->add_option("--batch", decide_batch,
                         "directory of *.json specs; one verdict JSON line per file");

  // oracle
  auto* oracle_cmd = app.add_subcommand("oracle", "finite-field ideal and orbit counts");
  SpecInput oracle_in;
  oracle_in.attach(oracle_cmd);
  int oracle_q = 2;
  oracle_cmd->add_option("--q", oracle_q, "field size (2, 3, 4 or 5)");
  std::string oracle_mode = "subspaces";
  oracle_cmd->add_option("--mode", oracle_mode, "subspaces | matrices | both")
      ->check(CLI::IsMember({"subspaces", "matrices", "both"}));
  uint64_t oracle_budget = rsz::Budget{}.max_states;
  oracle_cmd->add_option("--budget", oracle_budget, "maximum number of search states");

  // oracle-growth
  auto* growth_cmd =
      app.add_subcommand("oracle-growth", "orbit counts across several field sizes");
  SpecInput growth_in;
  growth_in.attach(growth_cmd);
  std::string growth_qs = "2,3,4";
  growth_cmd->add_option("--qs", growth_qs, "comma-separated field sizes");
  uint64_t growth_budget = rsz::Budget{}.max_states;
  growth_cmd->add_option("--budget", growth_budget, "maximum number of search states");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitUsage;
  }

  if (validate_cmd->parsed()) {
    std::string text = !validate_in.inline_json.empty() ? validate_in.inline_json
                                                        : read_file(validate_in.path);
    rsz::AlgebraSpec spec;
    try {
      spec = rsz::parse_spec(text);
    } catch (const rsz::SchemaError&) {
      // Reconstruct tolerantly so the report can list shape violations
      // (length mismatches, bad entries) instead of bailing out.  Type-level
      // problems still surface as input errors below.
      auto doc = nlohmann::json::parse(text);
      spec = rsz::AlgebraSpec{};
      spec.k = doc.at("k").get<int64_t>();
      for (const auto& v : doc.at("r")) spec.r.push_back(v.get<int64_t>());
      for (const auto& row : doc.at("j")) {
        std::vector<uint8_t> bits;
        for (const auto& v : row) {
          int64_t entry = v.get<int64_t>();
          bits.push_back(entry >= 0 && entry < 256 ? static_cast<uint8_t>(entry) : 255);
        }
        spec.j.push_back(std::move(bits));
      }
    } catch (const rsz::InvariantError&) {
      // Schema checks passed; rebuild without the validity gate.
      auto doc = nlohmann::json::parse(text);
      spec = rsz::AlgebraSpec{};
      spec.k = doc["k"].get<int64_t>();
      for (const auto& v : doc["r"]) spec.r.push_back(v.get<int64_t>());
      for (const auto& row : doc["j"]) {
        std::vector<uint8_t> bits;
        for (const auto& v : row) bits.push_back(static_cast<uint8_t>(v.get<int64_t>()));
        spec.j.push_back(std::move(bits));
      }
    }
    rsz::ValidationReport report = rsz::validate(spec);
    emit(rsz::report_json(report));
    return report.ok() ? kExitFinite : kExitInput;
  }

  if (scale_cmd->parsed()) {
    rsz::AlgebraSpec scaled = rsz::scale(scale_in.load(), scale_factor);
    std::cout << rsz::serialize_spec(scaled) << "\n";
    return kExitFinite;
  }

  if (quiver_cmd->parsed()) {
    rsz::AlgebraSpec spec = quiver_in.load();
    rsz::Quiver q = quiver_kind == "ordinary" ? rsz::ordinary_quiver(spec)
                                              : rsz::separated_quiver(spec);
    if (quiver_kind == "reversed") q = rsz::reverse(q);
    if (quiver_dot_flag) {
      std::cout << rsz::quiver_dot(q);
    } else {
      emit(rsz::quiver_json(q));
    }
    return kExitFinite;
  }

  if (classify_cmd->parsed()) {
    rsz::AlgebraSpec spec = classify_in.load();
    rsz::GraphClassification cls =
        rsz::classify(rsz::underlying_graph(rsz::separated_quiver(spec)));
    emit(rsz::classification_json(cls));
    return kExitFinite;
  }

  if (tits_cmd->parsed()) {
    rsz::AlgebraSpec spec = tits_in.load();
    rsz::Quiver q = tits_quiver == "ordinary" ? rsz::ordinary_quiver(spec)
                                              : rsz::separated_quiver(spec);
    rsz::DimVector x = parse_int_list(tits_dim);
    std::cout << rsz::tits_value(rsz::form_of(q), x) << "\n";
    return kExitFinite;
  }

  if (roots_cmd->parsed()) {
    auto type = parse_dynkin_name(roots_type);
    if (!type) throw InputError("not a Dynkin diagram name: " + roots_type);
    std::vector<rsz::DimVector> roots = rsz::positive_roots(rsz::dynkin_template(*type));
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const rsz::DimVector& r : roots) out.push_back(r);
    emit(out);
    return kExitFinite;
  }

  if (count_cmd->parsed()) {
    rsz::ClassCount count = rsz::count_classes(count_in.load());
    nlohmann::ordered_json out;
    switch (count.kind) {
      case rsz::ClassCount::Kind::Finite: out["classes"] = count.value.str(); break;
      case rsz::ClassCount::Kind::Infinite: out["classes"] = "infinite"; break;
      case rsz::ClassCount::Kind::Unknown: out["classes"] = "unknown"; break;
    }
    emit(out);
    return count.kind == rsz::ClassCount::Kind::Finite    ? kExitFinite
           : count.kind == rsz::ClassCount::Kind::Infinite ? kExitInfinite
                                                            : kExitUnknown;
  }

  if (decide_cmd->parsed()) {
    if (!decide_batch.empty()) return run_batch(decide_batch, decide_scale);
    if (decide_in.path.empty() && decide_in.inline_json.empty()) {
      throw InputError("decide needs --spec, --json or --batch");
    }
    rsz::Verdict v = checked_decide(decide_in.load(), decide_scale);
    emit(rsz::verdict_json(v));
    return status_code(v.status);
  }

  if (oracle_cmd->parsed()) {
    rsz::FFInstance inst = rsz::make_instance(oracle_in.load(), oracle_q);
    rsz::Budget budget{oracle_budget};
    nlohmann::ordered_json out;
    out["ideals"] = rsz::enumerate_ideals(inst, nullptr, budget);
    uint64_t orbits = 0;
    if (oracle_mode == "subspaces") {
      orbits = rsz::orbit_count_subspaces(inst, budget);
    } else if (oracle_mode == "matrices") {
      orbits = rsz::orbit_count_matrices(inst, budget);
    } else {
      orbits = rsz::orbit_count_subspaces(inst, budget);
      uint64_t via_matrices = rsz::orbit_count_matrices(inst, budget);
      if (orbits != via_matrices) {
        throw std::logic_error("subspace and matrix orbit counts disagree");
      }
    }
    out["orbits"] = orbits;
    out["q"] = oracle_q;
    out["mode"] = oracle_mode;
    emit(out);
    return kExitFinite;
  }

  if (growth_cmd->parsed()) {
    std::vector<int64_t> qs64 = parse_int_list(growth_qs);
    std::vector<int> qs(qs64.begin(), qs64.end());
    rsz::GrowthTable table =
        rsz::growth_probe(growth_in.load(), qs, rsz::Budget{growth_budget});
    emit(rsz::growth_json(table));
    return kExitFinite;
  }

  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const rsz::BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const rsz::ParseError& e) {
    std::cerr << "parse error at byte " << e.position << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const rsz::SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return kExitInput;
  } catch (const rsz::InvariantError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}
