#include "rsz/algebra.hpp"

#include <json.hpp>

#include <limits>
#include <sstream>

namespace rsz {

namespace {

// Caps the total dimension n = sum r_i so that all derived quantities fit
// comfortably in int64 arithmetic.
constexpr int64_t kMaxTotalDim = 1'000'000'000'000LL;

}  // namespace

ValidationReport validate(const AlgebraSpec& spec) {
  ValidationReport report;
  auto add = [&report](std::string code, std::string message) {
    report.violations.push_back({std::move(code), std::move(message)});
  };

  if (spec.k < 1) {
    add("k_nonpositive", "k must be at least 1, got " + std::to_string(spec.k));
  }
  if (static_cast<int64_t>(spec.r.size()) != spec.k) {
    add("r_length", "r has " + std::to_string(spec.r.size()) +
                        " entries, expected k = " + std::to_string(spec.k));
  }
  int64_t total = 0;
  for (size_t i = 0; i < spec.r.size(); ++i) {
    if (spec.r[i] < 1) {
      add("r_nonpositive", "r[" + std::to_string(i + 1) +
                               "] = " + std::to_string(spec.r[i]) +
                               " must be at least 1");
    } else {
      total += spec.r[i];
    }
  }
  if (total > kMaxTotalDim) {
    add("r_too_large", "sum of block sizes exceeds supported range");
  }
  if (static_cast<int64_t>(spec.j.size()) != spec.k) {
    add("j_rows", "pattern has " + std::to_string(spec.j.size()) +
                      " rows, expected k = " + std::to_string(spec.k));
  }
  for (size_t i = 0; i < spec.j.size(); ++i) {
    if (static_cast<int64_t>(spec.j[i].size()) != spec.k) {
      add("j_row_length", "pattern row " + std::to_string(i + 1) + " has " +
                              std::to_string(spec.j[i].size()) +
                              " entries, expected k = " + std::to_string(spec.k));
    }
    for (size_t c = 0; c < spec.j[i].size(); ++c) {
      if (spec.j[i][c] > 1) {
        add("j_entry", "pattern entry (" + std::to_string(i + 1) + "," +
                           std::to_string(c + 1) + ") must be 0 or 1");
      }
    }
  }
  return report;
}

void require_valid(const AlgebraSpec& spec) {
  ValidationReport report = validate(spec);
  if (report.ok()) return;
  std::ostringstream msg;
  msg << "invalid algebra spec:";
  for (const Violation& v : report.violations) msg << " [" << v.code << "] " << v.message << ";";
  throw InvariantError(msg.str());
}

std::vector<int64_t> a_vector(const AlgebraSpec& spec) {
  require_valid(spec);
  std::vector<int64_t> a(static_cast<size_t>(spec.k), 0);
  for (int64_t i = 0; i < spec.k; ++i) {
    for (int64_t j = 0; j < spec.k; ++j) {
      if (spec.j_at(i, j)) a[static_cast<size_t>(i)] += spec.r[static_cast<size_t>(j)];
    }
  }
  return a;
}

AlgebraSpec scale(const AlgebraSpec& spec, int64_t m) {
  require_valid(spec);
  if (m < 1) {
    throw InvariantError("scale factor must be at least 1, got " + std::to_string(m));
  }
  AlgebraSpec out = spec;
  for (int64_t& ri : out.r) ri *= m;
  require_valid(out);  // guards the size cap after scaling
  return out;
}

AlgebraSpec parse_spec(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what(), e.byte);
  }

  if (!doc.is_object()) throw SchemaError("top-level value must be an object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "k" && key != "r" && key != "j") {
      throw SchemaError("unknown field \"" + key + "\"");
    }
  }
  if (!doc.contains("k") || !doc.contains("r") || !doc.contains("j")) {
    throw SchemaError("fields k, r, j are all required");
  }
  if (!doc["k"].is_number_integer()) throw SchemaError("k must be an integer");
  if (!doc["r"].is_array()) throw SchemaError("r must be an array");
  if (!doc["j"].is_array()) throw SchemaError("j must be an array of arrays");

  AlgebraSpec spec;
  spec.k = doc["k"].get<int64_t>();
  if (spec.k < 0) throw SchemaError("k must be nonnegative");
  if (static_cast<int64_t>(doc["r"].size()) != spec.k) {
    throw SchemaError("r has " + std::to_string(doc["r"].size()) +
                      " entries, expected k = " + std::to_string(spec.k));
  }
  for (const auto& v : doc["r"]) {
    if (!v.is_number_integer()) throw SchemaError("r entries must be integers");
    spec.r.push_back(v.get<int64_t>());
  }
  if (static_cast<int64_t>(doc["j"].size()) != spec.k) {
    throw SchemaError("j has " + std::to_string(doc["j"].size()) +
                      " rows, expected k = " + std::to_string(spec.k));
  }
  for (const auto& row : doc["j"]) {
    if (!row.is_array() || static_cast<int64_t>(row.size()) != spec.k) {
      throw SchemaError("every row of j must have exactly k entries");
    }
    std::vector<uint8_t> bits;
    for (const auto& v : row) {
      if (!v.is_number_integer() || (v.get<int64_t>() != 0 && v.get<int64_t>() != 1)) {
        throw SchemaError("j entries must be exactly 0 or 1");
      }
      bits.push_back(static_cast<uint8_t>(v.get<int64_t>()));
    }
    spec.j.push_back(std::move(bits));
  }

  require_valid(spec);
  return spec;
}

std::string serialize_spec(const AlgebraSpec& spec) {
  require_valid(spec);
  nlohmann::ordered_json doc;
  doc["k"] = spec.k;
  doc["r"] = spec.r;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : spec.j) {
    nlohmann::ordered_json bits = nlohmann::ordered_json::array();
    for (uint8_t b : row) bits.push_back(static_cast<int>(b));
    rows.push_back(std::move(bits));
  }
  doc["j"] = std::move(rows);
  return doc.dump();
}

}  // namespace rsz
