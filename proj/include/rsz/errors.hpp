#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rsz {

// Malformed input text. position is a byte offset into the input.
struct ParseError : std::runtime_error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::runtime_error(msg), position(pos) {}
};

// Well-formed JSON that does not match the expected shape.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally well-formed value violating a domain invariant.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An enumeration or search would exceed its configured state budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rsz
