#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gdep {

// Malformed input data: CSV teams, atom files, structure files.
struct FormatError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unparsable atom or formula text. `position` is a 1-based offset into
// the input string.
struct SyntaxError : std::runtime_error {
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A variable, relation, or value falls outside the domain it must live in.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A configured guard (team size, universe size, search budget) was exceeded.
struct SizeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An API precondition was violated by the caller.
struct ContractError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace gdep
