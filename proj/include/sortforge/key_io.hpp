#pragma once

// The external key format: one decimal int64 per line, newline terminated.

#include <istream>
#include <ostream>
#include <stdexcept>

#include "sortforge/trees.hpp"

namespace sortforge {

class KeyFormatError : public std::runtime_error {
 public:
  KeyFormatError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Throws KeyFormatError naming the first bad line. A missing newline at
/// the very end is accepted.
KeyList read_keys(std::istream& in);
void write_keys(std::ostream& out, const KeyList& keys);

}  // namespace sortforge
