#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hdp {

// Malformed input text. `position` is a 1-based line number or a 0-based byte
// offset depending on the format; the message already carries it.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& message, std::size_t position)
      : std::runtime_error(message), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// A constituent tree and a dependency tree that cannot describe the same
// joint structure.
class ConversionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hdp
