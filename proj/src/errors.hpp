#pragma once

#include <stdexcept>
#include <string>

namespace rbclab {

// An enumeration or verification was asked to cover more cases than the
// configured budget allows.
struct budget_error : std::runtime_error {
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text in one of the on-disk formats.
struct parse_error : std::runtime_error {
  explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A file could not be opened, read, or written.
struct io_error : std::runtime_error {
  explicit io_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rbclab
