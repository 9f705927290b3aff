#pragma once

#include <stdexcept>
#include <string>

namespace procmap {

// Input file does not follow its schema (bad header, malformed row, ...).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace procmap
