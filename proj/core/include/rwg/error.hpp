#pragma once

#include <stdexcept>

namespace rwg {

/// Malformed or unsupported input: reads, patterns, context files, index files.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A request that is inconsistent with the index or options it targets.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rwg
