#pragma once

#include <stdexcept>
#include <string>

namespace graphgen {

// Malformed arguments: n = 0, i == j for an edge, sums over different (n, k, s).
class StructuralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation's input does not satisfy its precondition (missing edge,
// leg-label collision, target vertex already carrying a leg).
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds a configured size ceiling.
class CeilingError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Unreadable, corrupted or version-mismatched cache entry.
class CacheError : public std::runtime_error {
 public:
  CacheError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace graphgen
