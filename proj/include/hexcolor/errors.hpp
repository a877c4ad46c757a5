#pragma once

#include <stdexcept>
#include <string>

namespace hexcolor {

/// Input outside the mathematical domain of an operation (degenerate hexagon,
/// unsupported color count, k not of the required form, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// No pair of same-colored tiles in the sector layout could be found.
class NoTripleError : public std::runtime_error {
 public:
  explicit NoTripleError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested k has no row in the reference table.
class MissingRowError : public std::runtime_error {
 public:
  explicit MissingRowError(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed reference CSV or a row violating its own invariants.
class ReferenceFormatError : public std::runtime_error {
 public:
  explicit ReferenceFormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hexcolor
