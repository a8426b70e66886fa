#pragma once

#include <stdexcept>
#include <string>

namespace flowpoly {

/// An EdgeRef or vertex index that does not exist in the graph.
class InvalidEdge : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A local operation whose precondition does not hold (contracting a loop,
/// desubdividing a vertex of degree != 2, ...).
class InvalidOperation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Input outside the domain of a mathematical operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Polynomial division left a nonzero remainder.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured resource limit (oracle edge count, enumeration order) was hit.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or graph6 input.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace flowpoly
