#pragma once

#include <stdexcept>

namespace avgindep {

/// Thrown when an input would exceed a hard size limit (64 vertices, 25
/// vertices for brute force, enumeration ranges).
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Thrown when a parameter lies outside an operation's supported range
/// (enumeration orders, formula indices, case branch counts).
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Thrown for values outside an operation's mathematical domain
/// (non-positive fugacity, division by zero, irrational residue).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Thrown for malformed textual input (graph specs, edge lists, numbers).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace avgindep
