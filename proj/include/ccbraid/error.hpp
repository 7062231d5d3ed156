#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ccb {

// Base of everything the library throws on bad input.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Index, vertex or strand number outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// Operands built over different strand counts or graphs.
class MismatchError : public Error {
 public:
  using Error::Error;
};

// A permutation that should be a graph automorphism is not one.
class NotAutomorphismError : public Error {
 public:
  using Error::Error;
};

// The requested decision problem is not handled for this graph.
class OutOfScopeError : public Error {
 public:
  using Error::Error;
};

}  // namespace ccb
