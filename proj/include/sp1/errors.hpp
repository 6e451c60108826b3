#pragma once

#include <stdexcept>
#include <string>

namespace sp1 {

// Malformed input: bad JSON, unknown keys, non-prime p, unparsable numbers.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A kernel operation was called outside its documented domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A computation produced a state the underlying mathematics rules out
// (e.g. a flow that re-enters a cell of equal dimension).
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace sp1
