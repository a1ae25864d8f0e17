#pragma once

#include <stdexcept>
#include <string>

namespace knotcalc {

// Malformed text, indices outside their range, mismatched shapes.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A well-formed request outside the range where the answer is meaningful
// (for instance Betti numbers for n = 3).
class UnsupportedError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace knotcalc
