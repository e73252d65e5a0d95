#pragma once

#include <stdexcept>

namespace egr {

/// Thrown when an operation is called outside its documented preconditions.
class precondition_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace egr
