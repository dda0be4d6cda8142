#pragma once

#include <stdexcept>

namespace trisurf {

// A broken internal invariant; never caused by user input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace trisurf
