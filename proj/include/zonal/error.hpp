#pragma once

#include <stdexcept>
#include <string>

namespace zonal {

// Every precondition violation in the library surfaces as this type; the
// message is the short error tag callers match on ("incomparable weights", ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zonal
