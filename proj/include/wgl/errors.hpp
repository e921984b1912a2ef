#pragma once

#include <stdexcept>
#include <string>

namespace wgl {

// Error classes map onto CLI exit codes: parse=2, precondition=3, numeric=4.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct numeric_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unknown vertex / missing weight lookups.
struct lookup_error : precondition_error {
  using precondition_error::precondition_error;
};

}  // namespace wgl
