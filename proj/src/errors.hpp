#pragma once

#include <stdexcept>

namespace pbwdac {

// Parse failures carry file/line context in the message.
struct ConfigParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value violates a documented invariant; message names the offending key.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A numerical guard tripped (enumeration caps, transform size limits).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace pbwdac
