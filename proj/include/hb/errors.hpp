#pragma once

#include <stdexcept>
#include <string>

namespace hb {

// Base class for every error thrown by this library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data: bad row, bad stanza, bad field value.
struct parse_error : error {
  using error::error;
};

// Invalid parameter or option combination.
struct config_error : error {
  using error::error;
};

// Filesystem failure: open, read, write, rename.
struct io_error : error {
  using error::error;
};

// Structural violation: cycles, dangling references, inconsistent counts.
struct integrity_error : error {
  using error::error;
};

// Operation applied outside its mathematical domain.
struct domain_error : error {
  using error::error;
};

// Input that contains no usable records.
struct empty_input_error : error {
  using error::error;
};

}  // namespace hb
