#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chr {

// Mixing expressions from different rings without an explicit conversion.
struct ring_mismatch_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A truncated operation was asked for more precision than its inputs carry,
// or a required cutoff was not supplied.
struct cutoff_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct parse_error : std::runtime_error {
  parse_error(const std::string& msg, std::size_t at)
      : std::runtime_error(msg + " at offset " + std::to_string(at)), offset(at) {}
  std::size_t offset;
};

// Bad numeric input: incompatible group kind, zero eigenvalue where an
// inverse is needed, or a character outside the stable range.
struct eval_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace chr
