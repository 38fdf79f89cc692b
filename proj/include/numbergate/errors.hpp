#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace numbergate {

// Base class for all engine errors.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input text; `offset` is the byte position of the failure.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t at) : error(what), offset(at) {}
  std::size_t offset = 0;
};

// Precondition or structural violation (unknown id, bad pair, invalid position).
struct domain_error : error {
  using error::error;
};

// A configured budget (arena size, recursion depth, position count) was hit.
// Never a wrong answer: the operation fails instead of degrading.
struct resource_error : error {
  using error::error;
};

// Exact integer arithmetic left the representable range.
struct overflow_error : resource_error {
  using resource_error::resource_error;
};

}  // namespace numbergate
