#pragma once

#include <stdexcept>
#include <string>

namespace witt {

/// Violated precondition or mathematically impossible request.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

/// A window-bounded search did not stabilise; retry with the suggested window.
class window_error : public std::runtime_error {
 public:
  window_error(const std::string& what, long suggested_lo, long suggested_hi)
      : std::runtime_error(what),
        suggested_lo(suggested_lo),
        suggested_hi(suggested_hi) {}

  long suggested_lo;
  long suggested_hi;
};

/// Malformed input text.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : std::runtime_error(what), position(position) {}

  std::size_t position;
};

/// A certified invariant failed; indicates a bug, never bad input.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace witt
