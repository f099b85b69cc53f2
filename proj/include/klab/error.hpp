#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace klab {

/// Base of every exception thrown by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller violated an operation's precondition (bad arity, out-of-range vertex, ...).
class invalid_input : public error {
 public:
  using error::error;
};

/// A configured size cap (DNF clauses, power support, brute-force vertices) was exceeded.
class cap_exceeded : public error {
 public:
  using error::error;
};

class zero_mass : public error {
 public:
  zero_mass() : error("localization set has measure zero") {}
};

/// Malformed structure / report JSON.
class schema_error : public error {
 public:
  using error::error;
};

class parse_error : public error {
 public:
  parse_error(std::size_t position, std::vector<std::string> expected, const std::string& message)
      : error(message), position_(position), expected_(std::move(expected)) {}

  /// 1-based column of the offending token (input length + 1 at end of input).
  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::vector<std::string> expected_;
};

/// A formula falls outside the fragment an analysis supports.
class fragment_error : public error {
 public:
  using error::error;
};

/// A witness pipeline's precondition inequality does not hold.
class precondition_failed : public error {
 public:
  precondition_failed(std::string which, const std::string& message)
      : error(message), which_(std::move(which)) {}
  const std::string& which() const noexcept { return which_; }

 private:
  std::string which_;
};

class embedding_not_found : public error {
 public:
  embedding_not_found(bool exhausted, const std::string& message)
      : error(message), exhausted_(exhausted) {}
  /// True when the search budget ran out; false when absence was proven.
  bool exhausted() const noexcept { return exhausted_; }

 private:
  bool exhausted_;
};

class grid_too_small : public invalid_input {
 public:
  using invalid_input::invalid_input;
};

}  // namespace klab
