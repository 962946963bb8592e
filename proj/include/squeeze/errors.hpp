#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace squeeze {

// Numeric precondition violated (non-finite input, non-positive mass, ...).
class domain_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// |C| >= A: the quadratic potential is not positive definite.
class unstable_potential_error : public domain_error {
 public:
  using domain_error::domain_error;
};

// The requested Gaussian does not fit on the quadrature grid.
class grid_resolution_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class validation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace squeeze
