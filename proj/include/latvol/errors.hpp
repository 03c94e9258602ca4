#pragma once

#include <stdexcept>
#include <string>

namespace latvol {

// Matrix (or vertex set) that should have been invertible / affinely
// independent but is not.
class singular_matrix_error : public std::domain_error {
 public:
  explicit singular_matrix_error(const std::string& what)
      : std::domain_error(what) {}
};

// Query that requires at least one interior lattice point.
class empty_interior_error : public std::domain_error {
 public:
  explicit empty_interior_error(const std::string& what)
      : std::domain_error(what) {}
};

// An enumeration would exceed its configured cell/node budget.  Callers can
// retry with a larger budget; the computation was not started.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace latvol
