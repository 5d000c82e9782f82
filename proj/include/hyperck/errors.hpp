#pragma once

#include <stdexcept>
#include <string>

namespace hyperck {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class AlgebraMismatch : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

// Raised by stem extraction when a polynomial is not of generalized
// partial-slice form. `monomial()` names the first offending term.
class NotSliceForm : public Error {
 public:
  NotSliceForm(const std::string& what, std::string monomial)
      : Error(what + " (offending monomial " + monomial + ")"),
        monomial_(std::move(monomial)) {}
  const std::string& monomial() const noexcept { return monomial_; }

 private:
  std::string monomial_;
};

// A stem that was required to satisfy the generalized Cauchy-Riemann
// system does not.
class CrViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperck
