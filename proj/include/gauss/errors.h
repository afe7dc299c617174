#ifndef GAUSS_ERRORS_H_
#define GAUSS_ERRORS_H_

#include <stdexcept>
#include <string>

namespace gauss {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Operands live in different cyclotomic rings; embed into a common order first.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

class DivisibilityError : public Error {
 public:
  using Error::Error;
};

class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& count, const std::string& budget)
      : Error("enumeration of " + count + " functions exceeds budget " + budget),
        count_(count) {}
  // Decimal, since the count can exceed 64 bits.
  const std::string& count() const { return count_; }

 private:
  std::string count_;
};

// A hypothesis of the checked statement does not hold, e.g. p divides n.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace gauss

#endif  // GAUSS_ERRORS_H_
