#pragma once

#include <stdexcept>
#include <string>

namespace spincover {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};
struct DegreeMismatch : Error {
  using Error::Error;
};
struct CoverMismatch : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct RequiresEnumeration : Error {
  using Error::Error;
};
struct NotCyclicSylow : Error {
  using Error::Error;
};
struct OutOfClassification : Error {
  using Error::Error;
};
struct UnsupportedFamily : Error {
  using Error::Error;
};
struct OutOfScope : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace spincover
