#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace autf {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Tree pair whose trees do not have the same number of leaves, or a
// malformed tree description.
class InvalidPair : public Error {
 public:
  using Error::Error;
};

// Breakpoint list that is not a PL_2 homeomorphism (non-monotone, slope
// not a power of two, inconsistent periodic extension, ...).
class InvalidMap : public Error {
 public:
  using Error::Error;
};

// An eventually periodic map that is not an integer translation near
// both ends, where an element of F was required.
class NotInF : public Error {
 public:
  using Error::Error;
};

// Element outside the subgroup C = pi^{-1}(diagonal F).
class MembershipError : public Error {
 public:
  using Error::Error;
};

// Argument outside the domain of a map on [0,1].
class DomainError : public Error {
 public:
  using Error::Error;
};

// Unknown relator set, generator family or similar name.
class UnknownName : public Error {
 public:
  using Error::Error;
};

class CalibrationError : public Error {
 public:
  using Error::Error;
};

}  // namespace autf
