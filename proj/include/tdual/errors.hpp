#pragma once

#include <stdexcept>
#include <string>

namespace tdual {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MismatchedGroups : public Error {
 public:
  using Error::Error;
};

class IllDefinedHom : public Error {
 public:
  using Error::Error;
};

class MissingCupData : public Error {
 public:
  using Error::Error;
};

class DegreeOverflow : public Error {
 public:
  using Error::Error;
};

class UnknownSpace : public Error {
 public:
  using Error::Error;
};

class MembershipFailure : public Error {
 public:
  using Error::Error;
};

class BNotLiftable : public Error {
 public:
  using Error::Error;
};

class SelfTestMismatch : public Error {
 public:
  using Error::Error;
};

// Input could not be parsed or fails a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace tdual
