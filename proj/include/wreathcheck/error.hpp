#pragma once

#include <stdexcept>
#include <string>

namespace wreathcheck {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAGroup : public Error {
 public:
  enum class Reason { kNonAssociative, kNoIdentity, kNoInverse, kMalformed };

  NotAGroup(Reason reason, const std::string& detail)
      : Error("not a group: " + detail), reason_(reason) {}

  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

class OrderLimitExceeded : public Error {
 public:
  using Error::Error;
};

class NotNormal : public Error {
 public:
  using Error::Error;
};

class NotASubgroup : public Error {
 public:
  using Error::Error;
};

class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParentMismatch : public Error {
 public:
  using Error::Error;
};

class NotACharacter : public Error {
 public:
  using Error::Error;
};

class InternalSplitFailure : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  using Error::Error;
};

class DichotomyViolation : public Error {
 public:
  using Error::Error;
};

class NotInvariant : public Error {
 public:
  using Error::Error;
};

class UnknownGroup : public Error {
 public:
  using Error::Error;
};

}  // namespace wreathcheck
