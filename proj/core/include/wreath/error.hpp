#pragma once

#include <stdexcept>
#include <string>

namespace wreath {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live at different tree levels.
class LevelMismatch : public Error {
 public:
  LevelMismatch(int lhs, int rhs);
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A permutation of 1..2^n that does not preserve the block structure of T_n.
class NotATreeAutomorphism : public Error {
 public:
  using Error::Error;
};

/// A resource guard refused the request (too many elements to enumerate).
class LevelTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Hom spaces between Ind^k Res^l functors vanish when l exceeds the base level.
class EmptyHomSpace : public Error {
 public:
  using Error::Error;
};

inline LevelMismatch::LevelMismatch(int lhs, int rhs)
    : Error("level mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

}  // namespace wreath
