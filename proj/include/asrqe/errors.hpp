#pragma once

#include <stdexcept>
#include <string>

namespace asrqe {

// Error taxonomy shared by the C++ core and mirrored by the C API codes.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DuplicateKeyError : public Error {
 public:
  using Error::Error;
};

// Degenerate numeric input, e.g. WER against an empty reference. Callers
// decide how to proceed; the core never silently substitutes a value.
class DegenerateInputError : public Error {
 public:
  using Error::Error;
};

class IncompatibleCheckpointError : public Error {
 public:
  using Error::Error;
};

class TrainingDivergedError : public Error {
 public:
  using Error::Error;
};

}  // namespace asrqe
