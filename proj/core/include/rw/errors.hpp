#pragma once

#include <stdexcept>
#include <string>

namespace rw {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Two permutations of different degree were combined.
class DegreeMismatchError : public Error {
public:
  using Error::Error;
};

/// Invalid (n, a, r) parameters or other bad user input.
class ParameterError : public Error {
public:
  using Error::Error;
};

/// A constructor or operation was asked for parameters outside its
/// documented applicability conditions.
class ApplicabilityError : public Error {
public:
  using Error::Error;
};

/// A map built from a closed-form recipe failed its own verification
/// (for example, an adjacency-preservation check). Distinguished from
/// ApplicabilityError because it indicates a defect in the transcription
/// of the recipe itself, not a caller mistake.
class InternalConsistencyError : public Error {
public:
  using Error::Error;
};

/// An operation would exceed a configured size cap (for example,
/// enumerating the elements of a group larger than the enumeration cap).
class CapacityError : public Error {
public:
  using Error::Error;
};

/// A relation word references a letter that is not bound in the assignment,
/// or the word cannot be parsed.
class WordError : public Error {
public:
  using Error::Error;
};

} // namespace rw
