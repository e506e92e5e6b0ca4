#pragma once

#include <stdexcept>
#include <string>

namespace negeval {

/// Base class for all data and configuration errors raised by the toolkit.
/// The CLI maps these to exit code 1; usage errors map to exit code 2.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Aligned files disagree on line counts.
class AlignmentError : public Error {
  public:
    using Error::Error;
};

/// A row or field could not be parsed.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// A row references a segment, system, or annotator that does not exist.
class ReferentialError : public Error {
  public:
    using Error::Error;
};

/// Unknown scheme, flag value, or malformed configuration.
class ConfigError : public Error {
  public:
    using Error::Error;
};

/// An operation was invoked on input it is undefined for (empty corpus,
/// zero-length list, ...).
class UndefinedInputError : public Error {
  public:
    using Error::Error;
};

/// A requested subset contains no data; callers typically render "n/a".
class EmptySubsetError : public UndefinedInputError {
  public:
    using UndefinedInputError::UndefinedInputError;
};

/// Statistic is degenerate on this input (e.g. all-tied rankings).
class DegenerateInputError : public UndefinedInputError {
  public:
    using UndefinedInputError::UndefinedInputError;
};

/// Report inputs cover inconsistent direction sets.
class ConsistencyError : public Error {
  public:
    using Error::Error;
};

/// Filesystem read/write failure.
class IoError : public Error {
  public:
    using Error::Error;
};

} // namespace negeval
