#pragma once

#include <stdexcept>
#include <string>

namespace spread {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file. Carries "<file>:<line>: <message>" in what().
class ParseError : public Error {
public:
    ParseError(const std::string& source, long line, const std::string& message)
        : Error(source + ":" + std::to_string(line) + ": " + message),
          line_(line) {}

    long line() const { return line_; }

private:
    long line_;
};

/// Violated model contract: bad process definition, illegal transition, weight
/// out of range.
class ModelError : public Error {
public:
    using Error::Error;
};

/// Invalid experiment setup: initial states, name alignment, epoch counts.
class ExperimentError : public Error {
public:
    using Error::Error;
};

/// Invalid run configuration file.
class ConfigError : public Error {
public:
    using Error::Error;
};

/// Filesystem failure while reading or writing artifacts.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace spread
