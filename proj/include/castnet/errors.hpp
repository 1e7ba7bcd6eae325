/*
 * errors.hpp
 *
 * Exception hierarchy shared by the library and the CLI. Each category maps
 * to one process exit code.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace castnet {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual int exit_code() const noexcept { return 2; }
};

/// Bad command line, unknown method/measure/slice name.
class UsageError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 1; }
};

/// Malformed input, unknown vertex, undefined measure on the given graph.
class DataError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 2; }
};

/// An iterative solver hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
    int exit_code() const noexcept override { return 3; }
};

} // namespace castnet
