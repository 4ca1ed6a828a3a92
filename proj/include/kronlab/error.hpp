#pragma once

#include <stdexcept>
#include <string>

namespace kronlab {

/// Base of every error raised by the library. `module()` names the component
/// that rejected the input so the CLI can report it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& what)
        : std::runtime_error(module + ": " + what), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("scalars", "division by zero") {}
};

class BackendMismatch : public Error {
public:
    BackendMismatch(const std::string& lhs, const std::string& rhs)
        : Error("scalars", "backend mismatch: " + lhs + " vs " + rhs) {}
};

class ParseError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class PartitionError : public Error {
public:
    using Error::Error;
};

} // namespace kronlab
