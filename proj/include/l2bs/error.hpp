#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace l2bs {

/// Base class for every failure raised by the library. Carries the name of
/// the module that rejected the input so the CLI can report it verbatim.
class Error : public std::runtime_error {
public:
    Error(std::string module, const std::string& message)
        : std::runtime_error(message), module_(std::move(module)) {}

    const std::string& module() const noexcept { return module_; }
    virtual const char* kind() const noexcept { return "error"; }

private:
    std::string module_;
};

/// Malformed or out-of-range input (bad rank, non-partition orbits, ...).
class InvalidInput : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "invalid_input"; }
};

/// The operation is well defined but outside what this tool supports.
class Unsupported : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "unsupported"; }
};

/// A precondition of a theorem-backed computation does not hold.
class PreconditionFailed : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "precondition_failed"; }
};

/// A proof-replay step could not be verified on the actual data.
class CertificateFailure : public Error {
public:
    CertificateFailure(std::string module, std::string code, const std::string& message)
        : Error(std::move(module), message), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }
    const char* kind() const noexcept override { return "certificate_failure"; }

private:
    std::string code_;
};

}  // namespace l2bs
