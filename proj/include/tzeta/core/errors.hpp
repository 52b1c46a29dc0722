#pragma once

#include <stdexcept>
#include <string>

namespace tzeta {

// Base of every error raised by the library. `kind()` is the stable
// machine-readable tag the CLI emits in its error JSON.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
    virtual const char* kind() const noexcept { return "Error"; }
};

class DomainError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "DomainError"; }
};

class PoleError : public DomainError {
public:
    using DomainError::DomainError;
    const char* kind() const noexcept override { return "PoleError"; }
};

class NormalizationError : public DomainError {
public:
    using DomainError::DomainError;
    const char* kind() const noexcept override { return "NormalizationError"; }
};

class OdeToleranceError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "OdeToleranceError"; }
};

// Raised when an operator has a zero (or non-positive) mode, so that
// log det and the contour representation are undefined.
class ZeroModeError : public DomainError {
public:
    using DomainError::DomainError;
    const char* kind() const noexcept override { return "ZeroModeError"; }
};

class SpectrumError : public DomainError {
public:
    using DomainError::DomainError;
    const char* kind() const noexcept override { return "SpectrumError"; }
};

class ParseError : public Error {
public:
    using Error::Error;
    const char* kind() const noexcept override { return "ParseError"; }
};

}  // namespace tzeta
