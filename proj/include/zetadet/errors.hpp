#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetadet {

// Base class for every structured error raised by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Evaluation requested exactly at a pole (gamma poles, w=1 of the Hurwitz
// zeta, s=0 of the determinant).
class PoleError : public Error {
public:
    using Error::Error;
};

// Input outside the operating domain (Re(x) <= 0, the negative real cut,
// invalid precision parameters, non-finite intermediate results).
class DomainError : public Error {
public:
    using Error::Error;
};

// Malformed polynomial or number text; carries the offset of the failure
// and a description of what was expected there.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position, std::string expected)
        : Error(message), position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

// Parsed polynomial is constant (degree 0), which cannot define a field.
class DegreeError : public Error {
public:
    using Error::Error;
};

// gcd(p, p') is non-constant; Sturm root counting requires squarefree input.
class NotSquarefreeError : public Error {
public:
    using Error::Error;
};

}  // namespace zetadet
