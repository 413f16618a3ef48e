#pragma once

#include <stdexcept>
#include <string>

namespace automata {

/// A word contains a symbol outside the machine's alphabet, or alphabets of
/// a machine and a problem disagree.
class InputDomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A construction was asked for with parameters outside its domain, or a
/// machine violates one of its structural invariants.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured resource cap (states, enumeration size, critical length)
/// would be exceeded.
class ResourceCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed machine or report file.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace automata
