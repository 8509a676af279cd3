#pragma once

#include <stdexcept>
#include <string>

namespace polybel {

// Malformed external input (JSON, CLI files). CLI exit code 2.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Caller violated a documented precondition or invariant. CLI exit code 3.
class ContractError : public std::runtime_error {
public:
    explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

// Internal invariant failure; indicates a bug. CLI exit code 4.
class InternalError : public std::runtime_error {
public:
    explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polybel
