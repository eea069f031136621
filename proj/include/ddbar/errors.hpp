#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace ddbar {

// Domain-rule violation (codimension too small, non-realizable model, ...).
// code() is the stable machine-readable identifier, what() carries detail.
// The CLI maps these to exit code 1.
class domain_error : public std::runtime_error {
public:
    domain_error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Malformed documents, expressions and unknown names. CLI exit code 2.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string code, const std::string& detail)
        : std::runtime_error(code + ": " + detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

} // namespace ddbar
