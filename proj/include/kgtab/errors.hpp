#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kgtab {

struct SyntaxError : std::runtime_error {
    std::size_t position;
    std::string expected;
    SyntaxError(std::size_t pos, std::string exp, const std::string& found)
        : std::runtime_error("syntax error at position " + std::to_string(pos) + ": expected " + exp +
                             ", found " + found),
          position(pos),
          expected(std::move(exp)) {}
};

struct IllegalConnective : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UnknownWorld : std::runtime_error {
    explicit UnknownWorld(const std::string& w) : std::runtime_error("unknown world '" + w + "'") {}
};

struct FormatError : std::runtime_error {
    std::string location;
    FormatError(std::string loc, const std::string& msg)
        : std::runtime_error(loc.empty() ? msg : loc + ": " + msg), location(std::move(loc)) {}
};

struct ResourceLimit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotApplicable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace kgtab
