#pragma once

#include <stdexcept>
#include <string>

namespace tightpaths {

/// Input text could not be read as the expected format.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Structurally well-formed input that violates a domain invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The exhaustive reference search hit its safety cap.
class OracleCapError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace tightpaths
