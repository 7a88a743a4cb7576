#ifndef BUNKBED_ERRORS_HPP
#define BUNKBED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bunkbed {

// Bad user input: out-of-range vertices, u == v, malformed values.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed text input; message carries the offending line number.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation refused because it would exceed its size cap. Callers may
// treat this as "skipped" rather than "failed".
class SizeGuardError : public std::runtime_error {
public:
    explicit SizeGuardError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bunkbed

#endif
