#pragma once

#include <stdexcept>
#include <string>

namespace ybsegre {

// Malformed input data: unreadable documents, out-of-range indices,
// non-square tables, inconsistent label lists.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// An operation was called on data that violates its stated preconditions
// (e.g. orbit_report on a non-involutive map, or a degree beyond the
// certified truncation of a Groebner basis).
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// A counting or dimension identity that is a proven theorem failed at
// runtime. This never indicates bad user input; it indicates a bug in
// this library, so it derives from logic_error.
class IdentityViolation : public std::logic_error {
public:
  explicit IdentityViolation(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace ybsegre
