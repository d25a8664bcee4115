#pragma once

#include <stdexcept>
#include <string>

namespace skelite {

// Base class for all library errors. The CLI maps subclasses to exit codes:
// format -> 3, shape/domain -> 4, divergence -> 5.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Mismatched extents, too-small grids, channel mismatches.
class ShapeError : public Error {
public:
    explicit ShapeError(const std::string& msg) : Error(msg) {}
};

// Arguments outside their valid domain (bad adjacency, t outside [0,1], ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Malformed files: bad magic bytes, truncated payloads, unparseable configs.
class FormatError : public Error {
public:
    explicit FormatError(const std::string& msg) : Error(msg) {}
};

// Non-finite loss during optimization.
class DivergenceError : public Error {
public:
    explicit DivergenceError(const std::string& msg) : Error(msg) {}
};

} // namespace skelite
