#pragma once

#include <stdexcept>
#include <string>

namespace cds {

// Base class for everything this library throws on purpose.
struct CdsError : std::runtime_error {
    explicit CdsError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input text (instance files, rational strings, result files).
struct ParseError : CdsError {
    explicit ParseError(const std::string& msg) : CdsError(msg) {}
};

// Structurally well-formed input that violates an instance invariant.
struct ValidationError : CdsError {
    explicit ValidationError(const std::string& msg) : CdsError(msg) {}
};

struct DisconnectedGraph : ValidationError {
    explicit DisconnectedGraph(const std::string& msg) : ValidationError(msg) {}
};

struct NonPositiveCost : ValidationError {
    explicit NonPositiveCost(const std::string& msg) : ValidationError(msg) {}
};

struct MalformedEdge : ValidationError {
    explicit MalformedEdge(const std::string& msg) : ValidationError(msg) {}
};

// API misuse: operation requires a node outside the selected set.
struct NodeInC : CdsError {
    explicit NodeInC(const std::string& msg) : CdsError(msg) {}
};

// Set arguments that must be disjoint are not.
struct Overlap : CdsError {
    explicit Overlap(const std::string& msg) : CdsError(msg) {}
};

struct InvalidPrefix : CdsError {
    explicit InvalidPrefix(const std::string& msg) : CdsError(msg) {}
};

struct InvalidStar : CdsError {
    explicit InvalidStar(const std::string& msg) : CdsError(msg) {}
};

// Exhaustive star enumeration refuses instances with large degrees.
struct DegreeTooLarge : CdsError {
    explicit DegreeTooLarge(const std::string& msg) : CdsError(msg) {}
};

// Exact solver refuses instances above its node limit.
struct TooLarge : CdsError {
    explicit TooLarge(const std::string& msg) : CdsError(msg) {}
};

// Random generation failed to produce a connected graph within the retry cap.
struct GaveUp : CdsError {
    explicit GaveUp(const std::string& msg) : CdsError(msg) {}
};

struct NonPositive : CdsError {
    explicit NonPositive(const std::string& msg) : CdsError(msg) {}
};

struct MismatchedInstance : CdsError {
    explicit MismatchedInstance(const std::string& msg) : CdsError(msg) {}
};

// An internal invariant was violated; indicates a bug, maps to exit code 4.
struct InternalError : CdsError {
    explicit InternalError(const std::string& msg) : CdsError(msg) {}
};

} // namespace cds
