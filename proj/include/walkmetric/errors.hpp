#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace walkmetric {

// Base class for every failure the library reports.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& message) : std::runtime_error(message) {}
};

// Malformed input text: bad token, bad grammar, unreadable number.
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally invalid input: disconnected graph, duplicate edge, value out
// of range, broken file-level invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A name lookup failed. The CLI maps these to a distinct exit code.
class LookupError : public Error {
public:
    using Error::Error;
};

class UnknownVertexError : public LookupError {
public:
    explicit UnknownVertexError(const std::string& label)
        : LookupError("unknown vertex: " + label) {}
};

class UnknownWalkError : public LookupError {
public:
    explicit UnknownWalkError(const std::string& name)
        : LookupError("unknown walk: " + name) {}
};

// Consecutive vertices more than one hop apart; `index` is the 1-based step
// at which the sequence breaks.
class NotAWalkError : public ValidationError {
public:
    NotAWalkError(std::size_t index, const std::string& from, const std::string& to)
        : ValidationError("not a walk: step " + std::to_string(index) + " jumps from '" +
                          from + "' to '" + to + "'"),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Extension constant below the restricted Lipschitz norm of the known values.
class BadConstantError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

// Singleton proximity data contradicts the canonical representation at `index`.
class InconsistentProximityError : public Error {
public:
    InconsistentProximityError(std::size_t index, const std::string& message)
        : Error("inconsistent proximity at index " + std::to_string(index) + ": " + message),
          index_(index) {}
    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

class EmptyInputError : public Error {
public:
    using Error::Error;
};

// No path within the requested length bound.
class NoPathWithinLengthError : public Error {
public:
    using Error::Error;
};

// The domination inequality failed for a sample; indicates a bug, the
// canonical model cannot violate it.
class DominationViolatedError : public Error {
public:
    using Error::Error;
};

// The summed witness inequality failed for a family; indicates a bug.
class WitnessCheckFailedError : public Error {
public:
    using Error::Error;
};

}  // namespace walkmetric
