#pragma once

#include <stdexcept>
#include <string>

namespace symcol {

/// Malformed or unsupported input (bad graph6, infeasible generator
/// parameters, disconnected or irregular graphs where a connected regular
/// graph is required).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search ran out of its assignment budget before it could decide.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The only connected regular graph without a distinguishing colouring.
class NotColourable : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised by distinguishing_index when no k <= max_colours works.
class ColourLimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A constructed colouring failed its final verification, or an internal
/// invariant of the layered construction was broken.
class VerificationFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace symcol
