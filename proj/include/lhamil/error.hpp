#pragma once

#include <stdexcept>
#include <string>

namespace lhamil {

/// Raised when an argument falls outside the window an operation accepts.
/// The message names the violated inequality.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed graph6 input.
class Graph6Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proven-impossible state was reached (e.g. no rotation index exists
/// although the degree-sum precondition holds).
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace lhamil
