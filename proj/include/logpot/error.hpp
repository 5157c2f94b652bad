#pragma once

#include <stdexcept>
#include <string>

namespace logpot {

/// Invalid input: malformed data, violated preconditions, bad shapes.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative method ran out of its sweep or iteration budget.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace logpot
