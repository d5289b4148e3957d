#ifndef MAJORKIT_ERRORS_HPP
#define MAJORKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace majorkit {

/// Shapes of operands do not match the operation's contract.
class dimension_error : public std::invalid_argument {
public:
    explicit dimension_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed textual input (rationals, matrices, operators).
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// A documented precondition of an operation does not hold for the given input.
class precondition_error : public std::invalid_argument {
public:
    explicit precondition_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace majorkit

#endif
