#ifndef CHROMAPATH_ERRORS_HPP
#define CHROMAPATH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chromapath {

// Input text could not be parsed. line() is 1-based and also appears in what().
class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// A documented precondition of an operation was violated by the caller.
class precondition_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// The implementation reached a state the underlying theory rules out.
// Seeing this exception means a bug, not bad input.
class internal_inconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace chromapath

#endif
