#ifndef BGAP_ERROR_HPP
#define BGAP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace bgap {

// Input, configuration and domain problems. The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t line)
        : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class DuplicateError : public InputError {
public:
    using InputError::InputError;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class AlignmentError : public InputError {
public:
    using InputError::InputError;
};

class CoverageError : public InputError {
public:
    using InputError::InputError;
};

class ConfigError : public InputError {
public:
    using InputError::InputError;
};

class SampleSizeError : public InputError {
public:
    using InputError::InputError;
};

class DegenerateRegressorError : public InputError {
public:
    using InputError::InputError;
};

// A numerical check of a model property failed. Exit code 1.
class PropertyViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace bgap

#endif
