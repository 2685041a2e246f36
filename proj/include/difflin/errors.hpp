#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace difflin {

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(const std::string& msg, std::size_t pos)
        : std::runtime_error("syntax error at " + std::to_string(pos) + ": " + msg), detail_(msg), pos_(pos) {}
    std::size_t position() const { return pos_; }
    // The message without the position prefix.
    const std::string& detail() const { return detail_; }

private:
    std::string detail_;
    std::size_t pos_;
};

class TypeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raised for coefficients a semiring cannot hold (negation over natural,
// a non-integral multinomial over integer, ...).
class RingError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnboundedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace difflin
