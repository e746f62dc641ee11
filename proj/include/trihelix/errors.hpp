#ifndef TRIHELIX_ERRORS_HPP
#define TRIHELIX_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trihelix {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input file; carries the 1-based line number where parsing stopped.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line)
        : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A probability distribution or joint failed its sanity checks.
class ValidationError : public Error {
public:
    using Error::Error;
};

// Inclusive co-occurrence counts that cannot come from any real set system;
// names the derived cell that went negative.
class InconsistencyError : public Error {
public:
    InconsistencyError(const std::string& cell, const std::string& what)
        : Error(what), cell_(cell) {}
    const std::string& cell() const { return cell_; }

private:
    std::string cell_;
};

// Observed mass fell on a cell the prediction assigns zero probability.
class DivergenceError : public Error {
public:
    using Error::Error;
};

} // namespace trihelix

#endif
