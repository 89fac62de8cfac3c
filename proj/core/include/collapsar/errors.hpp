#ifndef COLLAPSAR_ERRORS_HPP
#define COLLAPSAR_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace collapsar {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed input text (wrong arity, bad token, ...). Carries a 1-based line number.
struct ParseError : Error {
    ParseError(const std::string& msg, int line_number)
        : Error("line " + std::to_string(line_number) + ": " + msg), line(line_number) {}
    int line;
};

/// Structural constraint violated (duplicate facet, non-manifold, disconnected, ...).
struct ValidationError : Error {
    using Error::Error;
};

/// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// A resource guard declined the request (tree count over limit, vertex bound, ...).
/// `count` holds the offending quantity as a decimal string when applicable.
struct RefusalError : Error {
    RefusalError(const std::string& msg, std::string count_text = "")
        : Error(msg), count(std::move(count_text)) {}
    std::string count;
};

/// A bistellar move whose legality condition fails; the message names the condition.
struct MoveError : Error {
    using Error::Error;
};

}  // namespace collapsar

#endif
