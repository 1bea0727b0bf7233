#pragma once

#include <stdexcept>
#include <string>

namespace artin {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    int line;
    ParseError(int line_, const std::string& reason)
        : Error("line " + std::to_string(line_) + ": " + reason), line(line_) {}
};

struct LabelError : ParseError {
    LabelError(int line_, const std::string& reason) : ParseError(line_, reason) {}
};

struct SizeError : Error {
    using Error::Error;
};

struct BudgetError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct CertificationError : Error {
    using Error::Error;
};

struct UnresolvedBallError : Error {
    using Error::Error;
};

} // namespace artin
