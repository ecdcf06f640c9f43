#ifndef ORBIJET_ERRORS_HPP
#define ORBIJET_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace orbijet
{

// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Operands live in different cyclotomic fields.
class IncompatibleField : public Error
{
public:
    using Error::Error;
};

// Division by zero and similar field errors.
class ArithmeticError : public Error
{
public:
    using Error::Error;
};

// A series coefficient was requested beyond the known truncation order.
class TruncationError : public Error
{
public:
    using Error::Error;
};

// A check needed a mode or coefficient outside its truncation window.
class WindowExceeded : public TruncationError
{
public:
    using TruncationError::TruncationError;
};

class PreconditionError : public Error
{
public:
    using Error::Error;
};

// The automorphism does not map the relation span into itself.
class IdealNotPreserved : public Error
{
public:
    using Error::Error;
};

class ParseError : public Error
{
public:
    ParseError(const std::string &msg, std::size_t line, std::size_t column)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)), line_(line),
          column_(column)
    {
    }

    std::size_t line() const
    {
        return line_;
    }
    std::size_t column() const
    {
        return column_;
    }

private:
    std::size_t line_;
    std::size_t column_;
};

class UnknownIdentifier : public ParseError
{
public:
    using ParseError::ParseError;
};

} // namespace orbijet

#endif
