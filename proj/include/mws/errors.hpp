#pragma once

#include <stdexcept>
#include <string>

namespace mws {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimePower : Error {
    using Error::Error;
};
struct TooLarge : Error {
    using Error::Error;
};
struct DivisionByZero : Error {
    using Error::Error;
};
struct FieldMismatch : Error {
    using Error::Error;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct TooLargeToEnumerate : Error {
    using Error::Error;
};
struct TooLongToMaterialize : Error {
    using Error::Error;
};
struct DegenerateCode : Error {
    using Error::Error;
};
struct ZeroRepetition : Error {
    using Error::Error;
};
struct PropertyAViolated : Error {
    using Error::Error;
};
struct PropertyBViolated : Error {
    using Error::Error;
};
struct PairwiseVMismatch : Error {
    using Error::Error;
};
struct NotMWS : Error {
    using Error::Error;
};
struct LengthTooLarge : Error {
    using Error::Error;
};
struct UnsupportedQ : Error {
    using Error::Error;
};
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line, std::size_t col)
        : Error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(col)),
          line(line),
          col(col) {}
    std::size_t line;
    std::size_t col;
};
struct EncodingOutOfRange : Error {
    using Error::Error;
};
struct NonCanonicalPoint : Error {
    using Error::Error;
};

}  // namespace mws
