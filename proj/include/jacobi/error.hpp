#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jacobi {

enum class ErrorKind {
    InvalidArgument,  // malformed parameters, out-of-range symbols
    Schema,           // code or polynomial file does not match its schema
    Mismatch,         // operands over different rings, lengths or arities
    Budget,           // enumeration would exceed the configured budget
    NonRational,      // a cyclotomic value expected to be rational is not
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace jacobi
