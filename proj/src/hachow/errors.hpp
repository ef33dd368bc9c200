#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hachow {

enum class ErrorKind {
    InvalidArgument,
    Parse,
    Admissibility,
    UnsupportedShape,
    FactorBound,
    NoDecomposition,
    Quadrature,
    Domain,
    Internal,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(ErrorKind::Parse, what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

inline Error invalid_argument(const std::string& msg) { return Error(ErrorKind::InvalidArgument, msg); }
inline Error admissibility_error(const std::string& msg) { return Error(ErrorKind::Admissibility, msg); }
inline Error unsupported_shape(const std::string& msg) { return Error(ErrorKind::UnsupportedShape, msg); }
inline Error domain_error(const std::string& msg) { return Error(ErrorKind::Domain, msg); }

}  // namespace hachow
