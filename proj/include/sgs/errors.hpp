#pragma once

#include <stdexcept>
#include <string>

namespace sgs {

enum class Errc {
    MissingZero,
    NotClosed,
    NotCofinite,
    BoundExhausted,
    ResourceLimit,
    BadSize,
    OutOfRange,
    WrongFamily,
    NotInImage,
    IndexOutOfWindow,
    InfeasibleFamily,
    DomainError,
    DimensionMismatch,
    GapInSeries,
    DegenerateSegment,
    VersionMismatch,
    CorruptLine,
    IoError,
    ParseError,
};

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace sgs
