#ifndef LEVELCOMB_COMMON_HPP
#define LEVELCOMB_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace levelcomb {

using nat = std::uint64_t;

/// Base class for all structured failures raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// 64-bit checked arithmetic overflowed (pairing codes, index arithmetic).
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

/// A frame, table or scan was asked for an index beyond what can be built.
struct DepthError : Error {
    nat needed;
    DepthError(const std::string& what, nat needed_depth)
        : Error(what), needed(needed_depth) {}
};

/// An oracle search exhausted its bound without a witness.
struct OracleError : Error {
    explicit OracleError(const std::string& what) : Error(what) {}
};

/// A checked precondition does not hold; carries the offending datum.
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& what) : Error(what) {}
};

inline nat checked_add(nat a, nat b) {
    nat r;
    if (__builtin_add_overflow(a, b, &r))
        throw OverflowError("add overflow: " + std::to_string(a) + " + " + std::to_string(b));
    return r;
}

inline nat checked_mul(nat a, nat b) {
    nat r;
    if (__builtin_mul_overflow(a, b, &r))
        throw OverflowError("mul overflow: " + std::to_string(a) + " * " + std::to_string(b));
    return r;
}

} // namespace levelcomb

#endif
