#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidfloor {

/// Base class for all errors raised by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two words with different strand counts were combined.
class strand_mismatch : public error {
public:
    using error::error;
};

/// A word or letter violates a structural invariant (strand count < 2,
/// generator index out of range, sign not in {+1, -1}).
class invalid_braid : public error {
public:
    using error::error;
};

/// sigma_classify was handed a word whose minimal-index letters carry both
/// signs; the caller skipped handle reduction.
class unreduced_word : public error {
public:
    using error::error;
};

/// Handle reduction exceeded the configured step limit. Reduction provably
/// terminates, so hitting the valve signals an implementation bug rather
/// than a long legal run.
class step_limit_exceeded : public error {
public:
    using error::error;
};

/// The Dehornoy floor scan passed its cap of length(w) + 1.
class floor_cap_exceeded : public error {
public:
    using error::error;
};

/// A knot-only computation was requested for a multi-component closure.
class not_a_knot : public error {
public:
    using error::error;
};

/// Braid grammar text could not be parsed; position() is the byte offset
/// of the offending character.
class parse_error : public error {
public:
    parse_error(const std::string& what, std::size_t position)
        : error(what), position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// An identity that must hold by theorem failed (inexact polynomial
/// division, parity violation, catalogue certification). Always a bug.
class internal_error : public error {
public:
    using error::error;
};

}  // namespace braidfloor
