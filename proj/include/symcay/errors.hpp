#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symcay {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed textual input (cycle notation, generator files, edge lists).
/// Carries the byte offset of the offending token within the parsed text.
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Operands act on different domains.
class DegreeMismatch : public Error {
public:
    DegreeMismatch(int lhs, int rhs)
        : Error("degree mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}
};

/// A configured enumeration or size cap would be exceeded.  The operation
/// stops early; no partial result is published.
class CapExceeded : public Error {
public:
    explicit CapExceeded(const std::string& msg) : Error(msg) {}
};

/// A subgroup relation required by the operation does not hold.
class NotSubgroup : public Error {
public:
    explicit NotSubgroup(const std::string& msg) : Error(msg) {}
};

/// A group expected to act regularly on some domain does not.
class NotRegular : public Error {
public:
    explicit NotRegular(const std::string& msg) : Error(msg) {}
};

/// A subgroup expected to be normal is not.
class NotNormal : public Error {
public:
    explicit NotNormal(const std::string& msg) : Error(msg) {}
};

/// A permutation supplied as a graph automorphism does not preserve edges.
class NonAutomorphism : public Error {
public:
    explicit NonAutomorphism(const std::string& msg) : Error(msg) {}
};

/// A connection set violates its invariants (identity member, not
/// inverse-closed, duplicates, or elements outside the group).
class InvalidConnectionSet : public Error {
public:
    explicit InvalidConnectionSet(const std::string& msg) : Error(msg) {}
};

/// A bundled data file does not match its pinned digest.
class DataCorrupt : public Error {
public:
    explicit DataCorrupt(const std::string& msg) : Error(msg) {}
};

/// An argument is structurally invalid (bad images array, unsupported
/// parameter combination, unknown name).
class InvalidParameter : public Error {
public:
    explicit InvalidParameter(const std::string& msg) : Error(msg) {}
};

}  // namespace symcay
