#pragma once
#include <stdexcept>
#include <string>

namespace wreath {

/// Raised on bad input or violated preconditions (dimension mismatch,
/// malformed rationals, non-ideal subspaces, insufficient validity, ...).
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace wreath
