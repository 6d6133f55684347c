#pragma once
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "wreath/linalg.hpp"

namespace wreath {

/// Exponent tuple of a monomial. Ordered by degree first, then by exponents
/// (larger leading exponent first), so map iteration yields the usual
/// graded-lex listing x1^2, x1 x2, x2^2, ...
class MultiIndex {
public:
    explicit MultiIndex(std::vector<unsigned> exponents) : exp_(std::move(exponents)) {}
    static MultiIndex zero(std::size_t n_vars) { return MultiIndex(std::vector<unsigned>(n_vars, 0)); }
    static MultiIndex unit(std::size_t n_vars, std::size_t i);

    std::size_t size() const { return exp_.size(); }
    unsigned operator[](std::size_t i) const { return exp_[i]; }
    unsigned degree() const;

    MultiIndex bumped(std::size_t i) const;  // exponent i + 1
    MultiIndex lowered(std::size_t i) const; // exponent i - 1 (requires > 0)
    MultiIndex operator+(const MultiIndex& other) const;

    bool operator==(const MultiIndex& other) const = default;
    std::strong_ordering operator<=>(const MultiIndex& other) const;

    const std::vector<unsigned>& exponents() const { return exp_; }

private:
    std::vector<unsigned> exp_;
};

/// All multi-indices over n_vars of the given degree, in increasing order.
std::vector<MultiIndex> multi_indices(std::size_t n_vars, unsigned degree);

/// x^alpha.
Rational monomial_value(const MultiIndex& alpha, const Vec& x);

std::string multi_index_str(const MultiIndex& alpha);

} // namespace wreath
