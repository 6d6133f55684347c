#pragma once
#include <vector>

#include "wreath/homogeneous_map.hpp"

namespace wreath {

/// Truncated formal series: one homogeneous component per degree 0..valid_through.
/// Degrees above valid_through are unknown, never implicitly zero; every
/// operation computes the exact validity of its result, and a validity of -1
/// means no component is certified.
class FormalSeries {
public:
    /// Zero series with the given certified range.
    FormalSeries(std::size_t src_dim, std::size_t tgt_dim, int valid_through);

    static FormalSeries empty(std::size_t src_dim, std::size_t tgt_dim) {
        return FormalSeries(src_dim, tgt_dim, -1);
    }

    std::size_t src_dim() const { return src_dim_; }
    std::size_t tgt_dim() const { return tgt_dim_; }
    int valid_through() const { return valid_through_; }
    bool endomorphism_shaped() const { return src_dim_ == tgt_dim_; }

    const HomogeneousMap& component(unsigned degree) const;
    void set_component(HomogeneousMap component);

    FormalSeries truncated(int new_valid_through) const;

    FormalSeries operator+(const FormalSeries& other) const; // validity = min
    FormalSeries operator-(const FormalSeries& other) const;
    FormalSeries operator-() const;
    bool operator==(const FormalSeries& other) const = default;

    bool is_zero() const;

    /// Sum of the certified components at x. This evaluates the stored
    /// truncation, not the full series.
    Vec eval_truncated(const Vec& x) const;

private:
    std::size_t src_dim_;
    std::size_t tgt_dim_;
    int valid_through_;
    std::vector<HomogeneousMap> components_;
};

FormalSeries scale(const Rational& c, const FormalSeries& f);

/// sum_k coeffs[k] * terms[k]; all terms must share shape and validity is
/// their minimum.
FormalSeries linear_combination(const std::vector<FormalSeries>& terms, const Vec& coeffs);

/// Componentwise equality on degrees 0..through (both series must certify
/// that range).
bool equal_through(const FormalSeries& a, const FormalSeries& b, int through);
bool zero_through(const FormalSeries& a, int through);

/// Derivative of f along xi, component s = sum_{r+m-1=s} derive(xi_r, f_m).
/// Validity: min(valid xi, valid f) - 1; a result below 0 signals that no
/// component is reliable.
FormalSeries derive_series(const FormalSeries& xi, const FormalSeries& f);

} // namespace wreath
