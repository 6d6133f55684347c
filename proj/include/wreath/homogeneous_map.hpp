#pragma once
#include <functional>
#include <map>

#include "wreath/multi_index.hpp"

namespace wreath {

/// Homogeneous polynomial map of fixed degree between coordinatized spaces,
/// stored sparsely as monomial coefficients: f(x) = sum_alpha coeff[alpha] x^alpha.
/// Zero coefficient vectors are never stored, so table equality is map equality.
class HomogeneousMap {
public:
    HomogeneousMap(std::size_t src_dim, std::size_t tgt_dim, unsigned degree)
        : src_dim_(src_dim), tgt_dim_(tgt_dim), degree_(degree) {}

    static HomogeneousMap constant(std::size_t src_dim, const Vec& value);

    /// Degree-1 map given by a matrix.
    static HomogeneousMap linear(const Mat& m);

    std::size_t src_dim() const { return src_dim_; }
    std::size_t tgt_dim() const { return tgt_dim_; }
    unsigned degree() const { return degree_; }

    const std::map<MultiIndex, Vec>& coeffs() const { return coeffs_; }
    Vec coeff(const MultiIndex& alpha) const;

    /// Accumulates value into the coefficient of x^alpha; |alpha| must equal
    /// the degree. Entries that cancel to zero are dropped.
    void add_term(const MultiIndex& alpha, const Vec& value);

    bool is_zero() const { return coeffs_.empty(); }

    Vec operator()(const Vec& x) const;

    HomogeneousMap operator+(const HomogeneousMap& other) const;
    HomogeneousMap operator-(const HomogeneousMap& other) const;
    HomogeneousMap operator-() const;
    bool operator==(const HomogeneousMap& other) const = default;

    /// Post-compose with a linear map: x -> m(f(x)).
    HomogeneousMap then(const Mat& m) const;

private:
    std::size_t src_dim_;
    std::size_t tgt_dim_;
    unsigned degree_;
    std::map<MultiIndex, Vec> coeffs_;
};

HomogeneousMap scale(const Rational& c, const HomogeneousMap& f);

/// Bilinear product: (f,g) -> sum_{alpha,beta} pair(c_alpha, d_beta) x^{alpha+beta},
/// a homogeneous map of degree deg f + deg g. `pair` must be bilinear.
HomogeneousMap combine(const HomogeneousMap& f, const HomogeneousMap& g, std::size_t tgt_dim,
                       const std::function<Vec(const Vec&, const Vec&)>& pair);

/// Derivative of f along the vector-field-shaped xi:
/// x -> sum_i xi_i(x) d f / d x_i (x), homogeneous of degree
/// deg xi + deg f - 1. A degree-0 f yields the zero map.
HomogeneousMap derive(const HomogeneousMap& xi, const HomogeneousMap& f);

/// Multi-polarization: the coefficient of t^p in f(t_1 z_1 + ... + t_r z_r).
/// Equivalently, for any multilinear u determining f, the sum of u over all
/// slot assignments placing exactly p_j arguments equal to z_j. Returns 0
/// when p has a negative entry or does not sum to deg f.
Vec polarize(const HomogeneousMap& f, const std::vector<Vec>& z, const std::vector<int>& p);

} // namespace wreath
