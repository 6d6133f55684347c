#pragma once
#include <string>
#include <tuple>
#include <vector>

#include "wreath/linalg.hpp"

namespace wreath {

/// Finite-dimensional Lie algebra over the rationals, given by structure
/// constants on a named basis: [e_i, e_j] = sum_k c(i,j,k) e_k.
///
/// Construction does not validate the table; check_lie_algebra reports every
/// antisymmetry and Jacobi violation, and file loading rejects invalid tables.
class LieAlgebra {
public:
    LieAlgebra(std::string name, std::vector<std::string> basis_labels,
               std::vector<Rational> structure_table);

    /// Builds the table from entries for pairs i < j; antisymmetry fills the
    /// rest and the diagonal stays zero.
    static LieAlgebra from_pairs(std::string name, std::vector<std::string> basis_labels,
                                 const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& brackets);

    static LieAlgebra abelian(std::string name, std::size_t dim);

    const std::string& name() const { return name_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    const Rational& structure(std::size_t i, std::size_t j, std::size_t k) const {
        return table_[(i * dim_ + j) * dim_ + k];
    }

    /// [e_i, e_j] as a coordinate vector.
    Vec basis_bracket(std::size_t i, std::size_t j) const;

private:
    std::string name_;
    std::size_t dim_;
    std::vector<std::string> labels_;
    std::vector<Rational> table_; // c(i,j,k), dense dim^3
};

/// Bilinear extension of the structure constants.
Vec bracket(const LieAlgebra& alg, const Vec& x, const Vec& y);

/// Adjoint map of y: the matrix of b -> [y, b].
Mat ad(const LieAlgebra& alg, const Vec& y);

struct AlgebraReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Checks antisymmetry on all pairs and the Jacobi identity on all basis
/// triples, exactly. Lists every violated instance.
AlgebraReport check_lie_algebra(const LieAlgebra& alg);

struct QuotientResult {
    LieAlgebra quotient;
    Mat projection;                      // dim(quotient) x dim(alg), kernel = span(ideal)
    std::vector<std::size_t> kept_coords; // coordinate positions carried to the quotient
};

/// Quotient by the span of ideal_basis. The ideal is echelonized and the
/// complementary coordinate positions become the quotient basis, so the
/// output is deterministic. Throws unless the span really is an ideal and
/// the given vectors are independent.
QuotientResult quotient(const LieAlgebra& alg, const std::vector<Vec>& ideal_basis);

} // namespace wreath
