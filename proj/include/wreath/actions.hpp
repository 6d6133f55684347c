#pragma once
#include <string>
#include <vector>

#include "wreath/lie_series.hpp"

namespace wreath {

/// Taylor coefficients t_n of T e^T / (e^T - 1): t_0 = 1, t_1 = 1/2, odd
/// indices beyond 1 vanish, and the even ones are Bernoulli numbers divided
/// by factorials.
struct BernoulliCoeffs {
    unsigned n_max;
    std::vector<Rational> t; // t[0..n_max]
};

/// Computed by exact series division: with e^T - 1 = T H(T), invert H and
/// multiply by e^T.
BernoulliCoeffs bernoulli_t(unsigned n_max);

/// Linear assignment from a Lie algebra into the vector fields on a space,
/// stored on the source basis. Whether it is a homomorphism (an action in the
/// strict sense) is checked by verify_formal_action, never assumed.
class FormalAction {
public:
    FormalAction(LieAlgebra source, std::size_t space_dim, std::vector<FormalSeries> basis_images);

    const LieAlgebra& source() const { return source_; }
    std::size_t space_dim() const { return space_dim_; }
    int valid_through() const { return valid_through_; }

    const FormalSeries& image(std::size_t k) const { return images_[k]; }

    /// Linear extension to arbitrary source elements.
    FormalSeries image_of(const Vec& a) const;

private:
    LieAlgebra source_;
    std::size_t space_dim_;
    int valid_through_;
    std::vector<FormalSeries> images_;
};

/// The series y -> sum_n t_n (ad y)^n(b) over the algebra itself, expanded
/// symbolically to monomials, certified through degree N.
FormalSeries fundamental_action_series(const LieAlgebra& alg, const Vec& b, unsigned N);

/// The fundamental action of an algebra on itself, on the whole basis.
FormalAction fundamental_action(const LieAlgebra& alg, unsigned N);

struct ActionDiscrepancy {
    std::size_t i, j;  // source basis pair
    unsigned degree;   // first differing component degree
    std::string text;
};

struct ActionReport {
    unsigned checked_degree = 0;
    std::vector<ActionDiscrepancy> mismatches;
    bool passed() const { return mismatches.empty(); }
};

/// Compares image([e_i,e_j]) against the series bracket of the images on
/// every basis pair, through check_degree. Rejects a check_degree beyond the
/// attainable bound (min image validity - 1).
ActionReport verify_formal_action(const FormalAction& action, unsigned check_degree);

/// The derivation a -> (derivative of a along d_b) on algebra-valued series.
FormalSeries sigma_apply(const FormalSeries& d_b, const FormalSeries& a);

} // namespace wreath
