#pragma once
#include <map>

#include "wreath/formal_series.hpp"
#include "wreath/lie_algebra.hpp"

namespace wreath {

/// Bracket on vector-field-shaped series: [xi, eta] = (d eta along xi) -
/// (d xi along eta). Validity: min of the operands' validity, minus one.
FormalSeries series_bracket(const FormalSeries& xi, const FormalSeries& eta);

/// Pointwise bracket of algebra-valued series: [f,g](y) = [f(y), g(y)],
/// componentwise [f,g]_s = sum_{n+r=s} [f_n, g_r]. Validity: min of the
/// operands' validity.
FormalSeries pointwise_bracket(const FormalSeries& f, const FormalSeries& g,
                               const LieAlgebra& target);

/// A series on Y -> Y viewed on the product space Z = X x Y (X coordinates
/// first): it depends only on the Y block and acts on the Y block.
FormalSeries embed_y_series(const FormalSeries& eta, std::size_t x_dim);

/// A formal series in the Y variables whose coefficients are X -> X series:
/// entry beta holds the coefficient of the monomial y^beta. Y-degrees above
/// y_valid are unknown; absent entries below it are zero.
struct NestedSeries {
    std::size_t x_dim = 0;
    std::size_t y_dim = 0;
    int y_valid = -1;
    std::map<MultiIndex, FormalSeries> entries;

    /// Accumulate `series` (X -> X shaped) as the coefficient of y^beta.
    void add_entry(const MultiIndex& beta, const FormalSeries& series);

    /// Coefficient of y^beta at the given y; empty series when absent.
    const FormalSeries* find(const MultiIndex& beta) const;

    /// Specializes the Y variables: sum_beta y^beta * entry(beta), truncation
    /// aware (the result certifies only X-degrees every entry certifies).
    FormalSeries eval_y(const Vec& y) const;
};

/// Canonical identification into S(Z), Z = X x Y: the monomial-beta entry
/// contributes its degree-r X-component times y^beta at total degree
/// r + |beta|, valued in the X block. The result certifies total degree s
/// exactly when s <= y_valid and every entry of Y-degree n certifies X-degree
/// s - n.
FormalSeries embed_nested(const NestedSeries& t);

} // namespace wreath
