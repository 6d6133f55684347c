#pragma once
#include "wreath/actions.hpp"

namespace wreath {

/// Element of A[[Y]] x B: an A-valued series in the Y variables plus a point
/// of B.
struct WreathElement {
    FormalSeries series;
    Vec point;
};

/// The semidirect product of B by A[[Y]] relative to the derivations induced
/// by an action d of B on Y. By default d is the fundamental action of B on
/// itself (so Y carries the coordinates of B).
class WreathProduct {
public:
    WreathProduct(LieAlgebra a, LieAlgebra b, unsigned order);
    WreathProduct(LieAlgebra a, LieAlgebra b, FormalAction action, unsigned order);

    const LieAlgebra& algebra_a() const { return a_; }
    const LieAlgebra& algebra_b() const { return b_; }
    const FormalAction& action() const { return action_; }
    std::size_t y_dim() const { return action_.space_dim(); }
    unsigned order() const { return order_; }

    /// Validates dimensions and truncates the series part to the product's
    /// order. The series must certify at least the full order.
    WreathElement element(FormalSeries series, Vec point) const;

    /// Element with a constant series.
    WreathElement constant_element(const Vec& value, Vec point) const;

private:
    LieAlgebra a_;
    LieAlgebra b_;
    FormalAction action_;
    unsigned order_;
};

/// [(a,b), (a',b')] = ([a,a'] + d_b a' - d_{b'} a, [b,b']). The series part
/// loses one certified degree through the derivative terms.
WreathElement wreath_bracket(const WreathProduct& w, const WreathElement& u,
                             const WreathElement& v);

/// The field D_a + d_b on Z = X x Y (X block first), where D is an action of
/// A on X: the X block carries D applied to the series coefficients of a, the
/// Y block carries the image of b under the product's own action.
FormalSeries triangular_action(const WreathProduct& w, const FormalAction& d_on_x,
                               const WreathElement& element);

} // namespace wreath
