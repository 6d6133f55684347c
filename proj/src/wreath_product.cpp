#include "wreath/wreath_product.hpp"

#include "wreath/error.hpp"

namespace wreath {

WreathProduct::WreathProduct(LieAlgebra a, LieAlgebra b, unsigned order)
    : WreathProduct(std::move(a), b, fundamental_action(b, order), order) {}

WreathProduct::WreathProduct(LieAlgebra a, LieAlgebra b, FormalAction action, unsigned order)
    : a_(std::move(a)), b_(std::move(b)), action_(std::move(action)), order_(order) {
    if (action_.source().dim() != b_.dim())
        throw Error("wreath product: action source must be " + b_.name());
    if (action_.valid_through() < static_cast<int>(order_))
        throw Error("wreath product: action does not certify the requested order");
}

WreathElement WreathProduct::element(FormalSeries series, Vec point) const {
    if (series.src_dim() != y_dim() || series.tgt_dim() != a_.dim())
        throw Error("wreath element: series must map Y into " + a_.name());
    if (point.size() != b_.dim())
        throw Error("wreath element: point must lie in " + b_.name());
    if (series.valid_through() < static_cast<int>(order_))
        throw Error("wreath element: series does not certify order " + std::to_string(order_));
    return WreathElement{series.truncated(static_cast<int>(order_)), std::move(point)};
}

WreathElement WreathProduct::constant_element(const Vec& value, Vec point) const {
    FormalSeries series(y_dim(), a_.dim(), static_cast<int>(order_));
    series.set_component(HomogeneousMap::constant(y_dim(), value));
    return element(std::move(series), std::move(point));
}

WreathElement wreath_bracket(const WreathProduct& w, const WreathElement& u,
                             const WreathElement& v) {
    if (u.series.src_dim() != w.y_dim() || v.series.src_dim() != w.y_dim() ||
        u.series.tgt_dim() != w.algebra_a().dim() || v.series.tgt_dim() != w.algebra_a().dim())
        throw Error("wreath_bracket: elements do not fit this product");
    if (u.point.size() != w.algebra_b().dim() || v.point.size() != w.algebra_b().dim())
        throw Error("wreath_bracket: points do not lie in " + w.algebra_b().name());
    if (u.series.valid_through() < 1 || v.series.valid_through() < 1)
        throw Error("wreath_bracket: insufficient series validity (need at least 1)");
    const FormalSeries d_u = w.action().image_of(u.point);
    const FormalSeries d_v = w.action().image_of(v.point);
    FormalSeries series = pointwise_bracket(u.series, v.series, w.algebra_a()) +
                          sigma_apply(d_u, v.series) - sigma_apply(d_v, u.series);
    Vec point = bracket(w.algebra_b(), u.point, v.point);
    return WreathElement{std::move(series), std::move(point)};
}

FormalSeries triangular_action(const WreathProduct& w, const FormalAction& d_on_x,
                               const WreathElement& element) {
    if (d_on_x.source().dim() != w.algebra_a().dim())
        throw Error("triangular_action: the X action must act for " + w.algebra_a().name());
    if (element.series.src_dim() != w.y_dim() || element.series.tgt_dim() != w.algebra_a().dim())
        throw Error("triangular_action: element does not fit this product");
    const std::size_t x_dim = d_on_x.space_dim();

    // D applied to the series degree by degree: the coefficient of y^beta is
    // an A-element, its image an X -> X series.
    NestedSeries nested;
    nested.x_dim = x_dim;
    nested.y_dim = w.y_dim();
    nested.y_valid = element.series.valid_through();
    for (int n = 0; n <= element.series.valid_through(); ++n)
        for (const auto& [beta, value] : element.series.component(n).coeffs())
            nested.add_entry(beta, d_on_x.image_of(value));

    const FormalSeries from_a = embed_nested(nested);
    const FormalSeries from_b = embed_y_series(w.action().image_of(element.point), x_dim);
    return from_a + from_b;
}

} // namespace wreath
