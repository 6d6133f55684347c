#include "wreath/lie_series.hpp"

#include <algorithm>
#include <limits>

#include "wreath/error.hpp"

namespace wreath {

FormalSeries series_bracket(const FormalSeries& xi, const FormalSeries& eta) {
    if (!xi.endomorphism_shaped() || !eta.endomorphism_shaped() || xi.src_dim() != eta.src_dim())
        throw Error("series_bracket: both series must be fields on the same space");
    return derive_series(xi, eta) - derive_series(eta, xi);
}

FormalSeries pointwise_bracket(const FormalSeries& f, const FormalSeries& g,
                               const LieAlgebra& target) {
    if (f.src_dim() != g.src_dim())
        throw Error("pointwise_bracket: source dimension mismatch");
    if (f.tgt_dim() != target.dim() || g.tgt_dim() != target.dim())
        throw Error("pointwise_bracket: series are not valued in " + target.name());
    const int valid = std::min(f.valid_through(), g.valid_through());
    FormalSeries out(f.src_dim(), target.dim(), valid);
    const auto pair = [&target](const Vec& a, const Vec& b) { return bracket(target, a, b); };
    for (int s = 0; s <= valid; ++s) {
        HomogeneousMap comp(f.src_dim(), target.dim(), static_cast<unsigned>(s));
        for (int n = 0; n <= s; ++n)
            comp = comp + combine(f.component(n), g.component(s - n), target.dim(), pair);
        out.set_component(std::move(comp));
    }
    return out;
}

namespace {

MultiIndex shift_into_y_block(const MultiIndex& beta, std::size_t x_dim) {
    std::vector<unsigned> e(x_dim + beta.size(), 0);
    for (std::size_t i = 0; i < beta.size(); ++i)
        e[x_dim + i] = beta[i];
    return MultiIndex(std::move(e));
}

MultiIndex join_blocks(const MultiIndex& alpha, const MultiIndex& beta) {
    std::vector<unsigned> e;
    e.reserve(alpha.size() + beta.size());
    for (std::size_t i = 0; i < alpha.size(); ++i)
        e.push_back(alpha[i]);
    for (std::size_t i = 0; i < beta.size(); ++i)
        e.push_back(beta[i]);
    return MultiIndex(std::move(e));
}

Vec pad_left(const Vec& v, std::size_t x_dim, std::size_t total) {
    Vec out = zero_vec(total);
    for (std::size_t i = 0; i < v.size(); ++i)
        out[x_dim + i] = v[i];
    return out;
}

Vec pad_right(const Vec& v, std::size_t total) {
    Vec out = zero_vec(total);
    for (std::size_t i = 0; i < v.size(); ++i)
        out[i] = v[i];
    return out;
}

} // namespace

FormalSeries embed_y_series(const FormalSeries& eta, std::size_t x_dim) {
    if (!eta.endomorphism_shaped())
        throw Error("embed_y_series: series must be Y -> Y shaped");
    const std::size_t z_dim = x_dim + eta.src_dim();
    FormalSeries out(z_dim, z_dim, eta.valid_through());
    for (int m = 0; m <= eta.valid_through(); ++m) {
        HomogeneousMap comp(z_dim, z_dim, static_cast<unsigned>(m));
        for (const auto& [beta, value] : eta.component(m).coeffs())
            comp.add_term(shift_into_y_block(beta, x_dim), pad_left(value, x_dim, z_dim));
        out.set_component(std::move(comp));
    }
    return out;
}

void NestedSeries::add_entry(const MultiIndex& beta, const FormalSeries& series) {
    if (beta.size() != y_dim)
        throw Error("nested series: monomial length does not match y_dim");
    if (series.src_dim() != x_dim || series.tgt_dim() != x_dim)
        throw Error("nested series: entry must be an X -> X series");
    if (static_cast<int>(beta.degree()) > y_valid)
        throw Error("nested series: monomial degree exceeds y_valid");
    auto [it, inserted] = entries.emplace(beta, series);
    if (!inserted)
        it->second = it->second + series;
}

const FormalSeries* NestedSeries::find(const MultiIndex& beta) const {
    auto it = entries.find(beta);
    return it == entries.end() ? nullptr : &it->second;
}

FormalSeries NestedSeries::eval_y(const Vec& y) const {
    if (y.size() != y_dim)
        throw Error("nested series: evaluation point has wrong dimension");
    int valid = y_valid < 0 ? -1 : std::numeric_limits<int>::max();
    for (const auto& [beta, series] : entries)
        valid = std::min(valid, series.valid_through());
    if (entries.empty())
        valid = -1;
    FormalSeries out(x_dim, x_dim, valid);
    for (const auto& [beta, series] : entries) {
        const Rational weight = monomial_value(beta, y);
        if (weight == 0)
            continue;
        out = out + scale(weight, series.truncated(valid));
    }
    return out;
}

FormalSeries embed_nested(const NestedSeries& t) {
    const std::size_t z_dim = t.x_dim + t.y_dim;
    // Total degree s is certified while s <= y_valid and every entry of
    // Y-degree n still certifies X-degree s - n.
    int valid = t.y_valid;
    for (const auto& [beta, series] : t.entries)
        valid = std::min(valid, static_cast<int>(beta.degree()) + series.valid_through());
    std::vector<HomogeneousMap> comps;
    for (int s = 0; s <= valid; ++s)
        comps.emplace_back(z_dim, z_dim, static_cast<unsigned>(s));
    for (const auto& [beta, series] : t.entries) {
        const int n = static_cast<int>(beta.degree());
        for (int r = 0; r + n <= valid; ++r)
            for (const auto& [alpha, value] : series.component(r).coeffs())
                comps[r + n].add_term(join_blocks(alpha, beta), pad_right(value, z_dim));
    }
    FormalSeries out(z_dim, z_dim, valid);
    for (auto& comp : comps)
        out.set_component(std::move(comp));
    return out;
}

} // namespace wreath
