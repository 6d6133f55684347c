#include "wreath/formal_series.hpp"

#include "wreath/error.hpp"

namespace wreath {

FormalSeries::FormalSeries(std::size_t src_dim, std::size_t tgt_dim, int valid_through)
    : src_dim_(src_dim), tgt_dim_(tgt_dim), valid_through_(valid_through < -1 ? -1 : valid_through) {
    for (int m = 0; m <= valid_through_; ++m)
        components_.emplace_back(src_dim, tgt_dim, static_cast<unsigned>(m));
}

const HomogeneousMap& FormalSeries::component(unsigned degree) const {
    if (static_cast<int>(degree) > valid_through_)
        throw Error("component degree " + std::to_string(degree) +
                    " exceeds certified validity " + std::to_string(valid_through_));
    return components_[degree];
}

void FormalSeries::set_component(HomogeneousMap component) {
    if (component.src_dim() != src_dim_ || component.tgt_dim() != tgt_dim_)
        throw Error("set_component: shape mismatch");
    if (static_cast<int>(component.degree()) > valid_through_)
        throw Error("set_component: degree exceeds certified validity");
    components_[component.degree()] = std::move(component);
}

FormalSeries FormalSeries::truncated(int new_valid_through) const {
    if (new_valid_through >= valid_through_)
        return *this;
    FormalSeries out(src_dim_, tgt_dim_, new_valid_through);
    for (int m = 0; m <= new_valid_through; ++m)
        out.components_[m] = components_[m];
    return out;
}

FormalSeries FormalSeries::operator+(const FormalSeries& other) const {
    if (src_dim_ != other.src_dim_ || tgt_dim_ != other.tgt_dim_)
        throw Error("series sum: shape mismatch");
    FormalSeries out(src_dim_, tgt_dim_, std::min(valid_through_, other.valid_through_));
    for (int m = 0; m <= out.valid_through_; ++m)
        out.components_[m] = components_[m] + other.components_[m];
    return out;
}

FormalSeries FormalSeries::operator-(const FormalSeries& other) const { return *this + (-other); }

FormalSeries FormalSeries::operator-() const { return scale(Rational(-1), *this); }

bool FormalSeries::is_zero() const {
    for (const auto& c : components_)
        if (!c.is_zero())
            return false;
    return true;
}

Vec FormalSeries::eval_truncated(const Vec& x) const {
    Vec out = zero_vec(tgt_dim_);
    for (const auto& c : components_)
        out = add(out, c(x));
    return out;
}

FormalSeries scale(const Rational& c, const FormalSeries& f) {
    FormalSeries out(f.src_dim(), f.tgt_dim(), f.valid_through());
    for (int m = 0; m <= f.valid_through(); ++m)
        out.set_component(scale(c, f.component(m)));
    return out;
}

FormalSeries linear_combination(const std::vector<FormalSeries>& terms, const Vec& coeffs) {
    if (terms.size() != coeffs.size())
        throw Error("linear_combination: length mismatch");
    if (terms.empty())
        throw Error("linear_combination: no terms");
    FormalSeries out = scale(coeffs[0], terms[0]);
    for (std::size_t k = 1; k < terms.size(); ++k)
        out = out + scale(coeffs[k], terms[k]);
    return out;
}

bool equal_through(const FormalSeries& a, const FormalSeries& b, int through) {
    if (a.src_dim() != b.src_dim() || a.tgt_dim() != b.tgt_dim())
        return false;
    if (a.valid_through() < through || b.valid_through() < through)
        throw Error("equal_through: requested degree exceeds certified validity");
    for (int m = 0; m <= through; ++m)
        if (!(a.component(m) == b.component(m)))
            return false;
    return true;
}

bool zero_through(const FormalSeries& a, int through) {
    if (a.valid_through() < through)
        throw Error("zero_through: requested degree exceeds certified validity");
    for (int m = 0; m <= through; ++m)
        if (!a.component(m).is_zero())
            return false;
    return true;
}

FormalSeries derive_series(const FormalSeries& xi, const FormalSeries& f) {
    if (!xi.endomorphism_shaped())
        throw Error("derive_series: direction must be endomorphism-shaped");
    if (xi.src_dim() != f.src_dim())
        throw Error("derive_series: source dimension mismatch");
    const int valid = std::min(xi.valid_through(), f.valid_through()) - 1;
    FormalSeries out(f.src_dim(), f.tgt_dim(), valid);
    for (int s = 0; s <= valid; ++s) {
        HomogeneousMap g(f.src_dim(), f.tgt_dim(), static_cast<unsigned>(s));
        for (int m = 1; m <= s + 1; ++m) {
            const int r = s + 1 - m; // deg xi_r + deg f_m - 1 = s
            g = g + derive(xi.component(r), f.component(m));
        }
        out.set_component(std::move(g));
    }
    return out;
}

} // namespace wreath
