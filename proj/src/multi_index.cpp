#include "wreath/multi_index.hpp"

#include <algorithm>

#include "wreath/error.hpp"

namespace wreath {

MultiIndex MultiIndex::unit(std::size_t n_vars, std::size_t i) {
    std::vector<unsigned> e(n_vars, 0);
    e[i] = 1;
    return MultiIndex(std::move(e));
}

unsigned MultiIndex::degree() const {
    unsigned d = 0;
    for (unsigned e : exp_)
        d += e;
    return d;
}

MultiIndex MultiIndex::bumped(std::size_t i) const {
    std::vector<unsigned> e(exp_);
    ++e[i];
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::lowered(std::size_t i) const {
    std::vector<unsigned> e(exp_);
    if (e[i] == 0)
        throw Error("cannot lower a zero exponent");
    --e[i];
    return MultiIndex(std::move(e));
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
    if (exp_.size() != other.exp_.size())
        throw Error("multi-index length mismatch");
    std::vector<unsigned> e(exp_);
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] += other.exp_[i];
    return MultiIndex(std::move(e));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& other) const {
    if (auto c = degree() <=> other.degree(); c != 0)
        return c;
    // Within a degree: lexicographically larger exponent tuple first.
    if (exp_ == other.exp_)
        return std::strong_ordering::equal;
    return std::lexicographical_compare(other.exp_.begin(), other.exp_.end(), exp_.begin(), exp_.end())
               ? std::strong_ordering::less
               : std::strong_ordering::greater;
}

namespace {

void enumerate(std::size_t n_vars, unsigned degree, std::size_t pos, std::vector<unsigned>& cur,
               std::vector<MultiIndex>& out) {
    if (pos + 1 == n_vars) {
        cur[pos] = degree;
        out.emplace_back(cur);
        return;
    }
    for (unsigned e = 0; e <= degree; ++e) {
        cur[pos] = e;
        enumerate(n_vars, degree - e, pos + 1, cur, out);
    }
}

} // namespace

std::vector<MultiIndex> multi_indices(std::size_t n_vars, unsigned degree) {
    if (n_vars == 0)
        return degree == 0 ? std::vector<MultiIndex>{MultiIndex::zero(0)} : std::vector<MultiIndex>{};
    std::vector<MultiIndex> out;
    std::vector<unsigned> cur(n_vars, 0);
    enumerate(n_vars, degree, 0, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

Rational monomial_value(const MultiIndex& alpha, const Vec& x) {
    if (alpha.size() != x.size())
        throw Error("monomial_value: dimension mismatch");
    Rational out = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
        for (unsigned e = 0; e < alpha[i]; ++e)
            out *= x[i];
    return out;
}

std::string multi_index_str(const MultiIndex& alpha) {
    std::string out = "(";
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(alpha[i]);
    }
    out += ")";
    return out;
}

} // namespace wreath
