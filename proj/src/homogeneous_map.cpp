#include "wreath/homogeneous_map.hpp"

#include "wreath/error.hpp"

namespace wreath {

HomogeneousMap HomogeneousMap::constant(std::size_t src_dim, const Vec& value) {
    HomogeneousMap f(src_dim, value.size(), 0);
    f.add_term(MultiIndex::zero(src_dim), value);
    return f;
}

HomogeneousMap HomogeneousMap::linear(const Mat& m) {
    HomogeneousMap f(m.cols(), m.rows(), 1);
    for (std::size_t j = 0; j < m.cols(); ++j)
        f.add_term(MultiIndex::unit(m.cols(), j), m.col(j));
    return f;
}

Vec HomogeneousMap::coeff(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? zero_vec(tgt_dim_) : it->second;
}

void HomogeneousMap::add_term(const MultiIndex& alpha, const Vec& value) {
    if (alpha.size() != src_dim_ || alpha.degree() != degree_)
        throw Error("add_term: multi-index does not fit map shape");
    if (value.size() != tgt_dim_)
        throw Error("add_term: value dimension mismatch");
    if (wreath::is_zero(value))
        return;
    auto [it, inserted] = coeffs_.emplace(alpha, value);
    if (!inserted) {
        it->second = add(it->second, value);
        if (wreath::is_zero(it->second))
            coeffs_.erase(it);
    }
}

Vec HomogeneousMap::operator()(const Vec& x) const {
    if (x.size() != src_dim_)
        throw Error("eval: argument dimension mismatch");
    Vec out = zero_vec(tgt_dim_);
    for (const auto& [alpha, value] : coeffs_) {
        const Rational m = monomial_value(alpha, x);
        if (m == 0)
            continue;
        for (std::size_t k = 0; k < tgt_dim_; ++k)
            out[k] += m * value[k];
    }
    return out;
}

HomogeneousMap HomogeneousMap::operator+(const HomogeneousMap& other) const {
    if (src_dim_ != other.src_dim_ || tgt_dim_ != other.tgt_dim_ || degree_ != other.degree_)
        throw Error("homogeneous map sum: shape mismatch");
    HomogeneousMap out(*this);
    for (const auto& [alpha, value] : other.coeffs_)
        out.add_term(alpha, value);
    return out;
}

HomogeneousMap HomogeneousMap::operator-(const HomogeneousMap& other) const {
    return *this + (-other);
}

HomogeneousMap HomogeneousMap::operator-() const { return scale(Rational(-1), *this); }

HomogeneousMap HomogeneousMap::then(const Mat& m) const {
    if (m.cols() != tgt_dim_)
        throw Error("then: linear map does not accept this target");
    HomogeneousMap out(src_dim_, m.rows(), degree_);
    for (const auto& [alpha, value] : coeffs_)
        out.add_term(alpha, m.apply(value));
    return out;
}

HomogeneousMap scale(const Rational& c, const HomogeneousMap& f) {
    HomogeneousMap out(f.src_dim(), f.tgt_dim(), f.degree());
    if (c == 0)
        return out;
    for (const auto& [alpha, value] : f.coeffs())
        out.add_term(alpha, scale(c, value));
    return out;
}

HomogeneousMap combine(const HomogeneousMap& f, const HomogeneousMap& g, std::size_t tgt_dim,
                       const std::function<Vec(const Vec&, const Vec&)>& pair) {
    if (f.src_dim() != g.src_dim())
        throw Error("combine: source dimension mismatch");
    HomogeneousMap out(f.src_dim(), tgt_dim, f.degree() + g.degree());
    for (const auto& [alpha, fv] : f.coeffs())
        for (const auto& [beta, gv] : g.coeffs())
            out.add_term(alpha + beta, pair(fv, gv));
    return out;
}

HomogeneousMap derive(const HomogeneousMap& xi, const HomogeneousMap& f) {
    if (xi.src_dim() != xi.tgt_dim())
        throw Error("derive: direction must be endomorphism-shaped");
    if (xi.src_dim() != f.src_dim())
        throw Error("derive: source dimension mismatch");
    const unsigned out_degree = f.degree() == 0 ? 0 : xi.degree() + f.degree() - 1;
    HomogeneousMap out(f.src_dim(), f.tgt_dim(), out_degree);
    if (f.degree() == 0)
        return out; // constants have no derivative
    for (const auto& [alpha, c] : f.coeffs())
        for (std::size_t i = 0; i < f.src_dim(); ++i) {
            if (alpha[i] == 0)
                continue;
            const MultiIndex dalpha = alpha.lowered(i);
            const Rational exponent(alpha[i]);
            for (const auto& [beta, v] : xi.coeffs()) {
                if (v[i] == 0)
                    continue;
                out.add_term(beta + dalpha, scale(exponent * v[i], c));
            }
        }
    return out;
}

namespace {

using ScalarPoly = std::map<MultiIndex, Rational>;

// (sum_j a_j t_j)^k expanded by the multinomial theorem.
ScalarPoly linear_form_power(const Vec& a, unsigned k) {
    ScalarPoly out;
    const Integer k_fact = factorial(k);
    for (const MultiIndex& q : multi_indices(a.size(), k)) {
        Rational coeff(k_fact);
        bool zero = false;
        for (std::size_t j = 0; j < a.size() && !zero; ++j) {
            coeff /= Rational(factorial(q[j]));
            for (unsigned e = 0; e < q[j]; ++e)
                coeff *= a[j];
            zero = coeff == 0;
        }
        if (!zero)
            out[q] = coeff;
    }
    return out;
}

ScalarPoly multiply(const ScalarPoly& a, const ScalarPoly& b) {
    ScalarPoly out;
    for (const auto& [qa, ca] : a)
        for (const auto& [qb, cb] : b) {
            const Rational c = ca * cb;
            if (c == 0)
                continue;
            auto [it, inserted] = out.emplace(qa + qb, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0)
                    out.erase(it);
            }
        }
    return out;
}

} // namespace

Vec polarize(const HomogeneousMap& f, const std::vector<Vec>& z, const std::vector<int>& p) {
    if (z.size() != p.size())
        throw Error("polarize: z and p length mismatch");
    for (const Vec& zj : z)
        if (zj.size() != f.src_dim())
            throw Error("polarize: vector dimension mismatch");
    Vec out = zero_vec(f.tgt_dim());
    int total = 0;
    for (int pj : p) {
        if (pj < 0)
            return out; // no slot assignment exists
        total += pj;
    }
    if (total != static_cast<int>(f.degree()))
        return out;
    const std::size_t r = z.size();
    std::vector<unsigned> pu(p.begin(), p.end());
    const MultiIndex target{std::move(pu)};
    for (const auto& [alpha, c] : f.coeffs()) {
        // Coefficient of t^p in prod_i (sum_j z_{j,i} t_j)^{alpha_i}.
        ScalarPoly acc{{MultiIndex::zero(r), Rational(1)}};
        for (std::size_t i = 0; i < f.src_dim() && !acc.empty(); ++i) {
            if (alpha[i] == 0)
                continue;
            Vec row(r);
            for (std::size_t j = 0; j < r; ++j)
                row[j] = z[j][i];
            acc = multiply(acc, linear_form_power(row, alpha[i]));
        }
        if (auto it = acc.find(target); it != acc.end())
            out = add(out, scale(it->second, c));
    }
    return out;
}

} // namespace wreath
