#include "wreath/actions.hpp"

#include "wreath/error.hpp"

namespace wreath {

BernoulliCoeffs bernoulli_t(unsigned n_max) {
    // h[k] = 1/(k+1)!  so that e^T - 1 = T H(T); H has constant term 1.
    std::vector<Rational> h(n_max + 1);
    for (unsigned k = 0; k <= n_max; ++k)
        h[k] = Rational(1, factorial(k + 1));
    // Invert H: sum_{i+j=k} h[i] inv[j] = [k == 0].
    std::vector<Rational> inv(n_max + 1);
    inv[0] = 1;
    for (unsigned k = 1; k <= n_max; ++k) {
        Rational s = 0;
        for (unsigned j = 0; j < k; ++j)
            s += h[k - j] * inv[j];
        inv[k] = -s;
    }
    // G = e^T * H^{-1}.
    BernoulliCoeffs out{n_max, std::vector<Rational>(n_max + 1)};
    for (unsigned k = 0; k <= n_max; ++k) {
        Rational s = 0;
        for (unsigned j = 0; j <= k; ++j)
            s += Rational(1, factorial(k - j)) * inv[j];
        out.t[k] = s;
    }
    return out;
}

FormalAction::FormalAction(LieAlgebra source, std::size_t space_dim,
                           std::vector<FormalSeries> basis_images)
    : source_(std::move(source)), space_dim_(space_dim), images_(std::move(basis_images)) {
    if (images_.size() != source_.dim())
        throw Error("formal action: one image per source basis element required");
    valid_through_ = images_.empty() ? -1 : images_.front().valid_through();
    for (const FormalSeries& img : images_) {
        if (img.src_dim() != space_dim_ || img.tgt_dim() != space_dim_)
            throw Error("formal action: images must be fields on the acted space");
        if (img.valid_through() != valid_through_)
            throw Error("formal action: images must share one validity bound");
    }
}

FormalSeries FormalAction::image_of(const Vec& a) const {
    if (a.size() != source_.dim())
        throw Error("formal action: element length does not match " + source_.name());
    return linear_combination(images_, a);
}

FormalSeries fundamental_action_series(const LieAlgebra& alg, const Vec& b, unsigned N) {
    if (b.size() != alg.dim())
        throw Error("fundamental action: element length does not match " + alg.name());
    const BernoulliCoeffs t = bernoulli_t(N);
    FormalSeries out(alg.dim(), alg.dim(), static_cast<int>(N));
    // power = (ad y)^n(b) with y treated as a vector of indeterminates:
    // each step maps the coefficient at y^alpha through every [e_i, .].
    HomogeneousMap power = HomogeneousMap::constant(alg.dim(), b);
    for (unsigned n = 0; n <= N; ++n) {
        out.set_component(scale(t.t[n], power));
        if (n == N)
            break;
        HomogeneousMap next(alg.dim(), alg.dim(), n + 1);
        for (const auto& [alpha, value] : power.coeffs())
            for (std::size_t i = 0; i < alg.dim(); ++i) {
                Vec ei = zero_vec(alg.dim());
                ei[i] = 1;
                next.add_term(alpha.bumped(i), bracket(alg, ei, value));
            }
        power = std::move(next);
    }
    return out;
}

FormalAction fundamental_action(const LieAlgebra& alg, unsigned N) {
    std::vector<FormalSeries> images;
    for (std::size_t k = 0; k < alg.dim(); ++k) {
        Vec ek = zero_vec(alg.dim());
        ek[k] = 1;
        images.push_back(fundamental_action_series(alg, ek, N));
    }
    return FormalAction(alg, alg.dim(), std::move(images));
}

ActionReport verify_formal_action(const FormalAction& action, unsigned check_degree) {
    const int attainable = action.valid_through() - 1;
    if (static_cast<int>(check_degree) > attainable)
        throw Error("verify_formal_action: check degree " + std::to_string(check_degree) +
                    " exceeds attainable validity " + std::to_string(attainable));
    ActionReport report;
    report.checked_degree = check_degree;
    const LieAlgebra& src = action.source();
    for (std::size_t i = 0; i < src.dim(); ++i)
        for (std::size_t j = i + 1; j < src.dim(); ++j) {
            const FormalSeries lhs = action.image_of(src.basis_bracket(i, j));
            const FormalSeries rhs = series_bracket(action.image(i), action.image(j));
            for (unsigned s = 0; s <= check_degree; ++s)
                if (!(lhs.component(s) == rhs.component(s)))
                    report.mismatches.push_back(
                        {i, j, s,
                         "image([" + src.labels()[i] + ", " + src.labels()[j] +
                             "]) differs from the bracket of images at degree " +
                             std::to_string(s)});
        }
    return report;
}

FormalSeries sigma_apply(const FormalSeries& d_b, const FormalSeries& a) {
    if (!d_b.endomorphism_shaped())
        throw Error("sigma_apply: the acting series must be Y -> Y shaped");
    if (d_b.src_dim() != a.src_dim())
        throw Error("sigma_apply: source dimension mismatch");
    return derive_series(d_b, a);
}

} // namespace wreath
