#include "wreath/extensions.hpp"

#include <set>
#include <stdexcept>

#include "wreath/error.hpp"
#include "wreath/sampler.hpp"

namespace wreath {

namespace {

bool is_unit_coordinate(const Vec& v, std::size_t& position) {
    std::size_t ones = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0)
            continue;
        if (v[i] != 1)
            return false;
        position = i;
        ++ones;
    }
    return ones == 1;
}

// Reuse the C label when an ideal vector is a plain coordinate vector,
// otherwise a1, a2, ...; on any clash fall back to generated names only.
std::vector<std::string> ideal_labels(const LieAlgebra& c, const std::vector<Vec>& ideal_basis) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < ideal_basis.size(); ++i) {
        std::size_t pos = 0;
        if (is_unit_coordinate(ideal_basis[i], pos))
            labels.push_back(c.labels()[pos]);
        else
            labels.push_back("a" + std::to_string(i + 1));
    }
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) {
        labels.clear();
        for (std::size_t i = 0; i < ideal_basis.size(); ++i)
            labels.push_back("a" + std::to_string(i + 1));
    }
    return labels;
}

} // namespace

Extension::Extension(LieAlgebra c, std::vector<Vec> ideal_basis)
    : c_(std::move(c)), ideal_basis_(std::move(ideal_basis)),
      a_(LieAlgebra::abelian("placeholder", 0)), b_(LieAlgebra::abelian("placeholder", 0)) {
    QuotientResult qr = quotient(c_, ideal_basis_);
    b_ = std::move(qr.quotient);
    p_ = std::move(qr.projection);
    kept_coords_ = std::move(qr.kept_coords);
    incl_ = mat_from_columns(ideal_basis_);

    const std::size_t k = ideal_basis_.size();
    std::vector<Rational> table(k * k * k, Rational(0));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            const Vec image = bracket(c_, ideal_basis_[i], ideal_basis_[j]);
            const auto coords = solve(incl_, image);
            if (!coords)
                throw std::logic_error("extension: ideal bracket escaped the ideal");
            for (std::size_t m = 0; m < k; ++m)
                table[(i * k + j) * k + m] = (*coords)[m];
        }
    a_ = LieAlgebra(c_.name() + ".ideal", ideal_labels(c_, ideal_basis_), std::move(table));
    if (!check_lie_algebra(a_).ok())
        throw std::logic_error("extension: induced ideal structure fails the Lie axioms");
}

std::optional<Vec> Extension::ideal_coords(const Vec& v) const { return solve(incl_, v); }

Extension make_extension(LieAlgebra c, std::vector<Vec> ideal_basis) {
    return Extension(std::move(c), std::move(ideal_basis));
}

Section default_section(const Extension& ext) {
    Mat s(ext.algebra_c().dim(), ext.algebra_b().dim());
    for (std::size_t j = 0; j < ext.kept_coords().size(); ++j)
        s.at(ext.kept_coords()[j], j) = 1;
    return make_section(ext, std::move(s));
}

Section make_section(const Extension& ext, Mat s) {
    if (s.rows() != ext.algebra_c().dim() || s.cols() != ext.algebra_b().dim())
        throw Error("section: matrix must map " + ext.algebra_b().name() + " into " +
                    ext.algebra_c().name());
    if (!(ext.projection() * s == Mat::identity(ext.algebra_b().dim())))
        throw Error("section: p . s is not the identity on " + ext.algebra_b().name());
    return Section{std::move(s)};
}

namespace {

// [s(y), w] for a C-valued map w in the quotient variable y; degree + 1.
HomogeneousMap ad_section(const Extension& ext, const Mat& s, const HomogeneousMap& w) {
    HomogeneousMap out(w.src_dim(), w.tgt_dim(), w.degree() + 1);
    for (const auto& [alpha, value] : w.coeffs())
        for (std::size_t f = 0; f < s.cols(); ++f)
            out.add_term(alpha.bumped(f), bracket(ext.algebra_c(), s.col(f), value));
    return out;
}

HomogeneousMap kk_component_in_c(const Extension& ext, const Mat& s, const Mat& sp,
                                 const BernoulliCoeffs& t, const Vec& c, unsigned m) {
    const std::size_t y_dim = ext.algebra_b().dim();
    // powers[k] = (ad z)^k(c), z = s(y) with y symbolic.
    std::vector<HomogeneousMap> powers;
    powers.push_back(HomogeneousMap::constant(y_dim, c));
    for (unsigned k = 1; k <= m; ++k)
        powers.push_back(ad_section(ext, s, powers.back()));

    HomogeneousMap out = scale(Rational(1, factorial(m)), powers[m]);
    for (unsigned r = 0; r <= m; ++r) {
        const unsigned n = m - r;
        HomogeneousMap term = powers[r].then(sp);
        for (unsigned k = 0; k < n; ++k)
            term = ad_section(ext, s, term);
        out = out - scale(t.t[r] / Rational(factorial(n + 1)), term);
    }
    return out;
}

HomogeneousMap into_ideal_coords(const Extension& ext, const HomogeneousMap& in_c) {
    HomogeneousMap out(in_c.src_dim(), ext.algebra_a().dim(), in_c.degree());
    for (const auto& [alpha, value] : in_c.coeffs()) {
        const auto coords = ext.ideal_coords(value);
        if (!coords)
            throw std::logic_error("kk_component: value escaped the ideal at monomial " +
                                   multi_index_str(alpha));
        out.add_term(alpha, *coords);
    }
    return out;
}

} // namespace

HomogeneousMap kk_component(const Extension& ext, const Section& s, const Vec& c, unsigned m) {
    if (c.size() != ext.algebra_c().dim())
        throw Error("kk_component: element length does not match " + ext.algebra_c().name());
    const Mat sp = s.s * ext.projection();
    return into_ideal_coords(ext, kk_component_in_c(ext, s.s, sp, bernoulli_t(m), c, m));
}

WreathElement kk_embed(const Extension& ext, const Section& s, const Vec& c, unsigned N) {
    if (c.size() != ext.algebra_c().dim())
        throw Error("kk_embed: element length does not match " + ext.algebra_c().name());
    const Mat sp = s.s * ext.projection();
    const BernoulliCoeffs t = bernoulli_t(N);
    FormalSeries series(ext.algebra_b().dim(), ext.algebra_a().dim(), static_cast<int>(N));
    for (unsigned m = 0; m <= N; ++m)
        series.set_component(into_ideal_coords(ext, kk_component_in_c(ext, s.s, sp, t, c, m)));
    return WreathElement{std::move(series), ext.projection().apply(c)};
}

KKReport verify_kk(const Extension& ext, const Section& s, unsigned N, unsigned trials,
                   std::uint64_t seed) {
    if (N < 2)
        throw Error("verify_kk: N must be >= 2 for bracket verification");
    KKReport report;
    report.order = N;
    report.checked_degree = N - 1;

    const WreathProduct w(ext.algebra_a(), ext.algebra_b(), N);
    const auto embed = [&](const Vec& c) { return kk_embed(ext, s, c, N); };

    const auto check_pair = [&](const Vec& c, const Vec& c2, const std::string& what) {
        const WreathElement lhs = wreath_bracket(w, embed(c), embed(c2));
        const WreathElement rhs = embed(bracket(ext.algebra_c(), c, c2));
        if (lhs.point != rhs.point)
            report.discrepancies.push_back(what + ": quotient points differ");
        for (unsigned deg = 0; deg + 1 <= N; ++deg)
            if (!(lhs.series.component(deg) == rhs.series.component(deg)))
                report.discrepancies.push_back(what + ": series differ at degree " +
                                               std::to_string(deg));
    };

    const std::size_t dim_c = ext.algebra_c().dim();
    for (std::size_t i = 0; i < dim_c; ++i)
        for (std::size_t j = i + 1; j < dim_c; ++j) {
            Vec ei = zero_vec(dim_c), ej = zero_vec(dim_c);
            ei[i] = 1;
            ej[j] = 1;
            check_pair(ei, ej,
                       "basis pair (" + ext.algebra_c().labels()[i] + ", " +
                           ext.algebra_c().labels()[j] + ")");
        }
    Sampler sampler(seed);
    for (unsigned trial = 0; trial < trials; ++trial)
        check_pair(sampler.vector(dim_c), sampler.vector(dim_c),
                   "random pair #" + std::to_string(trial + 1));
    report.homomorphism_ok = report.discrepancies.empty();

    // Injectivity: c -> (h_{c,0}, p(c)) is injective because h_{c,0} recovers
    // c - s(p(c)); the stacked matrix must have full column rank.
    const std::size_t dim_a = ext.algebra_a().dim();
    const std::size_t dim_b = ext.algebra_b().dim();
    Mat stacked(dim_a + dim_b, dim_c);
    for (std::size_t k = 0; k < dim_c; ++k) {
        Vec ek = zero_vec(dim_c);
        ek[k] = 1;
        const Vec h0 = kk_component(ext, s, ek, 0).coeff(MultiIndex::zero(dim_b));
        const Vec pk = ext.projection().apply(ek);
        for (std::size_t i = 0; i < dim_a; ++i)
            stacked.at(i, k) = h0[i];
        for (std::size_t i = 0; i < dim_b; ++i)
            stacked.at(dim_a + i, k) = pk[i];
    }
    report.rank = rank(stacked);
    report.expected_rank = dim_c;
    report.injectivity_ok = report.rank == report.expected_rank;
    if (!report.injectivity_ok)
        report.discrepancies.push_back("injectivity certificate failed: rank " +
                                       std::to_string(report.rank) + " of expected " +
                                       std::to_string(report.expected_rank));
    return report;
}

} // namespace wreath
