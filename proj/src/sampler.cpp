#include "wreath/sampler.hpp"

namespace wreath {

std::uint64_t Sampler::below(std::uint64_t n) { return rng_() % n; }

Rational Sampler::rational() {
    const long long num = static_cast<long long>(below(19)) - 9;
    const long long den = static_cast<long long>(below(9)) + 1;
    return Rational(num, den);
}

Rational Sampler::nonzero_rational() {
    Rational q = rational();
    while (q == 0)
        q = rational();
    return q;
}

Vec Sampler::vector(std::size_t dim) {
    Vec out(dim);
    for (auto& c : out)
        c = rational();
    return out;
}

HomogeneousMap Sampler::homogeneous_map(std::size_t src_dim, std::size_t tgt_dim,
                                        unsigned degree) {
    HomogeneousMap out(src_dim, tgt_dim, degree);
    for (const MultiIndex& alpha : multi_indices(src_dim, degree)) {
        Vec value(tgt_dim);
        for (auto& c : value)
            c = below(3) == 0 ? Rational(0) : rational();
        out.add_term(alpha, value);
    }
    return out;
}

FormalSeries Sampler::series(std::size_t src_dim, std::size_t tgt_dim, int valid_through) {
    FormalSeries out(src_dim, tgt_dim, valid_through);
    for (int m = 0; m <= valid_through; ++m)
        out.set_component(homogeneous_map(src_dim, tgt_dim, static_cast<unsigned>(m)));
    return out;
}

} // namespace wreath
