#pragma once
#include <cstdint>
#include <random>

#include "wreath/formal_series.hpp"

namespace wreath {

/// Deterministic source of small rational data for randomized verification.
/// mt19937_64 is fully specified, and values are mapped by plain modulus, so
/// a seed yields the same stream on every platform.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    /// Numerator in [-9, 9], denominator in [1, 9].
    Rational rational();
    Rational nonzero_rational();

    std::uint64_t below(std::uint64_t n); // uniform-ish in [0, n)

    Vec vector(std::size_t dim);

    /// Sparse-ish random map: each monomial coefficient entry is zero with
    /// probability ~1/3.
    HomogeneousMap homogeneous_map(std::size_t src_dim, std::size_t tgt_dim, unsigned degree);

    FormalSeries series(std::size_t src_dim, std::size_t tgt_dim, int valid_through);

private:
    std::mt19937_64 rng_;
};

} // namespace wreath
