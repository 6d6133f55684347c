#pragma once
#include <vector>

#include "wreath/homogeneous_map.hpp"

namespace wreath {

/// Dense m-linear map E^m -> F, indexed by slot tuples. Deliberately naive:
/// this is the brute-force reference that the sparse polynomial code is
/// checked against, so it stays close to the definitions. Keep the arity
/// small; storage is src_dim^arity.
class MultilinearTensor {
public:
    MultilinearTensor(std::size_t src_dim, std::size_t tgt_dim, unsigned arity);

    std::size_t src_dim() const { return src_dim_; }
    std::size_t tgt_dim() const { return tgt_dim_; }
    unsigned arity() const { return arity_; }

    Vec& entry(const std::vector<std::size_t>& idx);
    const Vec& entry(const std::vector<std::size_t>& idx) const;

    /// Full multilinear evaluation u(args[0], ..., args[m-1]).
    Vec operator()(const std::vector<Vec>& args) const;

    /// All index tuples (i_1, ..., i_m), odometer order.
    std::vector<std::vector<std::size_t>> index_tuples() const;

private:
    std::size_t flat(const std::vector<std::size_t>& idx) const;

    std::size_t src_dim_;
    std::size_t tgt_dim_;
    unsigned arity_;
    std::vector<Vec> entries_;
};

/// The homogeneous polynomial x -> u(x, ..., x).
HomogeneousMap from_multilinear(const MultilinearTensor& u);

/// Literal slot-assignment sum: all u(x_1,...,x_m) with exactly p_j slots
/// equal to z_j. Enumerates every assignment, so the arity is capped at 5.
Vec polarize_oracle(const MultilinearTensor& u, const std::vector<Vec>& z,
                    const std::vector<int>& p);

} // namespace wreath
