#include "wreath/multilinear.hpp"

#include "wreath/error.hpp"

namespace wreath {

MultilinearTensor::MultilinearTensor(std::size_t src_dim, std::size_t tgt_dim, unsigned arity)
    : src_dim_(src_dim), tgt_dim_(tgt_dim), arity_(arity) {
    std::size_t count = 1;
    for (unsigned i = 0; i < arity; ++i)
        count *= src_dim;
    entries_.assign(count, zero_vec(tgt_dim));
}

std::size_t MultilinearTensor::flat(const std::vector<std::size_t>& idx) const {
    if (idx.size() != arity_)
        throw Error("tensor index arity mismatch");
    std::size_t out = 0;
    for (std::size_t i : idx) {
        if (i >= src_dim_)
            throw Error("tensor index out of range");
        out = out * src_dim_ + i;
    }
    return out;
}

Vec& MultilinearTensor::entry(const std::vector<std::size_t>& idx) { return entries_[flat(idx)]; }

const Vec& MultilinearTensor::entry(const std::vector<std::size_t>& idx) const {
    return entries_[flat(idx)];
}

Vec MultilinearTensor::operator()(const std::vector<Vec>& args) const {
    if (args.size() != arity_)
        throw Error("tensor evaluation arity mismatch");
    Vec out = zero_vec(tgt_dim_);
    for (const auto& idx : index_tuples()) {
        Rational weight = 1;
        for (unsigned slot = 0; slot < arity_; ++slot)
            weight *= args[slot][idx[slot]];
        if (weight != 0)
            out = add(out, scale(weight, entries_[flat(idx)]));
    }
    return out;
}

std::vector<std::vector<std::size_t>> MultilinearTensor::index_tuples() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> cur(arity_, 0);
    while (true) {
        out.push_back(cur);
        unsigned pos = arity_;
        while (pos > 0) {
            if (++cur[pos - 1] < src_dim_)
                break;
            cur[pos - 1] = 0;
            --pos;
        }
        if (pos == 0)
            return out;
    }
}

HomogeneousMap from_multilinear(const MultilinearTensor& u) {
    HomogeneousMap f(u.src_dim(), u.tgt_dim(), u.arity());
    for (const auto& idx : u.index_tuples()) {
        std::vector<unsigned> exponents(u.src_dim(), 0);
        for (std::size_t i : idx)
            ++exponents[i];
        f.add_term(MultiIndex(std::move(exponents)), u.entry(idx));
    }
    return f;
}

Vec polarize_oracle(const MultilinearTensor& u, const std::vector<Vec>& z,
                    const std::vector<int>& p) {
    if (u.arity() > 5)
        throw Error("polarize_oracle: arity too large for enumeration");
    if (z.size() != p.size())
        throw Error("polarize_oracle: z and p length mismatch");
    Vec out = zero_vec(u.tgt_dim());
    int total = 0;
    for (int pj : p) {
        if (pj < 0)
            return out;
        total += pj;
    }
    if (total != static_cast<int>(u.arity()))
        return out;
    // Every slot -> argument assignment with the prescribed multiplicities.
    const std::size_t r = z.size();
    std::vector<std::size_t> choice(u.arity(), 0);
    while (true) {
        std::vector<int> count(r, 0);
        for (std::size_t j : choice)
            ++count[j];
        if (count == p) {
            std::vector<Vec> args;
            for (std::size_t j : choice)
                args.push_back(z[j]);
            out = add(out, u(args));
        }
        std::size_t pos = choice.size();
        while (pos > 0) {
            if (++choice[pos - 1] < r)
                break;
            choice[pos - 1] = 0;
            --pos;
        }
        if (pos == 0)
            break;
    }
    return out;
}

} // namespace wreath
