#include "wreath/lie_algebra.hpp"

#include <stdexcept>

#include "wreath/error.hpp"

namespace wreath {

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> basis_labels,
                       std::vector<Rational> structure_table)
    : name_(std::move(name)), dim_(basis_labels.size()), labels_(std::move(basis_labels)),
      table_(std::move(structure_table)) {
    if (table_.size() != dim_ * dim_ * dim_)
        throw Error("structure table size mismatch for algebra " + name_);
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (labels_[i] == labels_[j])
                throw Error("duplicate basis label \"" + labels_[i] + "\" in algebra " + name_);
}

LieAlgebra LieAlgebra::from_pairs(std::string name, std::vector<std::string> basis_labels,
                                  const std::vector<std::tuple<std::size_t, std::size_t, Vec>>& brackets) {
    const std::size_t n = basis_labels.size();
    std::vector<Rational> table(n * n * n, Rational(0));
    for (const auto& [i, j, terms] : brackets) {
        if (i >= n || j >= n || terms.size() != n)
            throw Error("bracket entry out of range in algebra " + name);
        if (i >= j)
            throw Error("bracket entries must use i < j (got " + basis_labels[i] + ", " +
                        basis_labels[j] + ") in algebra " + name);
        for (std::size_t k = 0; k < n; ++k) {
            table[(i * n + j) * n + k] = terms[k];
            table[(j * n + i) * n + k] = -terms[k];
        }
    }
    return LieAlgebra(std::move(name), std::move(basis_labels), std::move(table));
}

LieAlgebra LieAlgebra::abelian(std::string name, std::size_t dim) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i)
        labels.push_back("e" + std::to_string(i + 1));
    return LieAlgebra(std::move(name), std::move(labels),
                      std::vector<Rational>(dim * dim * dim, Rational(0)));
}

Vec LieAlgebra::basis_bracket(std::size_t i, std::size_t j) const {
    Vec out = zero_vec(dim_);
    for (std::size_t k = 0; k < dim_; ++k)
        out[k] = structure(i, j, k);
    return out;
}

Vec bracket(const LieAlgebra& alg, const Vec& x, const Vec& y) {
    if (x.size() != alg.dim() || y.size() != alg.dim())
        throw Error("bracket: vector length does not match dim of " + alg.name());
    Vec out = zero_vec(alg.dim());
    for (std::size_t i = 0; i < alg.dim(); ++i) {
        if (x[i] == 0)
            continue;
        for (std::size_t j = 0; j < alg.dim(); ++j) {
            if (y[j] == 0)
                continue;
            const Rational c = x[i] * y[j];
            for (std::size_t k = 0; k < alg.dim(); ++k)
                out[k] += c * alg.structure(i, j, k);
        }
    }
    return out;
}

Mat ad(const LieAlgebra& alg, const Vec& y) {
    if (y.size() != alg.dim())
        throw Error("ad: vector length does not match dim of " + alg.name());
    Mat m(alg.dim(), alg.dim());
    for (std::size_t j = 0; j < alg.dim(); ++j) {
        Vec out = zero_vec(alg.dim());
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            if (y[i] == 0)
                continue;
            for (std::size_t k = 0; k < alg.dim(); ++k)
                out[k] += y[i] * alg.structure(i, j, k);
        }
        for (std::size_t k = 0; k < alg.dim(); ++k)
            m.at(k, j) = out[k];
    }
    return m;
}

AlgebraReport check_lie_algebra(const LieAlgebra& alg) {
    AlgebraReport report;
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (alg.structure(i, j, k) != -alg.structure(j, i, k)) {
                    report.violations.push_back("antisymmetry violated at (" + alg.labels()[i] +
                                                ", " + alg.labels()[j] + ")");
                    break;
                }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vec ei = zero_vec(n), ej = zero_vec(n), ek = zero_vec(n);
                ei[i] = 1;
                ej[j] = 1;
                ek[k] = 1;
                Vec sum = bracket(alg, bracket(alg, ei, ej), ek);
                sum = add(sum, bracket(alg, bracket(alg, ej, ek), ei));
                sum = add(sum, bracket(alg, bracket(alg, ek, ei), ej));
                if (!is_zero(sum))
                    report.violations.push_back("Jacobi violated at (" + alg.labels()[i] + ", " +
                                                alg.labels()[j] + ", " + alg.labels()[k] + ")");
            }
    return report;
}

QuotientResult quotient(const LieAlgebra& alg, const std::vector<Vec>& ideal_basis) {
    const std::size_t n = alg.dim();
    if (ideal_basis.empty())
        throw Error("quotient: empty ideal basis");
    for (const Vec& a : ideal_basis)
        if (a.size() != n)
            throw Error("quotient: ideal vector length does not match dim of " + alg.name());

    const Echelon ech = rref(mat_from_rows(ideal_basis));
    if (ech.pivot_cols.size() != ideal_basis.size())
        throw Error("quotient: ideal basis of " + alg.name() + " is not linearly independent");

    // Ideal test: [e_i, a] must stay inside the span for every basis element.
    const Mat ideal_cols = mat_from_columns(ideal_basis);
    for (std::size_t i = 0; i < n; ++i) {
        Vec ei = zero_vec(n);
        ei[i] = 1;
        for (const Vec& a : ideal_basis)
            if (!solve(ideal_cols, bracket(alg, ei, a)))
                throw Error("quotient: span is not an ideal of " + alg.name() +
                            " ([" + alg.labels()[i] + ", a] escapes the span)");
    }

    std::vector<std::size_t> kept;
    {
        std::size_t next_pivot = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (next_pivot < ech.pivot_cols.size() && ech.pivot_cols[next_pivot] == j)
                ++next_pivot;
            else
                kept.push_back(j);
        }
    }

    // Every x splits as x = sum_i x_{pivot_i} R_i + remainder on the kept
    // coordinates; the projection reads off that remainder.
    Mat p(kept.size(), n);
    for (std::size_t f = 0; f < kept.size(); ++f) {
        p.at(f, kept[f]) = 1;
        for (std::size_t r = 0; r < ech.pivot_cols.size(); ++r)
            p.at(f, ech.pivot_cols[r]) = -ech.reduced.at(r, kept[f]);
    }

    std::vector<std::string> labels;
    for (std::size_t f : kept)
        labels.push_back(alg.labels()[f]);
    std::vector<Rational> table(kept.size() * kept.size() * kept.size(), Rational(0));
    for (std::size_t a = 0; a < kept.size(); ++a)
        for (std::size_t b = 0; b < kept.size(); ++b) {
            Vec ea = zero_vec(n), eb = zero_vec(n);
            ea[kept[a]] = 1;
            eb[kept[b]] = 1;
            const Vec image = p.apply(bracket(alg, ea, eb));
            for (std::size_t k = 0; k < kept.size(); ++k)
                table[(a * kept.size() + b) * kept.size() + k] = image[k];
        }
    LieAlgebra q(alg.name() + ".quotient", std::move(labels), std::move(table));
    if (!check_lie_algebra(q).ok())
        throw std::logic_error("quotient: induced structure constants fail the Lie axioms");
    return QuotientResult{std::move(q), std::move(p), std::move(kept)};
}

} // namespace wreath
