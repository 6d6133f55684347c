#include "wreath/linalg.hpp"

#include "wreath/error.hpp"

namespace wreath {

namespace {

void require_same_dim(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw Error("vector dimension mismatch: " + std::to_string(a.size()) +
                    " vs " + std::to_string(b.size()));
}

} // namespace

Vec zero_vec(std::size_t dim) { return Vec(dim, Rational(0)); }

bool is_zero(const Vec& v) {
    for (const auto& c : v)
        if (c != 0)
            return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

Vec sub(const Vec& a, const Vec& b) {
    require_same_dim(a, b);
    Vec out(a);
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] -= b[i];
    return out;
}

Vec scale(const Rational& c, const Vec& v) {
    Vec out(v);
    for (auto& x : out)
        x *= c;
    return out;
}

Vec negate(const Vec& v) { return scale(Rational(-1), v); }

Mat::Mat(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Mat Mat::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

Vec Mat::apply(const Vec& x) const {
    if (x.size() != cols_)
        throw Error("matrix-vector dimension mismatch: " + std::to_string(cols_) +
                    " cols vs vector of length " + std::to_string(x.size()));
    Vec out = zero_vec(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out[i] += at(i, j) * x[j];
    return out;
}

Mat Mat::operator*(const Mat& other) const {
    if (cols_ != other.rows_)
        throw Error("matrix product dimension mismatch");
    Mat out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k) == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                out.at(i, j) += at(i, k) * other.at(k, j);
        }
    return out;
}

Mat Mat::operator+(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("matrix sum dimension mismatch");
    Mat out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] += other.data_[i];
    return out;
}

Mat Mat::operator-(const Mat& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw Error("matrix difference dimension mismatch");
    Mat out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i)
        out.data_[i] -= other.data_[i];
    return out;
}

Vec Mat::col(std::size_t j) const {
    Vec out = zero_vec(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        out[i] = at(i, j);
    return out;
}

Mat scale(const Rational& c, const Mat& m) {
    Mat out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = c * m.at(i, j);
    return out;
}

Mat mat_from_columns(const std::vector<Vec>& columns) {
    if (columns.empty())
        return Mat(0, 0);
    Mat out(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != out.rows())
            throw Error("ragged column list");
        for (std::size_t i = 0; i < out.rows(); ++i)
            out.at(i, j) = columns[j][i];
    }
    return out;
}

Mat mat_from_rows(const std::vector<Vec>& rows) {
    if (rows.empty())
        return Mat(0, 0);
    Mat out(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != out.cols())
            throw Error("ragged row list");
        for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(i, j) = rows[i][j];
    }
    return out;
}

Echelon rref(Mat m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot_row = row;
        while (pivot_row < m.rows() && m.at(pivot_row, col) == 0)
            ++pivot_row;
        if (pivot_row == m.rows())
            continue;
        if (pivot_row != row)
            for (std::size_t j = 0; j < m.cols(); ++j)
                std::swap(m.at(pivot_row, j), m.at(row, j));
        const Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t j = col; j < m.cols(); ++j)
            m.at(row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == row || m.at(i, col) == 0)
                continue;
            const Rational factor = m.at(i, col);
            for (std::size_t j = col; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Mat& m) { return rref(m).pivot_cols.size(); }

std::optional<Vec> solve(const Mat& m, const Vec& b) {
    if (b.size() != m.rows())
        throw Error("solve: right-hand side length mismatch");
    Mat aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = b[i];
    }
    Echelon e = rref(std::move(aug));
    for (std::size_t p : e.pivot_cols)
        if (p == m.cols())
            return std::nullopt; // inconsistent
    Vec x = zero_vec(m.cols());
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
        x[e.pivot_cols[r]] = e.reduced.at(r, m.cols());
    return x;
}

} // namespace wreath
