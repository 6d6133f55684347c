#pragma once
#include <cstddef>
#include <optional>
#include <vector>

#include "wreath/rational.hpp"

namespace wreath {

using Vec = std::vector<Rational>;

Vec zero_vec(std::size_t dim);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
Vec negate(const Vec& v);

/// Dense rational matrix, row-major. Doubles as LinearMap (rows = target
/// dimension, cols = source dimension).
class Mat {
public:
    Mat() = default;
    Mat(std::size_t rows, std::size_t cols);

    static Mat identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vec apply(const Vec& x) const;
    Mat operator*(const Mat& other) const;
    Mat operator+(const Mat& other) const;
    Mat operator-(const Mat& other) const;
    bool operator==(const Mat& other) const = default;

    /// Column j as a vector.
    Vec col(std::size_t j) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

Mat scale(const Rational& c, const Mat& m);

/// Matrix whose columns are the given vectors (all of equal length).
Mat mat_from_columns(const std::vector<Vec>& columns);
Mat mat_from_rows(const std::vector<Vec>& rows);

struct Echelon {
    Mat reduced;                     // row canonical form
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form with unit pivots, exact over the rationals.
Echelon rref(Mat m);

std::size_t rank(const Mat& m);

/// One exact solution of M x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Mat& m, const Vec& b);

} // namespace wreath
