#ifndef ANTIPODE_MATRIX_HPP
#define ANTIPODE_MATRIX_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "antipode/error.hpp"
#include "antipode/scalar.hpp"

namespace antipode {

template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n, const T& zero, const T& one)
    {
        Matrix m(n, n, zero);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = one;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const
    {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                t(j, i) = (*this)(i, j);
        return t;
    }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))>
    {
        Matrix<decltype(f(std::declval<const T&>()))> r(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                r(i, j) = f((*this)(i, j));
        return r;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<int>;

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b)
{
    if (a.cols() != b.rows())
        throw Error(ErrorKind::DimensionMismatch, "matrix product of incompatible shapes");
    Matrix<T> r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T acc{};
            bool first = true;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (first) {
                    acc = a(i, k) * b(k, j);
                    first = false;
                } else {
                    acc += a(i, k) * b(k, j);
                }
            }
            r(i, j) = acc;
        }
    return r;
}

inline bool is_identity(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != (i == j ? 1 : 0))
                return false;
    return true;
}

inline CycNum scalar_from_int(long v, const CycNum& like) { return CycNum(like.field(), v); }
inline NumericScalar scalar_from_int(long v, const NumericScalar& like)
{
    return NumericScalar(static_cast<double>(v), like.tolerance());
}

/// Converts an integer matrix into a field matrix shaped like `like`.
template <class T>
Matrix<T> to_field(const IntMatrix& m, const T& like)
{
    Matrix<T> r(m.rows(), m.cols(), zero_like(like));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m(i, j) != 0)
                r(i, j) = scalar_from_int(m(i, j), like);
    return r;
}

template <class T>
std::vector<T> mat_vec(const Matrix<T>& a, const std::vector<T>& v)
{
    std::vector<T> r(a.rows(), zero_like(v.front()));
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (!is_zero(a(i, j)))
                r[i] += a(i, j) * v[j];
    return r;
}

template <class T>
struct RowEchelon {
    Matrix<T> reduced;                // reduced row echelon form
    std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/*
 * Gauss-Jordan elimination.  Exact types pivot on the first nonzero entry;
 * NumericScalar pivots on the largest magnitude and treats entries below
 * tolerance * (largest entry) as zero.
 */
template <class T>
RowEchelon<T> row_reduce(Matrix<T> a)
{
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    double threshold = 0.0;
    if constexpr (is_numeric_v<T>) {
        double largest = 0.0;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                largest = std::max(largest, std::abs(a(i, j).value()));
        const double tol = rows && cols ? a(0, 0).tolerance() : default_tolerance;
        threshold = tol * std::max(1.0, largest);
    }
    auto negligible = [&](const T& x) {
        if constexpr (is_numeric_v<T>)
            return std::abs(x.value()) <= threshold;
        else
            return is_zero(x);
    };

    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pick = rows;
        if constexpr (is_numeric_v<T>) {
            double best = threshold;
            for (std::size_t i = row; i < rows; ++i)
                if (std::abs(a(i, col).value()) > best) {
                    best = std::abs(a(i, col).value());
                    pick = i;
                }
        } else {
            for (std::size_t i = row; i < rows; ++i)
                if (!is_zero(a(i, col))) {
                    pick = i;
                    break;
                }
        }
        if (pick == rows)
            continue;
        if (pick != row)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a(pick, j), a(row, j));
        const T inv = a(row, col).inverse();
        for (std::size_t j = col; j < cols; ++j)
            a(row, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == row || negligible(a(i, col)))
                continue;
            const T factor = a(i, col);
            for (std::size_t j = col; j < cols; ++j)
                if (!is_zero(a(row, j)))
                    a(i, j) -= factor * a(row, j);
        }
        if constexpr (is_numeric_v<T>)
            for (std::size_t i = 0; i < rows; ++i)
                if (i != row)
                    a(i, col) = zero_like(a(i, col));
        pivots.push_back(col);
        ++row;
    }
    return {std::move(a), std::move(pivots)};
}

/// Basis of {x : a x = 0}, one vector per free column.
template <class T>
std::vector<std::vector<T>> null_space(const Matrix<T>& a, const T& like)
{
    const auto [r, pivots] = row_reduce(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        std::vector<T> v(a.cols(), zero_like(like));
        v[free] = one_like(like);
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = -r(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Exact rank by elimination; numeric rank by singular values above tolerance * largest entry.
template <class T>
std::size_t rank(const Matrix<T>& a)
{
    if constexpr (is_numeric_v<T>) {
        if (a.rows() == 0 || a.cols() == 0)
            return 0;
        Eigen::MatrixXcd m(a.rows(), a.cols());
        double largest = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                m(i, j) = a(i, j).value();
                largest = std::max(largest, std::abs(a(i, j).value()));
            }
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
        const double cutoff = a(0, 0).tolerance() * largest;
        std::size_t r = 0;
        for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
            if (svd.singularValues()(k) > cutoff)
                ++r;
        return r;
    } else {
        return row_reduce(a).pivots.size();
    }
}

template <class T>
std::string format_matrix(const Matrix<T>& m)
{
    std::string out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j)
                out += ", ";
            if constexpr (std::is_arithmetic_v<T>)
                out += std::to_string(m(i, j));
            else
                out += to_string(m(i, j));
        }
        out += "]\n";
    }
    return out;
}

} // namespace antipode

#endif
