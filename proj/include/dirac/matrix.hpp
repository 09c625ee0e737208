#pragma once

#include "dirac/scalar.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace dirac {

/// Coordinate column over a fixed basis (or dual basis).
using Vec = std::vector<Scalar>;

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t k);
bool is_zero(std::span<const Scalar> v);
Vec add(std::span<const Scalar> a, std::span<const Scalar> b);
Vec sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vec scale(const Scalar& s, std::span<const Scalar> v);
Vec conj(std::span<const Scalar> v);
/// Bilinear (not Hermitian) dot product.
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
Vec concat(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix of exact scalars.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);
    static Matrix from_rows(std::size_t cols, const std::vector<Vec>& rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vec>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    Vec row_vec(std::size_t r) const { auto s = row(r); return {s.begin(), s.end()}; }
    Vec col_vec(std::size_t c) const;
    std::vector<Vec> row_list() const;

    Matrix transpose() const;
    Matrix conj() const;
    bool is_zero() const;
    bool is_real() const;

    Vec apply(std::span<const Scalar> v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b) = default;

    /// Reduced row-echelon form in place (leading 1s, no zero rows dropped);
    /// returns pivot columns.
    std::vector<std::size_t> rref_in_place();

    std::size_t rank() const;

    /// Basis of {x : A x = 0}, one vector per free column, free entry = 1.
    std::vector<Vec> kernel() const;

    /// A particular solution of A x = b with every free variable set to zero,
    /// or nullopt when the system is inconsistent.
    std::optional<Vec> solve(std::span<const Scalar> b) const;

    std::optional<Matrix> inverse() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

}  // namespace dirac
