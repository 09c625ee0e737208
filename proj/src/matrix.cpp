#include "dirac/matrix.hpp"

#include "dirac/errors.hpp"

#include <utility>

namespace dirac {

Vec zero_vec(std::size_t n)
{
    return Vec(n);
}

Vec unit_vec(std::size_t n, std::size_t k)
{
    Vec v(n);
    v[k] = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v)
{
    for (const auto& s : v)
        if (!s.is_zero())
            return false;
    return true;
}

Vec add(std::span<const Scalar> a, std::span<const Scalar> b)
{
    if (a.size() != b.size())
        throw DimensionMismatch(a.size(), b.size(), "add");
    Vec out(a.begin(), a.end());
    for (std::size_t k = 0; k < b.size(); ++k)
        out[k] += b[k];
    return out;
}

Vec sub(std::span<const Scalar> a, std::span<const Scalar> b)
{
    if (a.size() != b.size())
        throw DimensionMismatch(a.size(), b.size(), "sub");
    Vec out(a.begin(), a.end());
    for (std::size_t k = 0; k < b.size(); ++k)
        out[k] -= b[k];
    return out;
}

Vec scale(const Scalar& s, std::span<const Scalar> v)
{
    Vec out(v.begin(), v.end());
    for (auto& x : out)
        x *= s;
    return out;
}

Vec conj(std::span<const Scalar> v)
{
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(x.conj());
    return out;
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b)
{
    if (a.size() != b.size())
        throw DimensionMismatch(a.size(), b.size(), "dot");
    Scalar acc;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (!a[k].is_zero() && !b[k].is_zero())
            acc += a[k] * b[k];
    return acc;
}

Vec concat(std::span<const Scalar> a, std::span<const Scalar> b)
{
    Vec out(a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k)
        m(k, k) = 1;
    return m;
}

Matrix Matrix::from_rows(std::size_t cols, const std::vector<Vec>& rows)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw DimensionMismatch(cols, rows[r].size(), "Matrix::from_rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vec>& cols)
{
    return from_rows(rows, cols).transpose();
}

Vec Matrix::col_vec(std::size_t c) const
{
    Vec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

std::vector<Vec> Matrix::row_list() const
{
    std::vector<Vec> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out.push_back(row_vec(r));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::conj() const
{
    Matrix m = *this;
    for (auto& x : m.data_)
        x = x.conj();
    return m;
}

bool Matrix::is_zero() const
{
    return dirac::is_zero(data_);
}

bool Matrix::is_real() const
{
    for (const auto& x : data_)
        if (!x.is_real())
            return false;
    return true;
}

Vec Matrix::apply(std::span<const Scalar> v) const
{
    if (v.size() != cols_)
        throw DimensionMismatch(cols_, v.size(), "Matrix::apply");
    Vec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        out[r] = dot(row(r), v);
    return out;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw DimensionMismatch(a.cols_, b.rows_, "Matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero())
                    out(r, c) += x * b(k, c);
        }
    return out;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw DimensionMismatch(a.rows_ * a.cols_, b.rows_ * b.cols_, "Matrix sum");
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k)
        out.data_[k] += b.data_[k];
    return out;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    return a + (Scalar(-1) * b);
}

Matrix operator*(const Scalar& s, const Matrix& a)
{
    Matrix out = a;
    for (auto& x : out.data_)
        x *= s;
    return out;
}

std::vector<std::size_t> Matrix::rref_in_place()
{
    std::vector<std::size_t> pivots;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < cols_ && lead_row < rows_; ++c) {
        std::size_t pr = lead_row;
        while (pr < rows_ && (*this)(pr, c).is_zero())
            ++pr;
        if (pr == rows_)
            continue;
        if (pr != lead_row)
            for (std::size_t k = 0; k < cols_; ++k)
                std::swap((*this)(pr, k), (*this)(lead_row, k));
        Scalar inv = Scalar(1) / (*this)(lead_row, c);
        for (std::size_t k = c; k < cols_; ++k)
            (*this)(lead_row, k) *= inv;
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead_row || (*this)(r, c).is_zero())
                continue;
            Scalar f = (*this)(r, c);
            for (std::size_t k = c; k < cols_; ++k)
                if (!(*this)(lead_row, k).is_zero())
                    (*this)(r, k) -= f * (*this)(lead_row, k);
        }
        pivots.push_back(c);
        ++lead_row;
    }
    return pivots;
}

std::size_t Matrix::rank() const
{
    Matrix m = *this;
    return m.rref_in_place().size();
}

std::vector<Vec> Matrix::kernel() const
{
    Matrix m = *this;
    auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free])
            continue;
        Vec v(cols_);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = -m(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vec> Matrix::solve(std::span<const Scalar> b) const
{
    if (b.size() != rows_)
        throw DimensionMismatch(rows_, b.size(), "Matrix::solve");
    Matrix aug(rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            aug(r, c) = (*this)(r, c);
        aug(r, cols_) = b[r];
    }
    auto pivots = aug.rref_in_place();
    if (!pivots.empty() && pivots.back() == cols_)
        return std::nullopt;
    Vec x(cols_);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[pivots[r]] = aug(r, cols_);
    return x;
}

std::optional<Matrix> Matrix::inverse() const
{
    if (rows_ != cols_)
        throw DimensionMismatch(rows_, cols_, "Matrix::inverse");
    const std::size_t n = rows_;
    if (n == 0)
        return Matrix();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = (*this)(r, c);
        aug(r, n + r) = 1;
    }
    auto pivots = aug.rref_in_place();
    if (pivots.size() < n || pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

}  // namespace dirac
