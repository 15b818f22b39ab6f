#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rackgraph/error.hpp"

namespace rackgraph::exactla {

/// Dense row-major matrix. Entries are exact scalars (or integers); the
/// element type has no default "zero", so a fill value is always supplied.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill)
    {
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const
    {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    std::vector<T> col(std::size_t j) const
    {
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
        return out;
    }

    void set_col(std::size_t j, const std::vector<T>& v)
    {
        if (v.size() != rows_) throw Error("column length mismatch");
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    void swap_cols(std::size_t a, std::size_t b)
    {
        if (a == b) return;
        for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
    }

    Matrix transposed() const
    {
        Matrix t;
        t.rows_ = cols_;
        t.cols_ = rows_;
        if (data_.empty()) return t;
        t.data_.assign(data_.size(), data_.front());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    const std::vector<T>& data() const { return data_; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class F>
using FieldMatrix = Matrix<typename F::value_type>;

template <class F>
using FieldVector = std::vector<typename F::value_type>;

template <class F>
FieldMatrix<F> zeros(const F& field, std::size_t rows, std::size_t cols)
{
    return FieldMatrix<F>(rows, cols, field.zero());
}

template <class F>
FieldMatrix<F> identity(const F& field, std::size_t n)
{
    auto m = zeros(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
    return m;
}

template <class F>
FieldVector<F> zero_vector(const F& field, std::size_t n)
{
    return FieldVector<F>(n, field.zero());
}

template <class F>
FieldVector<F> unit_vector(const F& field, std::size_t n, std::size_t i)
{
    auto v = zero_vector(field, n);
    v.at(i) = field.one();
    return v;
}

template <class F>
bool is_zero_vector(const F& field, const FieldVector<F>& v)
{
    for (const auto& x : v)
        if (!field.is_zero(x)) return false;
    return true;
}

template <class F>
FieldMatrix<F> multiply(const F& field, const FieldMatrix<F>& a, const FieldMatrix<F>& b)
{
    if (a.cols() != b.rows()) throw Error("matrix product shape mismatch");
    auto c = zeros(field, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const auto& aik = a(i, k);
            if (field.is_zero(aik)) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (!field.is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
    return c;
}

template <class F>
FieldVector<F> apply(const F& field, const FieldMatrix<F>& a, const FieldVector<F>& v)
{
    if (a.cols() != v.size()) throw Error("matrix-vector shape mismatch");
    auto out = zero_vector(field, a.rows());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        if (field.is_zero(v[j])) continue;
        for (std::size_t i = 0; i < a.rows(); ++i)
            if (!field.is_zero(a(i, j))) out[i] += a(i, j) * v[j];
    }
    return out;
}

/// Nonzero entries of column j as (row, value) pairs.
template <class F>
std::vector<std::pair<std::size_t, typename F::value_type>> column_terms(const F& field,
                                                                        const FieldMatrix<F>& m,
                                                                        std::size_t j)
{
    std::vector<std::pair<std::size_t, typename F::value_type>> out;
    for (std::size_t i = 0; i < m.rows(); ++i)
        if (!field.is_zero(m(i, j))) out.emplace_back(i, m(i, j));
    return out;
}

template <class F>
void axpy(const F& field, const typename F::value_type& alpha, const FieldVector<F>& x,
          FieldVector<F>& y)
{
    if (field.is_zero(alpha)) return;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!field.is_zero(x[i])) y[i] += alpha * x[i];
}

}  // namespace rackgraph::exactla
