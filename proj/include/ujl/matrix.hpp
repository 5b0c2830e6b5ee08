#pragma once

// Dense row-major matrices. Integer instantiations carry the exact structural
// identities; double instantiations feed the eigensolver.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ujl {

template <typename T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, T fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t order) {
        Matrix out(order, order);
        for (std::size_t i = 0; i < order; ++i) out(i, i) = T{1};
        return out;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    const std::vector<T>& data() const noexcept { return data_; }

    Matrix transpose() const {
        Matrix out(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
        return out;
    }

    template <typename U>
    Matrix<U> cast() const {
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
        return out;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    Matrix& operator+=(const Matrix& rhs) {
        require_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& rhs) {
        require_same_shape(rhs);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
        return *this;
    }
    Matrix& operator*=(T scalar) {
        for (auto& v : data_) v *= scalar;
        return *this;
    }

    friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
    friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
    friend Matrix operator*(T scalar, Matrix rhs) { return rhs *= scalar; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T aik = a(i, k);
                if (aik == T{}) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
            }
        return out;
    }

private:
    void require_same_shape(const Matrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("matrix shapes differ");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

/// Kronecker product: block (i, j) of the result is a(i, j) * b.
template <typename T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
    Matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T aij = a(i, j);
            if (aij == T{}) continue;
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
        }
    return out;
}

/// Square matrix whose entries are only ever written in symmetric pairs, so
/// entries(i, j) == entries(j, i) holds bit for bit.
template <typename T>
class SymmetricMatrix {
public:
    using value_type = T;

    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order) : m_(order, order) {}

    /// Copies a square matrix after checking exact symmetry.
    static SymmetricMatrix from_matrix(const Matrix<T>& m) {
        if (m.rows() != m.cols()) throw std::invalid_argument("symmetric matrix must be square");
        SymmetricMatrix out(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = i; j < m.cols(); ++j) {
                if (m(i, j) != m(j, i)) throw std::invalid_argument("matrix is not symmetric");
                out.set(i, j, m(i, j));
            }
        return out;
    }

    std::size_t order() const noexcept { return m_.rows(); }

    T operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

    void set(std::size_t i, std::size_t j, T v) noexcept {
        m_(i, j) = v;
        m_(j, i) = v;
    }
    void add(std::size_t i, std::size_t j, T v) noexcept {
        m_(i, j) += v;
        if (i != j) m_(j, i) += v;
    }

    T trace() const noexcept {
        T t{};
        for (std::size_t i = 0; i < order(); ++i) t += m_(i, i);
        return t;
    }

    const Matrix<T>& matrix() const noexcept { return m_; }

    template <typename U>
    SymmetricMatrix<U> cast() const {
        SymmetricMatrix<U> out(order());
        for (std::size_t i = 0; i < order(); ++i)
            for (std::size_t j = i; j < order(); ++j) out.set(i, j, static_cast<U>(m_(i, j)));
        return out;
    }

    friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

private:
    Matrix<T> m_;
};

using IntMatrix = Matrix<std::int64_t>;
using IntSymmetricMatrix = SymmetricMatrix<std::int64_t>;

} // namespace ujl
