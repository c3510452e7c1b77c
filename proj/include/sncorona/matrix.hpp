// matrix.hpp - dense row-major matrices over an arbitrary scalar type, with
// Kronecker product and Kronecker sum.
#pragma once

#include <sncorona/error.hpp>
#include <sncorona/exact.hpp>

#include <cstddef>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace sncorona {

template <class T>
class Matrix {
public:
    using value_type = T;

    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw Error(ErrorCode::NotSquare, "ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix ones(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, T(1)); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    T trace() const {
        T s(0);
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i) s += (*this)(i, i);
        return s;
    }

    template <class U>
    Matrix<U> cast() const {
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = static_cast<U>((*this)(i, j));
        return out;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    Matrix& operator*=(const T& s) {
        for (auto& x : data_) x *= s;
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
    friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw Error(ErrorCode::NotSquare, "inner dimensions differ in product");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (aik == T(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    /// Row per line, entries separated by single spaces.
    friend std::ostream& operator<<(std::ostream& out, const Matrix& m) {
        for (std::size_t i = 0; i < m.rows_; ++i) {
            for (std::size_t j = 0; j < m.cols_; ++j) {
                if (j) out << ' ';
                out << m(i, j);
            }
            out << '\n';
        }
        return out;
    }

private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::NotSquare, "shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RationalMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

template <class T>
std::string to_string(const Matrix<T>& m) {
    std::ostringstream out;
    out << m;
    return out.str();
}

template <class T>
void require_square(const Matrix<T>& m, const char* what) {
    if (!m.is_square()) {
        throw Error(ErrorCode::NotSquare, std::string(what) + ": " + std::to_string(m.rows()) + "x" +
                                              std::to_string(m.cols()) + " matrix");
    }
}

/// C (x) D: block (i, j) is c_ij * D. Shape (m p) x (n q).
template <class T>
Matrix<T> kronecker_product(const Matrix<T>& c, const Matrix<T>& d) {
    Matrix<T> out(c.rows() * d.rows(), c.cols() * d.cols());
    for (std::size_t i = 0; i < c.rows(); ++i)
        for (std::size_t j = 0; j < c.cols(); ++j) {
            const T& cij = c(i, j);
            if (cij == T(0)) continue;
            for (std::size_t k = 0; k < d.rows(); ++k)
                for (std::size_t l = 0; l < d.cols(); ++l) out(i * d.rows() + k, j * d.cols() + l) = cij * d(k, l);
        }
    return out;
}

/// D (+) C = C (x) I_p + I_n (x) D, with D of order p and C of order n.
/// Argument order follows the written form D (+) C.
template <class T>
Matrix<T> kronecker_sum(const Matrix<T>& d, const Matrix<T>& c) {
    require_square(d, "kronecker_sum");
    require_square(c, "kronecker_sum");
    return kronecker_product(c, Matrix<T>::identity(d.rows())) + kronecker_product(Matrix<T>::identity(c.rows()), d);
}

template <class T>
bool is_symmetric(const Matrix<T>& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (!(m(i, j) == m(j, i))) return false;
    return true;
}

inline RealMatrix to_real(const IntMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = to_double(m(i, j));
    return out;
}

/// Permutation similarity: out(perm[i], perm[j]) = m(i, j).
template <class T>
Matrix<T> permute_symmetric(const Matrix<T>& m, const std::vector<std::size_t>& perm) {
    require_square(m, "permute_symmetric");
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(perm[i], perm[j]) = m(i, j);
    return out;
}

}  // namespace sncorona
