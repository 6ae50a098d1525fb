#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "alperm/core.hpp"

namespace alperm {

/// Dense square complex matrix, row-major. Entries must be finite.
class Matrix {
public:
    explicit Matrix(int n) : n_(n), a_(check_dim(n) * n) {}

    Matrix(int n, std::vector<Complex> entries) : n_(n), a_(std::move(entries)) {
        check_dim(n);
        if (a_.size() != static_cast<std::size_t>(n) * n)
            throw std::invalid_argument("Matrix: entry count does not match dimension");
        for (const Complex& z : a_)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
                throw std::invalid_argument("Matrix: non-finite entry");
    }

    static Matrix from_real(int n, const std::vector<double>& entries) {
        std::vector<Complex> z(entries.begin(), entries.end());
        return Matrix(n, std::move(z));
    }

    static Matrix identity(int n) {
        Matrix m(n);
        for (int i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    static Matrix ones(int n) {
        Matrix m(n);
        for (auto& z : m.a_) z = 1.0;
        return m;
    }

    int n() const { return n_; }

    Complex& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    const std::vector<Complex>& entries() const { return a_; }

    /// Principal submatrix with rows and columns picked by `idx` (ascending
    /// or not; the output follows the given order). idx must be non-empty.
    Matrix submatrix(const std::vector<int>& idx) const {
        const int m = static_cast<int>(idx.size());
        Matrix out(m);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) out(i, j) = (*this)(idx[i], idx[j]);
        return out;
    }

    bool is_real(double tol = 0.0) const {
        for (const Complex& z : a_)
            if (std::abs(z.imag()) > tol) return false;
        return true;
    }

    bool is_symmetric(double tol = 0.0) const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                if (std::abs((*this)(i, j) - (*this)(j, i)) > tol) return false;
        return true;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    static int check_dim(int n) {
        if (n < 1) throw std::invalid_argument("Matrix: dimension must be >= 1");
        return n;
    }

    int n_;
    std::vector<Complex> a_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Matrix +: dimension mismatch");
    Matrix out(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out(i, j) = a(i, j) + b(i, j);
    return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n() != b.n()) throw std::invalid_argument("Matrix *: dimension mismatch");
    const int n = a.n();
    Matrix out(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Complex aik = a(i, k);
            for (int j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

inline Matrix operator*(Complex s, const Matrix& a) {
    Matrix out(a.n());
    for (int i = 0; i < a.n(); ++i)
        for (int j = 0; j < a.n(); ++j) out(i, j) = s * a(i, j);
    return out;
}

}  // namespace alperm
