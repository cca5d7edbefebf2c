#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nbn/cyclotomic.hpp"

namespace nbn {

/// Element of F_p carrying its modulus.
struct Fp {
    std::uint64_t v = 0;
    std::uint64_t p = 0;

    Fp() = default;
    Fp(std::uint64_t value, std::uint64_t modulus) : v(value % modulus), p(modulus) {}
    static Fp from_signed(long value, std::uint64_t modulus);

    Fp operator+(const Fp& o) const { return {v + o.v >= p ? v + o.v - p : v + o.v, p, 0}; }
    Fp operator-(const Fp& o) const { return {v >= o.v ? v - o.v : v + p - o.v, p, 0}; }
    Fp operator-() const { return {v ? p - v : 0, p, 0}; }
    Fp operator*(const Fp& o) const { return {mulmod(v, o.v, p), p, 0}; }
    Fp operator/(const Fp& o) const { return {mulmod(v, invmod(o.v, p), p), p, 0}; }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v == b.v; }
    friend bool operator!=(const Fp& a, const Fp& b) { return a.v != b.v; }

private:
    Fp(std::uint64_t value, std::uint64_t modulus, int) : v(value), p(modulus) {}
};

inline bool is_zero(const Fp& x) { return x.v == 0; }
inline bool is_zero(const mpq_class& x) { return x == 0; }
inline bool is_zero(const mpz_class& x) { return x == 0; }
inline bool is_zero(const Cyclo& x) { return x.is_zero(); }
inline Fp zero_like(const Fp& x) { return Fp(0, x.p); }
inline Fp one_like(const Fp& x) { return Fp(1, x.p); }
inline mpq_class zero_like(const mpq_class&) { return 0; }
inline mpq_class one_like(const mpq_class&) { return 1; }
inline Cyclo zero_like(const Cyclo&) { return Cyclo(); }
inline Cyclo one_like(const Cyclo&) { return Cyclo(1L); }

/// Dense row-major matrix.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
        : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    void swap_rows(std::size_t r1, std::size_t r2) {
        if (r1 == r2) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(r1, c), (*this)(r2, c));
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> a_;
};

/// Reduced row echelon form over a field, in place; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        const F inv = one_like(m(row, col)) / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (!is_zero(m(row, c))) m(row, c) = m(row, c) * inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col))) continue;
            const F f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!is_zero(m(row, c))) m(r, c) = m(r, c) - f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

/// Rank over a field by forward elimination.
template <class F>
std::size_t rank_field(Matrix<F> m) {
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t piv = row;
        while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
        if (piv == m.rows()) continue;
        m.swap_rows(row, piv);
        const F inv = one_like(m(row, col)) / m(row, col);
        for (std::size_t r = row + 1; r < m.rows(); ++r) {
            if (is_zero(m(r, col))) continue;
            const F f = m(r, col) * inv;
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!is_zero(m(row, c))) m(r, c) = m(r, c) - f * m(row, c);
        }
        ++row;
    }
    return row;
}

/// Basis of the right kernel {v : m v = 0}.
template <class F>
std::vector<std::vector<F>> nullspace(Matrix<F> m, const F& sample) {
    const auto pivots = rref_in_place(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), zero_like(sample));
        v[free] = one_like(sample);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m(k, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

/// Fraction-free (Bareiss) rank over Z.
std::size_t rank_integer(Matrix<mpz_class> m);

}  // namespace nbn
