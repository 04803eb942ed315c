#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qpolya/error.hpp"
#include "qpolya/exec.hpp"
#include "qpolya/rational.hpp"

namespace qpolya {

template <class T>
struct Matrix {
    std::size_t rows = 0, cols = 0;
    std::vector<T> data;

    Matrix() = default;
    Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T{}) {}

    T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
    const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

namespace detail {

// Gauss-Jordan to reduced row echelon form, then read the kernel off the free
// columns. Field scalars only (divide_coeff must invert any nonzero value,
// and T must be explicitly constructible from long). Pivot choice is the
// first nonzero row, so the result is deterministic; the parallel path only
// spreads the per-row elimination, which writes disjoint rows of exact values.
template <class T>
std::vector<std::vector<T>> nullspace_impl(Matrix<T> m, bool parallel) {
    const std::size_t R = m.rows, C = m.cols;
    std::vector<std::size_t> pivot_cols;
    std::size_t pr = 0;
    for (std::size_t col = 0; col < C && pr < R; ++col) {
        std::size_t sel = R;
        for (std::size_t r = pr; r < R; ++r) {
            if (!is_zero(m.at(r, col))) {
                sel = r;
                break;
            }
        }
        if (sel == R) continue;
        if (sel != pr)
            for (std::size_t c = 0; c < C; ++c) std::swap(m.at(sel, c), m.at(pr, c));
        T inv = divide_coeff(T(1), m.at(pr, col));
        for (std::size_t c = col; c < C; ++c) {
            if (!is_zero(m.at(pr, c))) m.at(pr, c) = m.at(pr, c) * inv;
        }
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic) if (parallel)
#endif
        for (long r = 0; r < static_cast<long>(R); ++r) {
            auto ur = static_cast<std::size_t>(r);
            if (ur == pr || is_zero(m.at(ur, col))) continue;
            T factor = m.at(ur, col);
            for (std::size_t c = col; c < C; ++c) {
                if (is_zero(m.at(pr, c))) continue;
                m.at(ur, c) = m.at(ur, c) - factor * m.at(pr, c);
            }
        }
        pivot_cols.push_back(col);
        ++pr;
    }
    std::vector<bool> is_pivot(C, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<T>> basis;
    for (std::size_t f = 0; f < C; ++f) {
        if (is_pivot[f]) continue;
        std::vector<T> v(C, T{});
        v[f] = T(1);
        for (std::size_t t = 0; t < pivot_cols.size(); ++t)
            v[pivot_cols[t]] = T{} - m.at(t, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace detail

template <class T>
std::vector<std::vector<T>> nullspace_serial(Matrix<T> m) {
    return detail::nullspace_impl(std::move(m), false);
}

template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, Exec exec = Exec::Parallel) {
    return detail::nullspace_impl(std::move(m), exec == Exec::Parallel);
}

/// Fraction-free (Bareiss) determinant over an integral domain whose
/// divide_coeff performs exact division; every interior division here is exact
/// by the algorithm's minor identity. Row swaps flip the sign.
template <class T>
T det_bareiss(Matrix<T> m) {
    if (m.rows != m.cols)
        throw DomainError("out_of_range", "determinant of a non-square matrix");
    const std::size_t n = m.rows;
    if (n == 0)
        throw DomainError("out_of_range", "determinant of an empty matrix");
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (is_zero(m.at(k, k))) {
            std::size_t sel = n;
            for (std::size_t r = k + 1; r < n; ++r) {
                if (!is_zero(m.at(r, k))) {
                    sel = r;
                    break;
                }
            }
            if (sel == n) return T{};
            for (std::size_t c = 0; c < n; ++c) std::swap(m.at(sel, c), m.at(k, c));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = (k == 0) ? std::move(num) : divide_coeff(num, m.at(k - 1, k - 1));
            }
        }
    }
    T det = m.at(n - 1, n - 1);
    return negate ? T{} - det : det;
}

} // namespace qpolya
