#pragma once

#include "hodgeforge/sparse.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <vector>

namespace hodgeforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Row-major dense matrix for exact arithmetic.
template <class T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<T> column(std::size_t c) const {
        std::vector<T> v(rows_);
        for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
        return v;
    }
    void swap_columns(std::size_t a, std::size_t b) {
        for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    bool operator==(const DenseMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using IntMatrix = DenseMatrix<Integer>;
using RationalMatrix = DenseMatrix<Rational>;

/// Rank over the rationals by fraction-free column reduction. Runs in
/// 64-bit arithmetic and falls back to arbitrary precision on overflow.
std::size_t exact_rank(const SparseIntMatrix& m);

IntMatrix to_int_matrix(const SparseIntMatrix& m);
RationalMatrix to_rational(const IntMatrix& m);

std::size_t rational_rank(RationalMatrix m);

/// Columns form a Z-basis of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel_basis(const IntMatrix& a);

/// Solves A X = B exactly for A of full column rank. Throws
/// dimension_mismatch when the system is inconsistent.
RationalMatrix solve_full_column_rank(const RationalMatrix& a, const RationalMatrix& b);

/// Given a lattice basis `basis` (columns) and integer coordinates `coords`
/// of a set of lattice vectors, returns lattice vectors whose classes form
/// a Z-basis of the lattice modulo the saturation of span(basis * coords).
IntMatrix saturated_complement(IntMatrix basis, IntMatrix coords);

}  // namespace hodgeforge
