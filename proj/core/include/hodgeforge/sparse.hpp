#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace hodgeforge {

struct Triplet {
    std::size_t row = 0;
    std::size_t col = 0;
    std::int64_t value = 0;

    bool operator==(const Triplet&) const = default;
};

/// Integer matrix in coordinate form. Triplets are kept sorted by (col, row)
/// with no duplicates and no explicit zeros.
struct SparseIntMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Triplet> triplets;

    std::size_t nnz() const { return triplets.size(); }
    SparseIntMatrix transpose() const;
    /// Entrywise product, exact in 64-bit arithmetic.
    SparseIntMatrix multiply(const SparseIntMatrix& rhs) const;
    bool is_zero() const { return triplets.empty(); }
    std::vector<std::vector<std::int64_t>> to_dense() const;
};

}  // namespace hodgeforge
