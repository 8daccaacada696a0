#include "hodgeforge/sparse.hpp"

#include "hodgeforge/error.hpp"

#include <algorithm>
#include <map>

namespace hodgeforge {

namespace {

void canonicalize(std::vector<Triplet>& ts) {
    std::sort(ts.begin(), ts.end(), [](const Triplet& a, const Triplet& b) {
        return a.col != b.col ? a.col < b.col : a.row < b.row;
    });
}

}  // namespace

SparseIntMatrix SparseIntMatrix::transpose() const {
    SparseIntMatrix t{cols, rows, {}};
    t.triplets.reserve(triplets.size());
    for (const Triplet& e : triplets) t.triplets.push_back({e.col, e.row, e.value});
    canonicalize(t.triplets);
    return t;
}

SparseIntMatrix SparseIntMatrix::multiply(const SparseIntMatrix& rhs) const {
    if (cols != rhs.rows)
        throw Error(ErrorKind::dimension_mismatch, "sparse product: inner dimensions differ");
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> by_col(cols);
    for (const Triplet& e : triplets) by_col[e.col].push_back({e.row, e.value});

    SparseIntMatrix out{rows, rhs.cols, {}};
    std::map<std::size_t, std::int64_t> acc;
    std::size_t current = rhs.cols;
    auto flush = [&] {
        for (const auto& [r, v] : acc)
            if (v != 0) out.triplets.push_back({r, current, v});
        acc.clear();
    };
    for (const Triplet& e : rhs.triplets) {
        if (e.col != current) {
            if (current != rhs.cols) flush();
            current = e.col;
        }
        for (const auto& [r, v] : by_col[e.row]) acc[r] += v * e.value;
    }
    if (current != rhs.cols) flush();
    return out;
}

std::vector<std::vector<std::int64_t>> SparseIntMatrix::to_dense() const {
    std::vector<std::vector<std::int64_t>> d(rows, std::vector<std::int64_t>(cols, 0));
    for (const Triplet& e : triplets) d[e.row][e.col] = e.value;
    return d;
}

}  // namespace hodgeforge
