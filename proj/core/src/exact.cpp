#include "hodgeforge/exact.hpp"

#include "hodgeforge/error.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <unordered_map>

namespace hodgeforge {

namespace {

template <class Int>
using SparseColumn = std::vector<std::pair<std::size_t, Int>>;

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer checked_sub(const Integer& a, const Integer& b) { return a - b; }

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline Integer gcd_of(const Integer& a, const Integer& b) { return boost::multiprecision::gcd(a, b); }

/// col <- p * col - c * pivot, where p and c are the entries at the shared
/// leading row; then divide out the content.
template <class Int>
SparseColumn<Int> eliminate(const SparseColumn<Int>& col, const SparseColumn<Int>& pivot) {
    const Int p = pivot.back().second;
    const Int c = col.back().second;
    const Int g = gcd_of(p, c);
    const Int pm = p / g, cm = c / g;

    SparseColumn<Int> out;
    out.reserve(col.size() + pivot.size());
    std::size_t i = 0, j = 0;
    while (i < col.size() || j < pivot.size()) {
        if (j == pivot.size() || (i < col.size() && col[i].first < pivot[j].first)) {
            out.push_back({col[i].first, checked_mul(pm, col[i].second)});
            ++i;
        } else if (i == col.size() || pivot[j].first < col[i].first) {
            out.push_back({pivot[j].first, checked_sub(Int(0), checked_mul(cm, pivot[j].second))});
            ++j;
        } else {
            Int v = checked_sub(checked_mul(pm, col[i].second), checked_mul(cm, pivot[j].second));
            if (v != 0) out.push_back({col[i].first, v});
            ++i;
            ++j;
        }
    }
    Int content = 0;
    for (const auto& e : out) content = gcd_of(content, e.second < 0 ? Int(-e.second) : e.second);
    if (content > 1)
        for (auto& e : out) e.second /= content;
    return out;
}

template <class Int>
std::size_t reduce_rank(const SparseIntMatrix& m) {
    std::vector<SparseColumn<Int>> cols(m.cols);
    for (const Triplet& t : m.triplets) cols[t.col].push_back({t.row, Int(t.value)});
    for (auto& c : cols) std::sort(c.begin(), c.end(), [](auto& a, auto& b) { return a.first < b.first; });

    std::unordered_map<std::size_t, std::size_t> pivot_of_row;
    std::vector<SparseColumn<Int>> reduced;
    for (auto& col : cols) {
        while (!col.empty()) {
            auto it = pivot_of_row.find(col.back().first);
            if (it == pivot_of_row.end()) break;
            col = eliminate(col, reduced[it->second]);
        }
        if (!col.empty()) {
            pivot_of_row.emplace(col.back().first, reduced.size());
            reduced.push_back(std::move(col));
        }
    }
    return reduced.size();
}

Integer abs_of(const Integer& x) { return x < 0 ? Integer(-x) : x; }

/// Floor-free quotient so that |a - q b| < |b|.
Integer trunc_div(const Integer& a, const Integer& b) { return a / b; }

}  // namespace

std::size_t exact_rank(const SparseIntMatrix& m) {
    try {
        return reduce_rank<std::int64_t>(m);
    } catch (const Overflow&) {
        return reduce_rank<Integer>(m);
    }
}

IntMatrix to_int_matrix(const SparseIntMatrix& m) {
    IntMatrix d(m.rows, m.cols);
    for (const Triplet& t : m.triplets) d(t.row, t.col) = t.value;
    return d;
}

RationalMatrix to_rational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

std::size_t rational_rank(RationalMatrix m) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, c) == 0) continue;
            const Rational f = m(r, c) / m(rank, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

IntMatrix integer_kernel_basis(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    IntMatrix w = a;
    IntMatrix u(n, n);
    for (std::size_t i = 0; i < n; ++i) u(i, i) = 1;

    auto col_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
        // column dst -= q * column src, in both w and u
        for (std::size_t r = 0; r < m; ++r)
            if (w(r, src) != 0) w(r, dst) -= q * w(r, src);
        for (std::size_t r = 0; r < n; ++r)
            if (u(r, src) != 0) u(r, dst) -= q * u(r, src);
    };

    std::size_t pivot = 0;
    for (std::size_t r = 0; r < m && pivot < n; ++r) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t c = pivot; c < n; ++c)
                if (w(r, c) != 0 && (!best || abs_of(w(r, c)) < abs_of(w(r, *best)))) best = c;
            if (!best) break;
            if (*best != pivot) {
                w.swap_columns(*best, pivot);
                u.swap_columns(*best, pivot);
            }
            bool clean = true;
            for (std::size_t c = pivot + 1; c < n; ++c) {
                if (w(r, c) == 0) continue;
                col_axpy(c, pivot, trunc_div(w(r, c), w(r, pivot)));
                if (w(r, c) != 0) clean = false;
            }
            if (clean) {
                ++pivot;
                break;
            }
        }
    }

    IntMatrix kernel(n, n - pivot);
    for (std::size_t c = pivot; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r) kernel(r, c - pivot) = u(r, c);
    return kernel;
}

RationalMatrix solve_full_column_rank(const RationalMatrix& a, const RationalMatrix& b) {
    const std::size_t n = a.rows(), z = a.cols(), m = b.cols();
    if (b.rows() != n) throw Error(ErrorKind::dimension_mismatch, "solve: row counts differ");
    RationalMatrix aug(n, z + m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < z; ++j) aug(i, j) = a(i, j);
        for (std::size_t j = 0; j < m; ++j) aug(i, z + j) = b(i, j);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < z; ++c) {
        std::size_t p = rank;
        while (p < n && aug(p, c) == 0) ++p;
        if (p == n) throw Error(ErrorKind::dimension_mismatch, "solve: matrix lacks full column rank");
        for (std::size_t j = 0; j < z + m; ++j) std::swap(aug(p, j), aug(rank, j));
        const Rational inv = 1 / aug(rank, c);
        for (std::size_t j = c; j < z + m; ++j) aug(rank, j) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == rank || aug(r, c) == 0) continue;
            const Rational f = aug(r, c);
            for (std::size_t j = c; j < z + m; ++j) aug(r, j) -= f * aug(rank, j);
        }
        ++rank;
    }
    for (std::size_t r = rank; r < n; ++r)
        for (std::size_t j = z; j < z + m; ++j)
            if (aug(r, j) != 0) throw Error(ErrorKind::dimension_mismatch, "solve: inconsistent system");
    RationalMatrix x(z, m);
    for (std::size_t i = 0; i < z; ++i)
        for (std::size_t j = 0; j < m; ++j) x(i, j) = aug(i, z + j);
    return x;
}

IntMatrix saturated_complement(IntMatrix basis, IntMatrix coords) {
    const std::size_t z = coords.rows(), m = coords.cols();
    // Unimodular row operations on coords, mirrored as inverse column
    // operations on basis so that basis * coords is unchanged.
    auto row_axpy = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t j = 0; j < m; ++j)
            if (coords(src, j) != 0) coords(dst, j) -= q * coords(src, j);
        for (std::size_t r = 0; r < basis.rows(); ++r)
            if (basis(r, dst) != 0) basis(r, src) += q * basis(r, dst);
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < m; ++j) std::swap(coords(a, j), coords(b, j));
        basis.swap_columns(a, b);
    };

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m && rank < z; ++c) {
        for (;;) {
            std::optional<std::size_t> best;
            for (std::size_t r = rank; r < z; ++r)
                if (coords(r, c) != 0 && (!best || abs_of(coords(r, c)) < abs_of(coords(*best, c)))) best = r;
            if (!best) break;
            if (*best != rank) row_swap(*best, rank);
            bool clean = true;
            for (std::size_t r = rank + 1; r < z; ++r) {
                if (coords(r, c) == 0) continue;
                row_axpy(r, rank, trunc_div(coords(r, c), coords(rank, c)));
                if (coords(r, c) != 0) clean = false;
            }
            if (clean) {
                ++rank;
                break;
            }
        }
    }

    IntMatrix out(basis.rows(), z - rank);
    for (std::size_t c = rank; c < z; ++c)
        for (std::size_t r = 0; r < basis.rows(); ++r) out(r, c - rank) = basis(r, c);
    return out;
}

}  // namespace hodgeforge
