#include "hodgeforge/cohomology.hpp"

#include "hodgeforge/error.hpp"

#include <algorithm>

namespace hodgeforge {

bool Cochain::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& r) { return r == 0; });
}

Cochain zero_cochain(const ChainSystem& cs, int k) {
    Cochain c;
    c.degree = k;
    c.beyond_dimension = k > cs.dim();
    c.coefficients.assign(cs.complex().count(k), Rational(0));
    return c;
}

Cochain unit_cochain(const ChainSystem& cs) {
    Cochain c = zero_cochain(cs, 0);
    std::fill(c.coefficients.begin(), c.coefficients.end(), Rational(1));
    return c;
}

Cochain cochain_from(int k, const std::vector<std::int64_t>& values) {
    Cochain c;
    c.degree = k;
    for (std::int64_t v : values) c.coefficients.emplace_back(v);
    return c;
}

Cochain coboundary(const ChainSystem& cs, const Cochain& u) {
    Cochain du = zero_cochain(cs, u.degree + 1);
    if (u.coefficients.size() != cs.complex().count(u.degree))
        throw Error(ErrorKind::dimension_mismatch, "cochain does not match the complex");
    // (du)(tau) = sum_i (-1)^i u(face_i tau), i.e. the transpose of the boundary.
    for (const Triplet& t : cs.boundary(u.degree + 1).triplets)
        if (u.coefficients[t.row] != 0) du.coefficients[t.col] += t.value * u.coefficients[t.row];
    return du;
}

bool is_cocycle(const ChainSystem& cs, const Cochain& u) { return coboundary(cs, u).is_zero(); }

Cochain add(const Cochain& a, const Cochain& b) {
    if (a.degree != b.degree || a.coefficients.size() != b.coefficients.size())
        throw Error(ErrorKind::dimension_mismatch, "adding cochains of different shape");
    Cochain c = a;
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) c.coefficients[i] += b.coefficients[i];
    return c;
}

Cochain scale(const Cochain& a, const Rational& factor) {
    Cochain c = a;
    for (auto& x : c.coefficients) x *= factor;
    return c;
}

RationalMatrix as_columns(const std::vector<Cochain>& cochains, std::size_t rows) {
    RationalMatrix m(rows, cochains.size());
    for (std::size_t j = 0; j < cochains.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m(i, j) = cochains[j].coefficients[i];
    return m;
}

std::vector<std::size_t> independent_columns(const RationalMatrix& input) {
    RationalMatrix m = input;
    std::vector<std::size_t> picked;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        for (std::size_t j = c; j < m.cols(); ++j) std::swap(m(p, j), m(rank, j));
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (m(r, c) == 0) continue;
            const Rational f = m(r, c) / m(rank, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
        }
        picked.push_back(c);
        ++rank;
    }
    return picked;
}

namespace {

IntMatrix coboundary_matrix(const ChainSystem& cs, int k) {
    const SparseIntMatrix d = cs.coboundary(k);
    return to_int_matrix(d);
}

std::vector<Cochain> coboundary_generators(const ChainSystem& cs, int k) {
    std::vector<Cochain> gens;
    if (k < 1) return gens;
    const std::size_t rows = cs.complex().count(k);
    const std::size_t cols = cs.complex().count(k - 1);
    gens.resize(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        gens[j].degree = k;
        gens[j].coefficients.assign(rows, Rational(0));
    }
    // Column j of d_{k-1} is the coboundary of the indicator of simplex j.
    for (const Triplet& t : cs.boundary(k).triplets) gens[t.row].coefficients[t.col] = t.value;
    return gens;
}

}  // namespace

CohomologyBasis cocycle_basis(const ChainSystem& cs, int k) {
    CohomologyBasis basis;
    basis.degree = k;
    if (k < 0 || k > cs.dim()) return basis;
    const std::size_t n = cs.complex().count(k);

    IntMatrix cocycles;
    if (k == cs.dim()) {
        cocycles = IntMatrix(n, n);
        for (std::size_t i = 0; i < n; ++i) cocycles(i, i) = 1;
    } else {
        cocycles = integer_kernel_basis(coboundary_matrix(cs, k));
    }

    IntMatrix coords(cocycles.cols(), 0);
    if (k >= 1 && cocycles.cols() > 0) {
        const IntMatrix gens = coboundary_matrix(cs, k - 1);
        const RationalMatrix x = solve_full_column_rank(to_rational(cocycles), to_rational(gens));
        coords = IntMatrix(x.rows(), x.cols());
        for (std::size_t i = 0; i < x.rows(); ++i)
            for (std::size_t j = 0; j < x.cols(); ++j) {
                // Coboundaries are integer points of the cocycle lattice.
                if (denominator(x(i, j)) != 1)
                    throw Error(ErrorKind::dimension_mismatch, "non-integral lattice coordinates");
                coords(i, j) = numerator(x(i, j));
            }
    }

    const IntMatrix reps = saturated_complement(cocycles, coords);
    for (std::size_t c = 0; c < reps.cols(); ++c) {
        Cochain u;
        u.degree = k;
        u.coefficients.reserve(n);
        for (std::size_t r = 0; r < n; ++r) u.coefficients.emplace_back(reps(r, c));
        basis.representatives.push_back(std::move(u));
    }
    return basis;
}

std::vector<Rational> cohomology_coordinates(const ChainSystem& cs, const CohomologyBasis& basis,
                                             const Cochain& cocycle) {
    const int k = basis.degree;
    const std::size_t n = cs.complex().count(k);
    const std::size_t b = basis.size();
    if (b == 0) return {};

    std::vector<Cochain> columns = basis.representatives;
    const auto gens = coboundary_generators(cs, k);
    const RationalMatrix gen_matrix = as_columns(gens, n);
    for (std::size_t j : independent_columns(gen_matrix)) columns.push_back(gens[j]);

    RationalMatrix rhs(n, 1);
    for (std::size_t i = 0; i < n; ++i) rhs(i, 0) = cocycle.coefficients[i];
    const RationalMatrix x = solve_full_column_rank(as_columns(columns, n), rhs);
    std::vector<Rational> out(b);
    for (std::size_t i = 0; i < b; ++i) out[i] = x(i, 0);
    return out;
}

Cochain cup(const ChainSystem& cs, const Cochain& u, const Cochain& v) {
    const int p = u.degree, q = v.degree;
    Cochain w = zero_cochain(cs, p + q);
    if (p + q > cs.dim()) return w;
    const SimplicialComplex& k = cs.complex();
    if (u.coefficients.size() != k.count(p) || v.coefficients.size() != k.count(q))
        throw Error(ErrorKind::dimension_mismatch, "cochain does not match the complex");

    const auto& cells = k.skeleton(p + q);
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const auto& vs = cells[j].vertices;
        Simplex front, back;
        front.vertices.assign(vs.begin(), vs.begin() + p + 1);
        back.vertices.assign(vs.begin() + p, vs.end());
        const Rational& a = u.coefficients[*k.index_of(front)];
        if (a == 0) continue;
        const Rational& b = v.coefficients[*k.index_of(back)];
        if (b == 0) continue;
        w.coefficients[j] = a * b;
    }
    return w;
}

FundamentalClass fundamental_class(const SimplicialComplex& k) {
    OrientationResult r = orient(k);
    if (!r.orientable()) {
        std::string witness;
        for (std::size_t f : r.witness_cycle)
            witness += (witness.empty() ? "" : " ") + to_string(k.skeleton(k.dim())[f]);
        throw Error(ErrorKind::not_orientable, "complex '" + k.name() + "' is not orientable; witness facets " +
                                                   witness);
    }
    return *r.fundamental_class;
}

Rational pair_with_fundamental(const ChainSystem& cs, const Cochain& w, const FundamentalClass& fc) {
    if (w.degree != cs.dim())
        throw Error(ErrorKind::dimension_mismatch, "pairing needs a top-degree cochain");
    if (fc.orientation.size() != w.coefficients.size())
        throw Error(ErrorKind::dimension_mismatch, "fundamental class does not match the complex");
    Rational total = 0;
    for (std::size_t i = 0; i < fc.orientation.size(); ++i)
        if (w.coefficients[i] != 0) total += fc.orientation[i] * w.coefficients[i];
    return total;
}

RationalMatrix intersection_matrix(const ChainSystem& cs, int p, const FundamentalClass& fc) {
    return intersection_matrix(cs, p, cs.dim() - p, fc);
}

RationalMatrix intersection_matrix(const ChainSystem& cs, int p, int q, const FundamentalClass& fc) {
    if (p < 0 || q < 0 || p + q != cs.dim())
        throw Error(ErrorKind::dimension_mismatch, "intersection matrix needs p + q = dim");
    const CohomologyBasis left = cocycle_basis(cs, p);
    const CohomologyBasis right = (p == q) ? left : cocycle_basis(cs, q);
    RationalMatrix m(left.size(), right.size());
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = 0; j < right.size(); ++j)
            m(i, j) = pair_with_fundamental(cs, cup(cs, left.representatives[i], right.representatives[j]), fc);
    return m;
}

Rational determinant(RationalMatrix m) {
    if (m.rows() != m.cols()) throw Error(ErrorKind::dimension_mismatch, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            det = -det;
        }
        det *= m(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m(r, c) == 0) continue;
            const Rational f = m(r, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
        }
    }
    return det;
}

}  // namespace hodgeforge
