#pragma once

#include "hodgeforge/chain.hpp"
#include "hodgeforge/exact.hpp"

#include <vector>

namespace hodgeforge {

/// Rational k-cochain, coefficients indexed by the canonical k-skeleton.
struct Cochain {
    int degree = 0;
    std::vector<Rational> coefficients;
    /// Set for products landing above the top dimension; such a cochain has
    /// no coefficients and is zero.
    bool beyond_dimension = false;

    bool is_zero() const;
    bool operator==(const Cochain&) const = default;
};

struct CohomologyBasis {
    int degree = 0;
    std::vector<Cochain> representatives;

    std::size_t size() const { return representatives.size(); }
};

Cochain zero_cochain(const ChainSystem& cs, int k);
/// The 0-cochain that is 1 on every vertex (unit of the cup product).
Cochain unit_cochain(const ChainSystem& cs);
Cochain cochain_from(int k, const std::vector<std::int64_t>& values);

Cochain coboundary(const ChainSystem& cs, const Cochain& u);
bool is_cocycle(const ChainSystem& cs, const Cochain& u);
Cochain add(const Cochain& a, const Cochain& b);
Cochain scale(const Cochain& a, const Rational& factor);

/// Integer cocycles whose classes form a basis of H^k modulo torsion, so
/// pairings against the fundamental class are integral and unimodular on
/// closed orientable manifolds. The basis size is b_k.
CohomologyBasis cocycle_basis(const ChainSystem& cs, int k);

/// Cochains as the columns of a matrix, one row per k-simplex.
RationalMatrix as_columns(const std::vector<Cochain>& cochains, std::size_t rows);
/// Indices of a maximal independent subset of the columns, leftmost first.
std::vector<std::size_t> independent_columns(const RationalMatrix& m);

/// Coefficients of a cocycle in the basis, modulo coboundaries.
std::vector<Rational> cohomology_coordinates(const ChainSystem& cs, const CohomologyBasis& basis,
                                             const Cochain& cocycle);

/// Alexander-Whitney product with the global vertex order.
Cochain cup(const ChainSystem& cs, const Cochain& u, const Cochain& v);

/// Throws not_orientable when the complex has no fundamental class and
/// not_pseudomanifold when it is not a pseudomanifold.
FundamentalClass fundamental_class(const SimplicialComplex& k);

Rational pair_with_fundamental(const ChainSystem& cs, const Cochain& w, const FundamentalClass& fc);

/// P[i][j] = <u_i cup w_j, [M]> for bases of H^p and H^q, q = dim - p.
RationalMatrix intersection_matrix(const ChainSystem& cs, int p, const FundamentalClass& fc);
RationalMatrix intersection_matrix(const ChainSystem& cs, int p, int q, const FundamentalClass& fc);

Rational determinant(RationalMatrix m);

}  // namespace hodgeforge
