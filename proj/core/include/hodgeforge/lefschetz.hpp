#pragma once

#include "hodgeforge/chain.hpp"
#include "hodgeforge/cohomology.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace hodgeforge {

struct SimplicialSelfMap {
    VertexMap vertex_map;
};

SimplicialSelfMap identity_map(const SimplicialComplex& k);
/// Swaps the two ends of one axis of a cross-polytope sphere.
SimplicialSelfMap axis_reflection(int axis, int axes);
/// Swaps the two ends of every axis of a cross-polytope sphere.
SimplicialSelfMap cross_polytope_antipodal(int axes);
/// v -> v + step (mod n) on circle(n).
SimplicialSelfMap circle_rotation(int n, int step);

/// Throws map_invalid naming the first simplex whose image is not a simplex,
/// or the first vertex that is unmapped or mapped outside the complex.
void validate_map(const SimplicialComplex& k, const SimplicialSelfMap& t);

/// Image of a simplex under the induced chain map: nullopt when the image
/// degenerates, else the image simplex with the sign of the vertex
/// permutation.
struct ChainImage {
    Simplex simplex;
    int sign = 1;
};
std::optional<ChainImage> chain_image(const Simplex& s, const SimplicialSelfMap& t);

std::int64_t lefschetz_chain(const SimplicialComplex& k, const SimplicialSelfMap& t);

/// Pullback of a cochain along the chain map.
Cochain pullback(const ChainSystem& cs, const SimplicialSelfMap& t, const Cochain& u);

/// Matrix of the induced map on H^k in the cocycle basis (column i is the
/// image of basis element i).
RationalMatrix induced_cohomology_map(const ChainSystem& cs, const SimplicialSelfMap& t, int k);

Rational lefschetz_homology(const ChainSystem& cs, const SimplicialSelfMap& t);

/// Simplices all of whose vertices are fixed.
SimplicialComplex fixed_subcomplex(const SimplicialComplex& k, const SimplicialSelfMap& t);

struct LefschetzReport {
    std::int64_t chain_supertrace = 0;
    Rational homology_supertrace = 0;
    SimplicialComplex fixed;
    std::int64_t chi_fixed = 0;
    /// Simplices mapped to themselves as sets but not vertex by vertex; the
    /// geometric fixed set would need a subdivision to see them.
    std::vector<Simplex> setwise_only;
};

LefschetzReport lefschetz_report(const ChainSystem& cs, const SimplicialSelfMap& t);

}  // namespace hodgeforge
