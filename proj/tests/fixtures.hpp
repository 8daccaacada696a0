#pragma once

#include "hodgeforge/complex.hpp"
#include "oracles.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

inline std::vector<oracle::Cell> facets_of(const hodgeforge::SimplicialComplex& k) {
    std::vector<oracle::Cell> out;
    for (const auto& f : k.facets()) out.push_back(f.vertices);
    return out;
}

inline hodgeforge::SimplicialComplex octahedron() { return hodgeforge::cross_polytope_sphere(2); }
inline hodgeforge::SimplicialComplex sixteen_cell() { return hodgeforge::cross_polytope_sphere(3); }

/// Closed manifolds small enough for dense checks.
inline std::vector<std::pair<std::string, hodgeforge::SimplicialComplex>> closed_manifolds() {
    using namespace hodgeforge;
    return {
        {"circle3", circle(3)},
        {"circle6", circle(6)},
        {"tetra", simplex_sphere(2)},
        {"octahedron", octahedron()},
        {"s3_simplex", simplex_sphere(3)},
        {"sixteen_cell", sixteen_cell()},
        {"torus", torus()},
        {"rp2", projective_plane()},
        {"icosahedron", icosahedron_sphere()},
        {"sd_tetra", barycentric_subdivision(simplex_sphere(2))},
    };
}

}  // namespace fixtures
