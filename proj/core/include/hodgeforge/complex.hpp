#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hodgeforge {

using VertexId = std::int64_t;

/// A simplex stored as its strictly ascending vertex list.
struct Simplex {
    std::vector<VertexId> vertices;

    Simplex() = default;
    /// Sorts the input; throws malformed_input on repeated or negative vertices.
    explicit Simplex(std::vector<VertexId> vs);

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    std::size_t size() const { return vertices.size(); }
    VertexId operator[](std::size_t i) const { return vertices[i]; }

    /// Face obtained by deleting the i-th vertex.
    Simplex face(std::size_t i) const;

    auto operator<=>(const Simplex&) const = default;
    bool operator==(const Simplex&) const = default;
};

std::string to_string(const Simplex& s);

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept;
};

/// Vertex relabeling; used both for group generators and self-maps.
using VertexMap = std::map<VertexId, VertexId>;

/// Finite group acting by simplicial automorphisms, given by generators.
struct GroupAction {
    std::vector<VertexMap> generators;
};

/// Immutable, face-closed simplicial complex. Skeleton lists are sorted
/// lexicographically; that order is the canonical basis everywhere else.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex from_facets(const std::vector<std::vector<VertexId>>& facets,
                                         std::string name = "");
    static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices,
                                            std::string name = "");

    const std::string& name() const { return name_; }
    SimplicialComplex renamed(std::string name) const;

    /// -1 for the empty complex.
    int dim() const { return static_cast<int>(skeleton_.size()) - 1; }
    bool empty() const { return skeleton_.empty(); }

    const std::vector<Simplex>& facets() const { return facets_; }
    const std::vector<Simplex>& skeleton(int k) const;
    std::size_t count(int k) const { return (k < 0 || k > dim()) ? 0 : skeleton_[k].size(); }
    std::vector<std::size_t> f_vector() const;
    std::int64_t euler_characteristic() const;

    std::vector<VertexId> vertices() const;
    std::optional<std::size_t> index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s).has_value(); }

    /// Every codimension-one face lies in exactly two facets, all facets
    /// have the top dimension, and the facet adjacency graph is connected.
    bool is_pseudomanifold() const;

private:
    std::string name_;
    std::vector<Simplex> facets_;
    std::vector<std::vector<Simplex>> skeleton_;
    std::vector<std::unordered_map<Simplex, std::size_t, SimplexHash>> index_;
};

// Generators ---------------------------------------------------------------

SimplicialComplex build_from_facets(const std::vector<std::vector<VertexId>>& facets,
                                    std::string name = "");

SimplicialComplex point_complex();
/// Boundary of the (n+1)-simplex on vertices 0..n+1.
SimplicialComplex simplex_sphere(int n);
/// Boundary of the (n+1)-dimensional cross polytope. Axis i has vertices
/// 2i (positive end) and 2i+1 (negative end).
SimplicialComplex cross_polytope_sphere(int n);
/// Cycle graph on vertices 0..n-1, n >= 3.
SimplicialComplex circle(int n);
/// Boundary of the regular icosahedron; antipode of vertex v is (v + 6) mod 12.
SimplicialComplex icosahedron_sphere();
const std::vector<std::vector<VertexId>>& icosahedron_facets();
VertexMap icosahedron_antipodal_map();
/// Icosahedron modulo the antipodal involution: the six-vertex RP^2.
SimplicialComplex projective_plane();
/// Staircase triangulation of the torus from two triangle circles.
SimplicialComplex torus();

// Constructions ------------------------------------------------------------

/// Staircase (shuffle) triangulation of |K| x |L|. Vertex (a, b) gets id
/// rank(a) * |V(L)| + rank(b).
SimplicialComplex product(const SimplicialComplex& k, const SimplicialComplex& l);
SimplicialComplex quotient(const SimplicialComplex& k, const GroupAction& action);
/// Vertex ids of the result index the simplices of K, dimension-major in
/// canonical order.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);
/// Vertices of L are shifted past the largest vertex of K.
SimplicialComplex join(const SimplicialComplex& k, const SimplicialComplex& l);
SimplicialComplex suspension(const SimplicialComplex& k);
/// Image of K under an injective vertex relabeling.
SimplicialComplex relabel(const SimplicialComplex& k, const VertexMap& map);

/// All group elements generated by the action, identity first, in a
/// deterministic order. Throws quotient_invalid when the closure exceeds
/// `limit` elements or a generator is not a bijection of the vertex set.
std::vector<VertexMap> group_elements(const SimplicialComplex& k, const GroupAction& action,
                                      std::size_t limit = 100000);

/// Image of a simplex as a vertex set (may collapse). Unmapped vertices are fixed.
std::vector<VertexId> image_vertices(const Simplex& s, const VertexMap& map);

}  // namespace hodgeforge
