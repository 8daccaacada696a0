#include "hodgeforge/lefschetz.hpp"

#include "hodgeforge/error.hpp"

#include <algorithm>

namespace hodgeforge {

SimplicialSelfMap identity_map(const SimplicialComplex& k) {
    SimplicialSelfMap t;
    for (VertexId v : k.vertices()) t.vertex_map[v] = v;
    return t;
}

SimplicialSelfMap axis_reflection(int axis, int axes) {
    SimplicialSelfMap t;
    for (int a = 0; a < axes; ++a) {
        t.vertex_map[2 * a] = (a == axis) ? 2 * a + 1 : 2 * a;
        t.vertex_map[2 * a + 1] = (a == axis) ? 2 * a : 2 * a + 1;
    }
    return t;
}

SimplicialSelfMap cross_polytope_antipodal(int axes) {
    SimplicialSelfMap t;
    for (int a = 0; a < axes; ++a) {
        t.vertex_map[2 * a] = 2 * a + 1;
        t.vertex_map[2 * a + 1] = 2 * a;
    }
    return t;
}

SimplicialSelfMap circle_rotation(int n, int step) {
    SimplicialSelfMap t;
    for (int v = 0; v < n; ++v) t.vertex_map[v] = ((v + step) % n + n) % n;
    return t;
}

void validate_map(const SimplicialComplex& k, const SimplicialSelfMap& t) {
    for (VertexId v : k.vertices()) {
        auto it = t.vertex_map.find(v);
        if (it == t.vertex_map.end())
            throw Error(ErrorKind::map_invalid, "map does not assign vertex " + std::to_string(v));
        if (!k.contains(Simplex({it->second})))
            throw Error(ErrorKind::map_invalid, "vertex " + std::to_string(v) + " maps to " +
                                                    std::to_string(it->second) + ", not a vertex of the complex");
    }
    for (const Simplex& f : k.facets()) {
        Simplex img;
        img.vertices = image_vertices(f, t.vertex_map);
        if (!k.contains(img))
            throw Error(ErrorKind::map_invalid, "image of simplex " + to_string(f) + " is " + to_string(img) +
                                                    ", not a simplex of the complex");
    }
}

std::optional<ChainImage> chain_image(const Simplex& s, const SimplicialSelfMap& t) {
    std::vector<VertexId> img;
    img.reserve(s.size());
    for (VertexId v : s.vertices) img.push_back(t.vertex_map.at(v));
    // Sign of the permutation that sorts the image, by counting inversions.
    int sign = 1;
    for (std::size_t i = 0; i < img.size(); ++i)
        for (std::size_t j = i + 1; j < img.size(); ++j) {
            if (img[i] == img[j]) return std::nullopt;
            if (img[i] > img[j]) sign = -sign;
        }
    std::sort(img.begin(), img.end());
    ChainImage out;
    out.simplex.vertices = std::move(img);
    out.sign = sign;
    return out;
}

std::int64_t lefschetz_chain(const SimplicialComplex& k, const SimplicialSelfMap& t) {
    validate_map(k, t);
    std::int64_t total = 0;
    for (int d = 0; d <= k.dim(); ++d) {
        std::int64_t trace = 0;
        for (const Simplex& s : k.skeleton(d)) {
            const auto img = chain_image(s, t);
            if (img && img->simplex == s) trace += img->sign;
        }
        total += (d % 2 == 0) ? trace : -trace;
    }
    return total;
}

Cochain pullback(const ChainSystem& cs, const SimplicialSelfMap& t, const Cochain& u) {
    const SimplicialComplex& k = cs.complex();
    Cochain out = zero_cochain(cs, u.degree);
    const auto& cells = k.skeleton(u.degree);
    for (std::size_t j = 0; j < cells.size(); ++j) {
        const auto img = chain_image(cells[j], t);
        if (!img) continue;
        const Rational& value = u.coefficients[*k.index_of(img->simplex)];
        if (value != 0) out.coefficients[j] = img->sign * value;
    }
    return out;
}

RationalMatrix induced_cohomology_map(const ChainSystem& cs, const SimplicialSelfMap& t, int k) {
    validate_map(cs.complex(), t);
    const CohomologyBasis basis = cocycle_basis(cs, k);
    RationalMatrix m(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const auto coords = cohomology_coordinates(cs, basis, pullback(cs, t, basis.representatives[i]));
        for (std::size_t j = 0; j < coords.size(); ++j) m(j, i) = coords[j];
    }
    return m;
}

Rational lefschetz_homology(const ChainSystem& cs, const SimplicialSelfMap& t) {
    Rational total = 0;
    for (int k = 0; k <= cs.dim(); ++k) {
        const RationalMatrix m = induced_cohomology_map(cs, t, k);
        Rational trace = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) trace += m(i, i);
        total += (k % 2 == 0) ? trace : Rational(-trace);
    }
    return total;
}

SimplicialComplex fixed_subcomplex(const SimplicialComplex& k, const SimplicialSelfMap& t) {
    validate_map(k, t);
    std::vector<Simplex> fixed;
    for (int d = 0; d <= k.dim(); ++d)
        for (const Simplex& s : k.skeleton(d))
            if (std::all_of(s.vertices.begin(), s.vertices.end(),
                            [&](VertexId v) { return t.vertex_map.at(v) == v; }))
                fixed.push_back(s);
    return SimplicialComplex::from_simplices(fixed, "fix(" + k.name() + ")");
}

LefschetzReport lefschetz_report(const ChainSystem& cs, const SimplicialSelfMap& t) {
    const SimplicialComplex& k = cs.complex();
    LefschetzReport r;
    r.chain_supertrace = lefschetz_chain(k, t);
    r.homology_supertrace = lefschetz_homology(cs, t);
    r.fixed = fixed_subcomplex(k, t);
    r.chi_fixed = r.fixed.euler_characteristic();
    for (int d = 1; d <= k.dim(); ++d)
        for (const Simplex& s : k.skeleton(d)) {
            const auto img = chain_image(s, t);
            if (img && img->simplex == s && !r.fixed.contains(s)) r.setwise_only.push_back(s);
        }
    return r;
}

}  // namespace hodgeforge
