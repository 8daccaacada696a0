#include "fixtures.hpp"

#include "hodgeforge/complex.hpp"
#include "hodgeforge/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>

using namespace hodgeforge;

namespace {

std::vector<std::size_t> fv(std::initializer_list<std::size_t> xs) { return xs; }

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error thrown");
    return ErrorKind::malformed_input;
}

}  // namespace

TEST_CASE("build_from_facets basic shapes") {
    auto tetra = build_from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}});
    CHECK(tetra.f_vector() == fv({4, 6, 4}));
    CHECK(tetra.euler_characteristic() == 2);

    auto pt = build_from_facets({{1}});
    CHECK(pt.f_vector() == fv({1}));
    CHECK(pt.dim() == 0);

    auto s1 = build_from_facets({{1, 2}, {2, 3}, {3, 1}});
    CHECK(s1.f_vector() == fv({3, 3}));
    CHECK(s1.euler_characteristic() == 0);
}

TEST_CASE("build_from_facets rejects malformed facets") {
    CHECK(kind_of([] { build_from_facets({{1, 2, 2}}); }) == ErrorKind::malformed_input);
    CHECK(kind_of([] { build_from_facets({{-1, 2}}); }) == ErrorKind::malformed_input);
}

TEST_CASE("faces are closed and facets are maximal") {
    auto k = build_from_facets({{0, 1, 2}, {1, 2}, {2, 3}, {4}});
    CHECK(k.facets().size() == 3);
    for (int d = 1; d <= k.dim(); ++d)
        for (const auto& s : k.skeleton(d))
            for (std::size_t i = 0; i < s.size(); ++i) CHECK(k.contains(s.face(i)));
    CHECK(std::is_sorted(k.skeleton(1).begin(), k.skeleton(1).end()));
}

TEST_CASE("simplex spheres") {
    CHECK(simplex_sphere(2).f_vector() == fv({4, 6, 4}));
    CHECK(simplex_sphere(0).f_vector() == fv({2}));
    CHECK(simplex_sphere(0).euler_characteristic() == 2);
    auto s3 = simplex_sphere(3);
    CHECK(s3.f_vector() == fv({5, 10, 10, 5}));
    CHECK(s3.euler_characteristic() == 0);
    for (int n = 0; n <= 5; ++n) {
        auto s = simplex_sphere(n);
        for (int k = 0; k <= n; ++k)
            CHECK(s.count(k) == oracle::binomial(static_cast<std::uint64_t>(n + 2), static_cast<std::uint64_t>(k + 1)));
    }
}

TEST_CASE("cross polytope spheres against the binomial formula") {
    CHECK(cross_polytope_sphere(1).f_vector() == fv({4, 4}));
    CHECK(cross_polytope_sphere(2).f_vector() == fv({6, 12, 8}));
    CHECK(cross_polytope_sphere(3).f_vector() == fv({8, 24, 32, 16}));
    CHECK(cross_polytope_sphere(3).euler_characteristic() == 0);
    for (int n = 1; n <= 5; ++n) {
        auto s = cross_polytope_sphere(n);
        const auto enumerated = oracle::f_vector(fixtures::facets_of(s));
        CHECK(s.f_vector() == enumerated);
        for (int k = 0; k <= n; ++k) {
            const std::uint64_t expect =
                oracle::binomial(static_cast<std::uint64_t>(n + 1), static_cast<std::uint64_t>(k + 1)) << (k + 1);
            CHECK(s.count(k) == expect);
        }
    }
}

TEST_CASE("products") {
    auto t2 = product(circle(3), circle(3));
    CHECK(t2.f_vector() == fv({9, 27, 18}));
    CHECK(t2.euler_characteristic() == 0);
    CHECK(oracle::f_vector(fixtures::facets_of(t2)) == t2.f_vector());

    auto k = simplex_sphere(2);
    auto pk = product(point_complex(), k);
    CHECK(pk.f_vector() == k.f_vector());

    auto two = product(circle(3), simplex_sphere(0));
    CHECK(two.f_vector() == fv({6, 6}));
    CHECK(two.euler_characteristic() == 0);
    CHECK(oracle::betti(fixtures::facets_of(two)) == std::vector<std::int64_t>{2, 2});
}

TEST_CASE("euler characteristic is multiplicative under products") {
    const std::vector<SimplicialComplex> parts = {circle(3), circle(4), simplex_sphere(0), simplex_sphere(2),
                                                  point_complex(), cross_polytope_sphere(1), projective_plane()};
    for (const auto& a : parts)
        for (const auto& b : parts) {
            if (a.dim() + b.dim() > 3) continue;
            auto p = product(a, b);
            CHECK(p.euler_characteristic() == a.euler_characteristic() * b.euler_characteristic());
            CHECK(p.dim() == a.dim() + b.dim());
        }
}

TEST_CASE("icosahedron and its antipodal quotient") {
    auto ico = icosahedron_sphere();
    CHECK(ico.f_vector() == fv({12, 30, 20}));
    CHECK(ico.is_pseudomanifold());
    const auto anti = icosahedron_antipodal_map();
    for (const auto& [v, w] : anti) CHECK(w == (v + 6) % 12);
    auto rp2 = projective_plane();
    CHECK(rp2.f_vector() == fv({6, 15, 10}));
    CHECK(rp2.euler_characteristic() == 1);
    CHECK(rp2.is_pseudomanifold());
}

TEST_CASE("quotient by the trivial action returns the complex") {
    for (auto& [name, k] : fixtures::closed_manifolds()) {
        CAPTURE(name);
        auto q = quotient(k, GroupAction{});
        CHECK(q.f_vector() == k.f_vector());
        CHECK(q.facets() == k.facets());
    }
}

TEST_CASE("quotient counts: f_k(K) = |G| f_k(K/G) for free actions") {
    GroupAction a{{icosahedron_antipodal_map()}};
    auto ico = icosahedron_sphere();
    auto q = quotient(ico, a);
    for (int k = 0; k <= 2; ++k) CHECK(ico.count(k) == 2 * q.count(k));

    // Octahedron antipode: free, but 6 edge orbits on 3 vertex classes
    // cannot all be distinct edges.
    VertexMap oct;
    for (int axis = 0; axis < 3; ++axis) {
        oct[2 * axis] = 2 * axis + 1;
        oct[2 * axis + 1] = 2 * axis;
    }
    CHECK(kind_of([&] { quotient(cross_polytope_sphere(2), GroupAction{{oct}}); }) == ErrorKind::quotient_invalid);

    // Z3 rotation of a 9-gon is a valid free quotient: a triangle.
    VertexMap rot;
    for (int v = 0; v < 9; ++v) rot[v] = (v + 3) % 9;
    auto q9 = quotient(circle(9), GroupAction{{rot}});
    CHECK(q9.f_vector() == fv({3, 3}));
}

TEST_CASE("every involution of the tetrahedron boundary gives an invalid quotient") {
    // Enumerate all permutations of {0,1,2,3} of order 2. All are
    // automorphisms of the boundary of the 3-simplex; none acts freely
    // while keeping vertex orbits apart inside simplices.
    auto k = simplex_sphere(2);
    std::vector<VertexId> p = {0, 1, 2, 3};
    int involutions = 0;
    do {
        bool identity = true;
        bool order_two = true;
        for (int i = 0; i < 4; ++i) {
            if (p[i] != i) identity = false;
            if (p[p[i]] != i) order_two = false;
        }
        if (identity || !order_two) continue;
        ++involutions;
        VertexMap m;
        for (int i = 0; i < 4; ++i) m[i] = p[i];
        CHECK(kind_of([&] { quotient(k, GroupAction{{m}}); }) == ErrorKind::quotient_invalid);
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(involutions == 9);
}

TEST_CASE("group closure rejects non-bijections") {
    VertexMap bad = {{0, 1}, {1, 1}, {2, 2}, {3, 3}};
    CHECK(kind_of([&] { group_elements(simplex_sphere(2), GroupAction{{bad}}); }) == ErrorKind::quotient_invalid);
}

TEST_CASE("barycentric subdivision counts") {
    auto tri = barycentric_subdivision(build_from_facets({{1, 2, 3}}));
    CHECK(tri.f_vector() == fv({7, 12, 6}));
    auto sd = barycentric_subdivision(simplex_sphere(2));
    CHECK(sd.f_vector() == fv({14, 36, 24}));
    CHECK(sd.euler_characteristic() == 2);
    auto sd2 = barycentric_subdivision(sd);
    CHECK(sd2.f_vector() == fv({74, 216, 144}));
    CHECK(barycentric_subdivision(point_complex()).f_vector() == fv({1}));
}

TEST_CASE("subdivision preserves euler characteristic and betti numbers") {
    for (auto& [name, k] : fixtures::closed_manifolds()) {
        if (k.count(static_cast<int>(k.dim())) > 40) continue;
        CAPTURE(name);
        auto sd = barycentric_subdivision(k);
        CHECK(sd.euler_characteristic() == k.euler_characteristic());
        CHECK(sd.dim() == k.dim());
        CHECK(sd.count(sd.dim()) == k.count(k.dim()) * static_cast<std::size_t>(std::tgamma(k.dim() + 2) + 0.5));
    }
    auto sd = barycentric_subdivision(projective_plane());
    CHECK(oracle::betti(fixtures::facets_of(sd)) == std::vector<std::int64_t>{1, 0, 0});
}

TEST_CASE("join and suspension") {
    auto s1 = suspension(simplex_sphere(0));
    CHECK(s1.f_vector() == fv({4, 4}));
    auto s2 = suspension(s1);
    CHECK(s2.f_vector() == fv({6, 12, 8}));
    auto j = join(circle(3), circle(3));
    CHECK(j.dim() == 3);
    CHECK(j.euler_characteristic() == 0);  // S^3
    CHECK(j.is_pseudomanifold());
}

TEST_CASE("pseudomanifold detection") {
    CHECK(simplex_sphere(2).is_pseudomanifold());
    CHECK(torus().is_pseudomanifold());
    CHECK_FALSE(build_from_facets({{0, 1, 2}}).is_pseudomanifold());
    CHECK_FALSE(build_from_facets({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}).is_pseudomanifold());
    // two disjoint spheres: ridge condition holds but adjacency is disconnected
    auto two = product(simplex_sphere(2), simplex_sphere(0));
    CHECK_FALSE(two.is_pseudomanifold());
}

TEST_CASE("relabel is an isomorphism") {
    VertexMap shift;
    for (VertexId v = 0; v < 9; ++v) shift[v] = 100 + 8 - v;
    auto t = torus();
    auto r = relabel(t, shift);
    CHECK(r.f_vector() == t.f_vector());
    CHECK(oracle::betti(fixtures::facets_of(r)) == std::vector<std::int64_t>{1, 2, 1});
}

TEST_CASE("simplex ordering and index lookup") {
    auto t = torus();
    for (int d = 0; d <= 2; ++d) {
        const auto& sk = t.skeleton(d);
        for (std::size_t i = 0; i < sk.size(); ++i) CHECK(*t.index_of(sk[i]) == i);
    }
    CHECK_FALSE(t.index_of(Simplex({0, 50})).has_value());
    CHECK(to_string(Simplex({3, 1, 2})) == "{1,2,3}");
}
