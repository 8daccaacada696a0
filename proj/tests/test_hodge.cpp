#include "fixtures.hpp"

#include "hodgeforge/error.hpp"
#include "hodgeforge/hodge.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hodgeforge;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want, double tol) {
    REQUIRE(got.size() == want.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i] == doctest::Approx(want[i]).epsilon(tol).scale(1.0));
}

std::vector<double> nonzero(const std::vector<SpectrumResult>& spectra, int parity) {
    std::vector<double> out;
    for (const auto& s : spectra)
        if (s.degree % 2 == parity)
            for (double x : s.eigenvalues)
                if (x > s.zero_threshold) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("laplacian matches the dense oracle") {
    for (auto& [name, k] : fixtures::closed_manifolds()) {
        CAPTURE(name);
        ChainSystem cs(k);
        for (int d = 0; d <= k.dim(); ++d) {
            const Eigen::MatrixXd got(laplacian(cs, d).matrix);
            CHECK(got == oracle::laplacian(fixtures::facets_of(k), static_cast<std::size_t>(d)));
        }
    }
}

TEST_CASE("spectra match frozen oracle values") {
    SUBCASE("octahedron degree 0") {
        ChainSystem cs(fixtures::octahedron());
        check_close(spectrum(cs, 0).eigenvalues, {0, 4, 4, 4, 6, 6}, 1e-10);
    }
    SUBCASE("tetrahedron degree 0 is the K4 spectrum") {
        ChainSystem cs(simplex_sphere(2));
        check_close(spectrum(cs, 0).eigenvalues, {0, 4, 4, 4}, 1e-10);
    }
    SUBCASE("triangle circle") {
        ChainSystem cs(circle(3));
        check_close(spectrum(cs, 0).eigenvalues, {0, 3, 3}, 1e-10);
        check_close(spectrum(cs, 1).eigenvalues, {0, 3, 3}, 1e-10);
    }
    SUBCASE("torus low end") {
        ChainSystem cs(torus());
        const auto s0 = spectrum(cs, 0).eigenvalues;
        check_close({s0.begin(), s0.begin() + 5}, {0, 3.26794919, 4.58578644, 6, 6.73205081}, 1e-8);
        const auto s1 = spectrum(cs, 1).eigenvalues;
        check_close({s1.begin(), s1.begin() + 5}, {0, 0, 0.84024424, 0.95282887, 1.12061476}, 1e-8);
        const auto s2 = spectrum(cs, 2).eigenvalues;
        check_close({s2.begin(), s2.begin() + 2}, {0, 0.84024424}, 1e-8);
    }
    SUBCASE("projective plane") {
        ChainSystem cs(projective_plane());
        check_close(spectrum(cs, 0).eigenvalues, {0, 6, 6, 6, 6, 6}, 1e-10);
        const double a = 3 - std::sqrt(5.0), b = 3 + std::sqrt(5.0);
        check_close(spectrum(cs, 2).eigenvalues, {a, a, a, 3, 3, 3, 3, b, b, b}, 1e-10);
        CHECK(spectrum(cs, 1).eigenvalues.size() == 15);
    }
}

TEST_CASE("spectra agree with an independent dense eigensolve") {
    for (auto& [name, k] : fixtures::closed_manifolds()) {
        CAPTURE(name);
        ChainSystem cs(k);
        for (int d = 0; d <= k.dim(); ++d) check_close(spectrum(cs, d).eigenvalues, oracle::spectrum(fixtures::facets_of(k), d), 1e-9);
    }
}

TEST_CASE("exact betti numbers") {
    CHECK(betti_exact(ChainSystem(torus())) == BettiVector{1, 2, 1});
    CHECK(betti_exact(ChainSystem(simplex_sphere(2))) == BettiVector{1, 0, 1});
    CHECK(betti_exact(ChainSystem(projective_plane())) == BettiVector{1, 0, 0});
    CHECK(betti_exact(ChainSystem(point_complex())) == BettiVector{1});
    for (int n = 0; n <= 4; ++n) {
        BettiVector want(static_cast<std::size_t>(n + 1), 0);
        want.front() += 1;
        want.back() += 1;
        CHECK(betti_exact(ChainSystem(simplex_sphere(n))) == want);
        if (n >= 1) CHECK(betti_exact(ChainSystem(cross_polytope_sphere(n))) == want);
    }
    for (auto& [name, k] : fixtures::closed_manifolds()) {
        CAPTURE(name);
        CHECK(betti_exact(ChainSystem(k)) == oracle::betti(fixtures::facets_of(k)));
    }
}

TEST_CASE("spectral betti numbers agree with exact ones") {
    CHECK(betti_spectral(ChainSystem(torus()), all_spectra(ChainSystem(torus()))) == BettiVector{1, 2, 1});
    ChainSystem s3(simplex_sphere(3));
    CHECK(betti_spectral(s3, all_spectra(s3)) == BettiVector{1, 0, 0, 1});
    ChainSystem oct(fixtures::octahedron());
    CHECK(betti_spectral(oct, all_spectra(oct)) == BettiVector{1, 0, 1});
    for (auto& [name, k] : fixtures::closed_manifolds()) {
        CAPTURE(name);
        ChainSystem cs(k);
        CHECK(betti_spectral(cs, all_spectra(cs)) == betti_exact(cs));
    }
}

TEST_CASE("a bad threshold is reported with the gap eigenvalue") {
    ChainSystem cs(torus());
    SpectralOptions opts;
    opts.zero_threshold = 0.9;  // swallows 0.840...
    try {
        betti_spectral(cs, all_spectra(cs, opts));
        FAIL("expected threshold failure");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::threshold_failure);
        CHECK(std::string(e.what()).find("0.84") != std::string::npos);
    }
}

TEST_CASE("ground states") {
    CHECK(*ground_state(spectrum(ChainSystem(simplex_sphere(2)), 0)) == doctest::Approx(4));
    CHECK(*ground_state(spectrum(ChainSystem(fixtures::octahedron()), 0)) == doctest::Approx(4));
    CHECK_FALSE(ground_state(spectrum(ChainSystem(point_complex()), 0)).has_value());
}

TEST_CASE("heat supertrace equals the euler characteristic") {
    CHECK(heat_supertrace(all_spectra(ChainSystem(simplex_sphere(2))), 1.0) == doctest::Approx(2).epsilon(1e-10));
    CHECK(std::abs(heat_supertrace(all_spectra(ChainSystem(torus())), 0.5)) < 1e-8);
    CHECK(heat_supertrace(all_spectra(ChainSystem(projective_plane())), 2.0) == doctest::Approx(1).epsilon(1e-10));
    for (auto& [name, k] : fixtures::closed_manifolds()) {
        CAPTURE(name);
        const auto spectra = all_spectra(ChainSystem(k));
        for (double t : {0.1, 1.0, 10.0})
            CHECK(std::abs(heat_supertrace(spectra, t) - static_cast<double>(k.euler_characteristic())) < 1e-8);
    }
    CHECK_THROWS_AS(heat_supertrace(all_spectra(ChainSystem(torus())), 0.0), Error);
}

TEST_CASE("nonzero spectra pair up between even and odd degrees") {
    for (auto& [name, k] : fixtures::closed_manifolds()) {
        CAPTURE(name);
        const auto spectra = all_spectra(ChainSystem(k));
        const auto even = nonzero(spectra, 0), odd = nonzero(spectra, 1);
        REQUIRE(even.size() == odd.size());
        for (std::size_t i = 0; i < even.size(); ++i) CHECK(std::abs(even[i] - odd[i]) < 1e-8);
    }
}

TEST_CASE("poincare duality of spectra on orientable closed manifolds") {
    for (const auto& k : {torus(), fixtures::octahedron(), fixtures::sixteen_cell()}) {
        ChainSystem cs(k);
        const auto b = betti_exact(cs);
        for (std::size_t i = 0; i < b.size(); ++i) CHECK(b[i] == b[b.size() - 1 - i]);
    }
}

TEST_CASE("spectra are invariant under vertex permutation") {
    VertexMap perm;
    std::vector<VertexId> p = {5, 2, 8, 0, 7, 1, 4, 6, 3};
    for (VertexId v = 0; v < 9; ++v) perm[v] = p[v];
    ChainSystem a(torus()), b(relabel(torus(), perm));
    for (int d = 0; d <= 2; ++d) check_close(spectrum(b, d).eigenvalues, spectrum(a, d).eigenvalues, 1e-9);
}

TEST_CASE("log determinants") {
    CHECK(log_det_nonzero(spectrum(ChainSystem(simplex_sphere(2)), 0)) == doctest::Approx(3 * std::log(4.0)));
    CHECK(log_det_nonzero(spectrum(ChainSystem(circle(3)), 0)) == doctest::Approx(2 * std::log(3.0)));
    try {
        log_det_nonzero(spectrum(ChainSystem(point_complex()), 0));
        FAIL("expected error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::undefined_determinant);
    }
}

TEST_CASE("default zero threshold scales with the spectrum") {
    std::vector<double> big = {0, 1e3};
    CHECK(default_zero_threshold(big) == doctest::Approx(1e-6));
    std::vector<double> tiny = {0, 1e-8};
    CHECK(default_zero_threshold(tiny) == doctest::Approx(1e-9));
}

TEST_CASE("implicit matvec") {
    auto tetra = simplex_sphere(2);
    std::vector<double> zero(4, 0.0);
    for (double y : implicit_matvec(tetra, 0, zero)) CHECK(y == 0.0);
    std::vector<double> e1 = {0, 1, 0, 0};
    const auto col = implicit_matvec(tetra, 0, e1);
    CHECK(col == std::vector<double>{-1, 3, -1, -1});
    CHECK_THROWS_AS(implicit_matvec(tetra, 0, std::vector<double>(3)), Error);

    auto sd2 = barycentric_subdivision(barycentric_subdivision(simplex_sphere(2)));
    std::mt19937_64 rng(11);
    std::normal_distribution<double> g;
    for (int d = 0; d <= 2; ++d) {
        const auto l = oracle::laplacian(fixtures::facets_of(sd2), static_cast<std::size_t>(d));
        Eigen::VectorXd x(l.rows());
        for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = g(rng);
        const Eigen::VectorXd want = l * x;
        const auto got = implicit_matvec(sd2, d, std::span<const double>(x.data(), static_cast<std::size_t>(x.size())));
        for (Eigen::Index i = 0; i < x.size(); ++i) CHECK(got[static_cast<std::size_t>(i)] == doctest::Approx(want(i)).epsilon(1e-12));
    }
}

TEST_CASE("lanczos finds the lowest eigenvalues with multiplicity") {
    check_close(lanczos_extremes(ChainSystem(fixtures::octahedron()), 0, 2), {0, 4}, 1e-8);
    check_close(lanczos_extremes(ChainSystem(simplex_sphere(2)), 0, 1), {0}, 1e-8);
    const auto t1 = lanczos_extremes(ChainSystem(torus()), 1, 3);
    REQUIRE(t1.size() == 3);
    CHECK(std::abs(t1[0]) < 1e-8);
    CHECK(std::abs(t1[1]) < 1e-8);
    CHECK(t1[2] == doctest::Approx(0.84024424).epsilon(1e-7));

    ChainSystem rp2(projective_plane());
    const double a = 3 - std::sqrt(5.0);
    check_close(lanczos_extremes(rp2, 2, 4), {a, a, a, 3}, 1e-8);
}

TEST_CASE("lanczos on a twice subdivided tetrahedron matches the dense solve") {
    auto sd2 = barycentric_subdivision(barycentric_subdivision(simplex_sphere(2)));
    ChainSystem cs(sd2);
    for (int d = 0; d <= 2; ++d) {
        const auto dense = oracle::spectrum(fixtures::facets_of(sd2), static_cast<std::size_t>(d));
        const auto got = lanczos_extremes(cs, d, 6);
        REQUIRE(got.size() == 6);
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::abs(got[i] - dense[i]) <= 1e-6 * std::max(dense[i], 1e-3));
    }
    const auto l1 = lanczos_extremes(cs, 1, 3);
    for (double x : l1) CHECK(x == doctest::Approx(0.07511478).epsilon(1e-6));
}

TEST_CASE("lanczos reports non-convergence") {
    LanczosOptions opts;
    opts.max_iterations = 2;
    opts.tolerance = 1e-300;
    try {
        lanczos_extremes(ChainSystem(barycentric_subdivision(torus())), 1, 5, opts);
        FAIL("expected convergence error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::convergence);
        CHECK(std::string(e.what()).find("residual") != std::string::npos);
    }
}

TEST_CASE("partial spectra above the dense cutoff") {
    SpectralOptions opts;
    opts.dense_cutoff = 10;
    opts.count = 4;
    ChainSystem cs(torus());
    const auto s = spectrum(cs, 1, opts);
    CHECK_FALSE(s.complete);
    CHECK(s.eigenvalues.size() == 4);
    CHECK(s.zero_multiplicity == 2);
    CHECK_THROWS_AS(heat_supertrace({spectrum(cs, 0, opts), s, spectrum(cs, 2, opts)}, 1.0), Error);
}

TEST_CASE("spectra do not depend on the thread cap") {
    ChainSystem cs(barycentric_subdivision(torus()));
    setenv("HODGEFORGE_THREADS", "1", 1);
    const auto a = all_spectra(cs);
    setenv("HODGEFORGE_THREADS", "3", 1);
    const auto b = all_spectra(cs);
    unsetenv("HODGEFORGE_THREADS");
    for (std::size_t d = 0; d < a.size(); ++d) CHECK(a[d].eigenvalues == b[d].eigenvalues);
}
