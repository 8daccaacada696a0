#include "selftest.hpp"

#include "hodgeforge/catalog.hpp"
#include "hodgeforge/chain.hpp"
#include "hodgeforge/cohomology.hpp"
#include "hodgeforge/error.hpp"
#include "hodgeforge/hodge.hpp"
#include "hodgeforge/lefschetz.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

namespace hodgeforge::cli {

namespace {

std::string fmt(const char* spec, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, x);
    return buf;
}

std::string join(const std::vector<std::int64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

class Recorder {
public:
    explicit Recorder(CriterionResult& r) : r_(r) {}
    void check(bool ok, const std::string& what) {
        r_.details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        if (!ok) r_.passed = false;
    }
    /// Runs fn; an exception counts as a failed check labelled `what`.
    void guard(const std::string& what, const std::function<void()>& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            check(false, what + ": " + e.what());
        }
    }

private:
    CriterionResult& r_;
};

struct Context {
    std::vector<std::vector<VertexId>> icosahedron;

    SimplicialComplex rp2() const {
        return quotient(build_from_facets(icosahedron, "icosahedron"), GroupAction{{icosahedron_antipodal_map()}})
            .renamed("RP2");
    }
};

void betti_criterion(const Context& ctx, Recorder& rec) {
    auto expect = [&](const std::string& name, const std::function<SimplicialComplex()>& make, BettiVector want) {
        rec.guard(name, [&] {
            ChainSystem cs(make());
            const auto exact = betti_exact(cs);
            const auto spectral = betti_spectral(cs, all_spectra(cs));
            rec.check(exact == want && spectral == want,
                      name + " exact " + join(exact) + " spectral " + join(spectral) + " want " + join(want));
        });
    };
    expect("T2", torus, {1, 2, 1});
    for (int n = 0; n <= 4; ++n) {
        BettiVector want(static_cast<std::size_t>(n + 1), 0);
        want.front() += 1;
        want.back() += 1;
        expect("S" + std::to_string(n), [n] { return simplex_sphere(n); }, want);
    }
    expect("RP2", [&] { return ctx.rp2(); }, {1, 0, 0});
}

std::vector<std::pair<std::string, std::function<SimplicialComplex()>>> mckean_fixtures(const Context& ctx) {
    return {
        {"S1", [] { return circle(5); }},
        {"S2-octahedron", [] { return cross_polytope_sphere(2); }},
        {"S3-16cell", [] { return cross_polytope_sphere(3); }},
        {"T2", torus},
        {"RP2", [&ctx] { return ctx.rp2(); }},
        {"sd-S2", [] { return barycentric_subdivision(simplex_sphere(2)); }},
        {"S4", [] { return simplex_sphere(4); }},
    };
}

void mckean_criterion(const Context& ctx, Recorder& rec) {
    for (const auto& [name, make] : mckean_fixtures(ctx)) {
        rec.guard(name, [&] {
            const SimplicialComplex k = make();
            ChainSystem cs(k);
            const auto spectra = all_spectra(cs);
            const double chi = static_cast<double>(k.euler_characteristic());
            double worst = 0;
            for (double t : {0.1, 1.0, 10.0}) worst = std::max(worst, std::abs(heat_supertrace(spectra, t) - chi));
            rec.check(worst < 1e-8, name + " supertrace = chi within 1e-8 at t in {0.1,1,10}");

            std::vector<double> even, odd;
            for (const auto& s : spectra)
                for (double x : s.eigenvalues)
                    if (x > s.zero_threshold) (s.degree % 2 == 0 ? even : odd).push_back(x);
            std::sort(even.begin(), even.end());
            std::sort(odd.begin(), odd.end());
            bool paired = even.size() == odd.size();
            for (std::size_t i = 0; paired && i < even.size(); ++i) paired = std::abs(even[i] - odd[i]) < 1e-8;
            rec.check(paired, name + " nonzero even spectrum equals odd spectrum (" + std::to_string(even.size()) +
                                  " eigenvalues)");
        });
    }
}

void lefschetz_criterion(const Context& ctx, Recorder& rec) {
    struct Case {
        std::string name;
        std::function<SimplicialComplex()> make;
        std::function<SimplicialSelfMap(const SimplicialComplex&)> map;
        std::int64_t want;
        std::optional<std::int64_t> fixed_chi;
    };
    const std::vector<Case> cases = {
        {"identity T2", torus, identity_map, 0, 0},
        {"identity S3-16cell", [] { return cross_polytope_sphere(3); }, identity_map, 0, 0},
        {"identity RP2", [&ctx] { return ctx.rp2(); }, identity_map, 1, 1},
        {"identity S2-octahedron", [] { return cross_polytope_sphere(2); }, identity_map, 2, 2},
        {"axis reflection S3-16cell", [] { return cross_polytope_sphere(3); },
         [](const SimplicialComplex&) { return axis_reflection(0, 4); }, 2, 2},
        {"antipodal S3-16cell", [] { return cross_polytope_sphere(3); },
         [](const SimplicialComplex&) { return cross_polytope_antipodal(4); }, 0, 0},
        {"axis reflection S2-octahedron", [] { return cross_polytope_sphere(2); },
         [](const SimplicialComplex&) { return axis_reflection(0, 3); }, 0, std::nullopt},
        {"rotation S1-hexagon", [] { return circle(6); },
         [](const SimplicialComplex&) { return circle_rotation(6, 1); }, 0, 0},
    };
    for (const auto& c : cases) {
        rec.guard(c.name, [&] {
            const SimplicialComplex k = c.make();
            ChainSystem cs(k);
            const auto report = lefschetz_report(cs, c.map(k));
            const bool traces = Rational(report.chain_supertrace) == report.homology_supertrace;
            rec.check(traces && report.chain_supertrace == c.want,
                      c.name + " chain " + std::to_string(report.chain_supertrace) + " homology " +
                          report.homology_supertrace.str() + " want " + std::to_string(c.want));
            if (c.fixed_chi)
                rec.check(report.chi_fixed == *c.fixed_chi,
                          c.name + " fixed subcomplex chi " + std::to_string(report.chi_fixed) + " f=" +
                              join(report.fixed.f_vector()));
        });
    }
}

void cup_criterion(const Context&, Recorder& rec) {
    rec.guard("T2 pairing", [&] {
        ChainSystem cs(torus());
        const auto fc = fundamental_class(cs.complex());
        const auto p = intersection_matrix(cs, 1, fc);
        const bool antisym = p.rows() == 2 && p(0, 0) == 0 && p(1, 1) == 0 && p(0, 1) == -p(1, 0);
        const Rational det = determinant(p);
        rec.check(antisym && abs(det) == 1, "T2 H1 pairing antisymmetric, det " + det.str());

        const auto basis = cocycle_basis(cs, 1);
        const auto& u = basis.representatives[0];
        const auto& v = basis.representatives[1];
        const Rational base = pair_with_fundamental(cs, cup(cs, u, v), fc);
        std::mt19937_64 rng(20);
        std::uniform_int_distribution<int> dist(-5, 5);
        bool stable = true;
        for (int i = 0; i < 20; ++i) {
            std::vector<std::int64_t> f(cs.complex().count(0)), g(cs.complex().count(0));
            for (auto& x : f) x = dist(rng);
            for (auto& x : g) x = dist(rng);
            const auto u2 = add(u, coboundary(cs, cochain_from(0, f)));
            const auto v2 = add(v, coboundary(cs, cochain_from(0, g)));
            stable = stable && pair_with_fundamental(cs, cup(cs, u2, v2), fc) == base;
        }
        rec.check(stable, "T2 pairing unchanged by 20 random coboundaries (value " + base.str() + ")");
    });
}

void rules_criterion(const Context&, Recorder& rec) {
    const auto cat = builtin_catalog();
    const std::vector<std::string> expected = {"",           "frankel", "", "", "", "euler-lefschetz",
                                               "grove-searle", "",      "frobenius-hurwitz-moufang"};
    const auto named = named_extensions(cat);
    for (std::size_t i = 0; i < named.size(); ++i) {
        const std::string got = check_extension(named[i]).first_failure();
        const std::string want = i < expected.size() ? expected[i] : "?";
        rec.check(got == want, named[i].label() + " -> " + (got.empty() ? "pass" : "fails " + got));
    }
    for (const std::string name : {"W6", "E6", "W12", "W24", "OP2", "CP1", "CP6", "CP12"}) {
        rec.guard(name, [&] {
            const auto v = check_entry_consistency(find_entry(cat, name));
            rec.check(v.status == VerdictStatus::pass, name + " alternating Betti sum equals chi");
        });
    }
}

void scaling_criterion(const Context&, Recorder& rec) {
    rec.guard("sd2 S2", [&] {
        const SimplicialComplex k = barycentric_subdivision(barycentric_subdivision(simplex_sphere(2)));
        ChainSystem cs(k);
        for (int d = 0; d <= 2; ++d) {
            const auto dense = spectrum(cs, d).eigenvalues;
            const auto lz = lanczos_extremes(cs, d, 6);
            double worst = 0;
            for (std::size_t i = 0; i < lz.size(); ++i)
                worst = std::max(worst, std::abs(lz[i] - dense[i]) / std::max(dense[i], 1e-3));
            rec.check(lz.size() == 6 && worst <= 1e-6,
                      "degree " + std::to_string(d) + " lowest 6 Lanczos eigenvalues match dense within 1e-6");
        }
    });
    rec.guard("storage", [&] {
        const SimplicialComplex k = barycentric_subdivision(barycentric_subdivision(simplex_sphere(3)));
        ChainSystem cs(k);
        for (int d = 1; d <= k.dim(); ++d) {
            const auto est = estimate_storage(k.f_vector(), d);
            rec.check(est.nnz == cs.boundary(d).nnz(),
                      "sd2 S3 degree " + std::to_string(d) + " estimated nnz " + std::to_string(est.nnz) +
                          " equals assembled " + std::to_string(cs.boundary(d).nnz()));
        }
    });
}

void quotient_criterion(const Context& ctx, Recorder& rec) {
    rec.guard("icosahedron quotient", [&] {
        const SimplicialComplex ico = build_from_facets(ctx.icosahedron, "icosahedron");
        rec.check(ico.f_vector() == std::vector<std::size_t>{12, 30, 20} && ico.is_pseudomanifold(),
                  "icosahedron f=" + join(ico.f_vector()));
        const SimplicialComplex q = ctx.rp2();
        rec.check(q.f_vector() == std::vector<std::size_t>{6, 15, 10} && q.euler_characteristic() == 1,
                  "antipodal quotient f=" + join(q.f_vector()) + " chi=" + std::to_string(q.euler_characteristic()));
        rec.check(!orient(q).orientable(), "quotient is non-orientable");
    });
}

std::string spectral_digest(const Context& ctx) {
    std::ostringstream os;
    for (const auto& [name, make] : mckean_fixtures(ctx)) {
        ChainSystem cs(make());
        os << name << join(betti_exact(cs));
        for (const auto& s : all_spectra(cs))
            for (double x : s.eigenvalues) os << ' ' << fmt("%.17g", x);
        os << '\n';
    }
    return os.str();
}

void determinism_criterion(const Context& ctx, Recorder& rec) {
    rec.guard("thread caps", [&] {
        const char* old = std::getenv("HODGEFORGE_THREADS");
        const std::optional<std::string> saved = old ? std::optional<std::string>(old) : std::nullopt;
        setenv("HODGEFORGE_THREADS", "1", 1);
        const std::string one = spectral_digest(ctx);
        setenv("HODGEFORGE_THREADS", "4", 1);
        const std::string four = spectral_digest(ctx);
        if (saved) setenv("HODGEFORGE_THREADS", saved->c_str(), 1);
        else unsetenv("HODGEFORGE_THREADS");
        rec.check(one == four, "spectra and Betti numbers identical with 1 and 4 threads");
        auto catalog = builtin_catalog();
        auto labels = [](const std::vector<CatalogEntry>& cat) {
            std::string s;
            for (const auto& e : enumerate_extensions(cat)) s += e.record.label() + e.report.first_failure() + ';';
            return s;
        };
        const std::string forward = labels(catalog);
        std::reverse(catalog.begin(), catalog.end());
        rec.check(forward == labels(catalog), "enumeration identical for reversed catalog order");
    });
}

struct Criterion {
    std::string id;
    void (*run)(const Context&, Recorder&);
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> all = {
        {"betti-fixtures", betti_criterion},   {"mckean-singer", mckean_criterion},
        {"lefschetz", lefschetz_criterion},    {"cup-pairing", cup_criterion},
        {"rule-engine", rules_criterion},      {"scaling", scaling_criterion},
        {"quotient", quotient_criterion},      {"determinism", determinism_criterion},
    };
    return all;
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

std::vector<std::string> selftest_ids() {
    std::vector<std::string> ids;
    for (const auto& c : criteria()) ids.push_back(c.id);
    return ids;
}

std::vector<CriterionResult> run_selftest(const SelftestOptions& options) {
    Context ctx{options.icosahedron ? *options.icosahedron : icosahedron_facets()};
    const std::string filter = lower(options.filter);
    std::vector<CriterionResult> out;
    for (const auto& c : criteria()) {
        if (!filter.empty() && c.id.find(filter) == std::string::npos) continue;
        CriterionResult r{c.id, true, {}};
        Recorder rec(r);
        rec.guard(c.id, [&] { c.run(ctx, rec); });
        out.push_back(std::move(r));
    }
    if (out.empty()) throw Error(ErrorKind::malformed_input, "selftest filter '" + options.filter + "' matches nothing");
    return out;
}

bool write_selftest_report(std::ostream& out, const std::vector<CriterionResult>& results) {
    std::size_t passed = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.id << '\n';
        for (const auto& d : r.details) out << "  " << d << '\n';
        if (r.passed) ++passed;
    }
    out << passed << '/' << results.size() << " criteria passed\n";
    return passed == results.size();
}

}  // namespace hodgeforge::cli
