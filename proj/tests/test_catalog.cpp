#include "hodgeforge/catalog.hpp"
#include "hodgeforge/error.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace hodgeforge;

namespace {

using Betti = std::vector<std::int64_t>;

ExtensionRecord record(const std::vector<CatalogEntry>& cat, std::vector<std::string> parts, ExtensionGroup g,
                       const std::string& target) {
    ExtensionRecord r;
    for (const auto& p : parts) r.components.push_back(find_entry(cat, p));
    r.group = g;
    r.target = find_entry(cat, target);
    return r;
}

Betti ones_at(int dim, std::initializer_list<std::pair<int, std::int64_t>> xs) {
    Betti b(static_cast<std::size_t>(dim + 1), 0);
    for (auto [k, v] : xs) b[static_cast<std::size_t>(k)] = v;
    return b;
}

}  // namespace

TEST_CASE("catalog entries as quoted") {
    const auto cat = builtin_catalog();
    const auto& w12 = find_entry(cat, "W12");
    CHECK(w12.dim == 12);
    CHECK(w12.euler == 6);
    CHECK(*w12.betti == Betti{1, 0, 0, 0, 2, 0, 0, 0, 2, 0, 0, 0, 1});
    REQUIRE(w12.boson);
    CHECK(w12.boson->name == "Z-boson");
    CHECK(*w12.boson->mass_gev == doctest::Approx(91.19));

    const auto& op2 = find_entry(cat, "OP2");
    CHECK(op2.dim == 16);
    CHECK(op2.euler == 3);
    CHECK(*op2.betti == ones_at(16, {{0, 1}, {8, 1}, {16, 1}}));
    CHECK(op2.boson->name == "graviton");

    const auto& w6 = find_entry(cat, "W6");
    CHECK(*w6.betti == Betti{1, 0, 2, 0, 2, 0, 1});
    CHECK(*find_entry(cat, "E6").betti == *w6.betti);
    CHECK(w6.boson->mass_gev == 80.39);
    CHECK(find_entry(cat, "E6").boson->mass_gev == 80.39);
    CHECK(find_entry(cat, "W24").boson->mass_gev == 125.35);

    const auto& su3 = find_entry(cat, "SU3");
    CHECK(su3.auxiliary());
    CHECK(su3.euler == 0);
    CHECK(*su3.betti == Betti{1, 0, 0, 1, 0, 1, 0, 0, 1});

    for (int d = 1; d <= 12; ++d) {
        const auto& cp = find_entry(cat, "CP" + std::to_string(d));
        CHECK(cp.dim == 2 * d);
        CHECK(cp.euler == d + 1);
        for (int k = 0; k <= 2 * d; ++k) CHECK((*cp.betti)[static_cast<std::size_t>(k)] == (k % 2 == 0 ? 1 : 0));
        CHECK(cp.boson->name == "photon");
        CHECK(find_entry(cat, "HP" + std::to_string(d)).boson->name == "gluon");
        const auto& rp = find_entry(cat, "RP" + std::to_string(2 * d));
        CHECK(rp.euler == 1);
        CHECK((*rp.betti)[0] == 1);
        CHECK(std::count(rp.betti->begin(), rp.betti->end(), 0) == 2 * d);
    }
    CHECK_FALSE(find_entry(cat, "B7").betti.has_value());
    CHECK_THROWS_AS(find_entry(cat, "nope"), Error);
}

TEST_CASE("stored W24 Betti vector is the corrected one") {
    // The quoted vector has 24 entries and alternating sum 4. The stored one
    // has 25 entries, is palindromic and sums to the Euler characteristic 6.
    const Betti quoted = {1, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 1};
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < quoted.size(); ++k) alt += (k % 2 ? -1 : 1) * quoted[k];
    CHECK(quoted.size() == 24);
    CHECK(alt == 4);

    const auto cat = builtin_catalog();
    const auto& w24 = find_entry(cat, "W24");
    CHECK(w24.betti->size() == 25);
    CHECK(*w24.betti == ones_at(24, {{0, 1}, {8, 2}, {16, 2}, {24, 1}}));
    CHECK(std::equal(w24.betti->begin(), w24.betti->end(), w24.betti->rbegin()));
    CHECK(check_entry_consistency(w24).status == VerdictStatus::pass);
}

TEST_CASE("every entry with known Betti numbers is consistent") {
    for (const auto& e : builtin_catalog()) {
        CAPTURE(e.name);
        const auto v = check_entry_consistency(e);
        if (e.betti) CHECK(v.status == VerdictStatus::pass);
        else CHECK(v.status == VerdictStatus::not_applicable);
    }
    CatalogEntry broken = find_entry(builtin_catalog(), "W6");
    broken.euler = 4;
    CHECK(check_entry_consistency(broken).status == VerdictStatus::fail);
}

TEST_CASE("frankel") {
    const auto cat = builtin_catalog();
    CHECK(check_frankel(record(cat, {"CP2", "CP2"}, ExtensionGroup::U1, "W6")).status == VerdictStatus::fail);
    CHECK(check_frankel(record(cat, {"S2", "S2"}, ExtensionGroup::U1, "W6")).status == VerdictStatus::pass);
    CHECK(check_frankel(record(cat, {"CP2"}, ExtensionGroup::U1, "W6")).status == VerdictStatus::pass);
}

TEST_CASE("euler-lefschetz") {
    const auto cat = builtin_catalog();
    CHECK(check_euler_lefschetz(record(cat, {"S2", "S2", "S0"}, ExtensionGroup::SU2, "W6")).status == VerdictStatus::pass);
    CHECK(check_euler_lefschetz(record(cat, {"S2", "RP0"}, ExtensionGroup::U1, "CP2")).status == VerdictStatus::pass);
    CHECK(check_euler_lefschetz(record(cat, {"S2"}, ExtensionGroup::U1, "CP2")).status == VerdictStatus::fail);
}

TEST_CASE("grove-searle") {
    const auto cat = builtin_catalog();
    CatalogEntry x8{"X8", 8, 6, std::nullopt, Family::hypothetical, DivisionAlgebra::none,
                    FundamentalGroup::trivial, true, "", std::nullopt};
    ExtensionRecord w6_in_x8{{find_entry(cat, "W6")}, ExtensionGroup::U1, x8};
    CHECK(check_grove_searle(w6_in_x8).status == VerdictStatus::fail);
    CHECK(check_grove_searle(record(cat, {"S2"}, ExtensionGroup::U1, "CP2")).status == VerdictStatus::pass);
    CHECK(check_grove_searle(record(cat, {"W6"}, ExtensionGroup::U1, "W12")).status == VerdictStatus::not_applicable);
    // any codimension-2 component outside spheres and projective spaces fails
    for (const auto& e : cat) {
        if (e.dim < 2 || e.dim % 2 || !e.betti) continue;
        CatalogEntry target = x8;
        target.dim = e.dim + 2;
        ExtensionRecord r{{e}, ExtensionGroup::U1, target};
        const bool projective = e.family == Family::sphere || e.family == Family::real_projective ||
                                e.family == Family::complex_projective ||
                                e.family == Family::quaternionic_projective ||
                                e.family == Family::octonionic_projective;
        CAPTURE(e.name);
        CHECK((check_grove_searle(r).status == VerdictStatus::pass) == projective);
    }
}

TEST_CASE("group rule") {
    const auto cat = builtin_catalog();
    CHECK(check_group(record(cat, {"S2"}, ExtensionGroup::U1, "CP2")).status == VerdictStatus::pass);
    CHECK(check_group(record(cat, {"OP1", "RP0"}, ExtensionGroup::S7, "OP2")).status == VerdictStatus::pass);
    CHECK(check_group(record(cat, {"OP2", "S2", "RP0"}, ExtensionGroup::S7, "W24")).status == VerdictStatus::fail);
    CHECK(check_group(record(cat, {"S2"}, ExtensionGroup::other, "CP2")).status == VerdictStatus::fail);
}

TEST_CASE("synge") {
    const auto cat = builtin_catalog();
    CHECK(check_synge(find_entry(cat, "RP4")).status == VerdictStatus::pass);
    CHECK(check_synge(find_entry(cat, "CP3")).status == VerdictStatus::pass);
    CatalogEntry z3 = find_entry(cat, "CP3");
    z3.name = "CP3/Z3";
    z3.pi1 = FundamentalGroup::other;
    CHECK(check_synge(z3).status == VerdictStatus::fail);
    CHECK(check_synge(find_entry(cat, "B7")).status == VerdictStatus::not_applicable);
}

TEST_CASE("named extension records") {
    const auto cat = builtin_catalog();
    const auto named = named_extensions(cat);
    REQUIRE(named.size() == 9);
    const std::vector<std::string> expected_failure = {"",      "frankel",         "",
                                                       "",      "",                "euler-lefschetz",
                                                       "grove-searle", "",         "frobenius-hurwitz-moufang"};
    for (std::size_t i = 0; i < named.size(); ++i) {
        CAPTURE(named[i].label());
        CHECK(check_extension(named[i]).first_failure() == expected_failure[i]);
    }
    CHECK(named[0].label() == "(S2+S2+S0, SU2, W6)");
}

TEST_CASE("enumeration contains the worked examples") {
    const auto cat = builtin_catalog();
    const auto out = enumerate_extensions(cat);
    auto find = [&](const std::string& label) -> const EnumeratedExtension* {
        for (const auto& e : out)
            if (e.record.label() == label) return &e;
        return nullptr;
    };
    const auto* a = find("(S2+S2+S0, SU2, W6)");
    REQUIRE(a);
    CHECK(a->report.overall());
    CHECK(a->named_case);
    const auto* b = find("(CP2+CP2, U1, W6)");
    REQUIRE(b);
    CHECK(b->report.first_failure() == "frankel");
    const auto* c = find("(W6, U1, W12)");
    REQUIRE(c);
    CHECK(c->report.overall());
    for (const auto& e : out)
        if (!e.named_case) CHECK(e.report.overall());
    // no auxiliary entries anywhere
    for (const auto& e : out) {
        CHECK_FALSE(e.record.target.name == "SU3");
        for (const auto& comp : e.record.components) CHECK_FALSE(comp.auxiliary());
    }
}

TEST_CASE("enumeration does not depend on catalog order") {
    auto cat = builtin_catalog();
    const auto reference = enumerate_extensions(cat);
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 3; ++trial) {
        std::shuffle(cat.begin(), cat.end(), rng);
        const auto again = enumerate_extensions(cat);
        REQUIRE(again.size() == reference.size());
        for (std::size_t i = 0; i < again.size(); ++i) {
            CHECK(again[i].record.label() == reference[i].record.label());
            CHECK(again[i].report == reference[i].report);
        }
    }
}

TEST_CASE("verdicts are reproducible") {
    const auto cat = builtin_catalog();
    for (const auto& r : named_extensions(cat)) CHECK(check_extension(r) == check_extension(r));
}

TEST_CASE("periodic table rows") {
    const auto rows = periodic_table(builtin_catalog());
    auto row = [&](const std::string& n) {
        for (const auto& r : rows)
            if (r.name == n) return r;
        FAIL("row missing: " << n);
        return PeriodicRow{};
    };
    const auto w6 = row("W6");
    CHECK(w6.dim == 6);
    CHECK(w6.euler == 6);
    CHECK(betti_string(w6.betti) == "(1,0,2,0,2,0,1)");
    CHECK(w6.boson == "W-boson");
    CHECK(*w6.mass_gev == 80.39);
    const auto s2 = row("S2");
    CHECK(s2.boson == "none");
    CHECK_FALSE(s2.mass_gev.has_value());
    const auto op2 = row("OP2");
    CHECK(op2.euler == 3);
    CHECK(op2.boson == "graviton");
    CHECK(*op2.mass_gev == 0.0);
    for (const auto& r : rows) CHECK(r.dim % 2 == 0);

    std::ostringstream csv;
    write_periodic_csv(csv, rows);
    const std::string text = csv.str();
    CHECK(text.rfind("name,dim,euler,betti,boson,mass_gev\n", 0) == 0);
    CHECK(text.find("W6,6,6,\"(1,0,2,0,2,0,1)\",W-boson,80.39\n") != std::string::npos);
    CHECK(text.find("S2,2,2,\"(1,0,1)\",none,none\n") != std::string::npos);

    std::ostringstream svg;
    write_periodic_svg(svg, rows);
    CHECK(svg.str().rfind("<svg", 0) == 0);
    CHECK(svg.str().find(">W24") != std::string::npos);
}
