#include "hodgeforge/catalog.hpp"

#include "hodgeforge/error.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <tuple>

namespace hodgeforge {

// Enum names ---------------------------------------------------------------

namespace {

template <class E>
struct Names {
    std::vector<std::pair<E, const char*>> table;

    std::string name(E e) const {
        for (const auto& [k, v] : table)
            if (k == e) return v;
        return "?";
    }
    E parse(const std::string& s, const char* what) const {
        for (const auto& [k, v] : table)
            if (s == v) return k;
        throw Error(ErrorKind::malformed_input, std::string("unknown ") + what + " '" + s + "'");
    }
};

const Names<Family> family_names{{
    {Family::sphere, "sphere"},
    {Family::real_projective, "RP"},
    {Family::complex_projective, "CP"},
    {Family::quaternionic_projective, "HP"},
    {Family::octonionic_projective, "OP"},
    {Family::wallach, "Wallach"},
    {Family::eschenburg, "Eschenburg"},
    {Family::odd_space_form, "odd-space-form"},
    {Family::aloff_wallach, "Aloff-Wallach"},
    {Family::bazaikin, "Bazaikin"},
    {Family::berger, "Berger"},
    {Family::lie_group, "Lie-group"},
    {Family::hypothetical, "hypothetical"},
}};

const Names<DivisionAlgebra> algebra_names{{
    {DivisionAlgebra::R, "R"},
    {DivisionAlgebra::C, "C"},
    {DivisionAlgebra::H, "H"},
    {DivisionAlgebra::O, "O"},
    {DivisionAlgebra::none, "none"},
}};

const Names<FundamentalGroup> pi1_names{{
    {FundamentalGroup::trivial, "trivial"},
    {FundamentalGroup::Z2, "Z2"},
    {FundamentalGroup::other, "other"},
    {FundamentalGroup::unknown, "unknown"},
}};

const Names<ExtensionGroup> group_names{{
    {ExtensionGroup::Z2, "Z2"},
    {ExtensionGroup::U1, "U1"},
    {ExtensionGroup::SU2, "SU2"},
    {ExtensionGroup::S7, "S7"},
    {ExtensionGroup::other, "other"},
}};

}  // namespace

std::string to_string(Family f) { return family_names.name(f); }
std::string to_string(DivisionAlgebra a) { return algebra_names.name(a); }
std::string to_string(FundamentalGroup g) { return pi1_names.name(g); }
std::string to_string(ExtensionGroup g) { return group_names.name(g); }
Family family_from_string(const std::string& s) { return family_names.parse(s, "family"); }
DivisionAlgebra division_algebra_from_string(const std::string& s) {
    return algebra_names.parse(s, "division algebra");
}
FundamentalGroup fundamental_group_from_string(const std::string& s) {
    return pi1_names.parse(s, "fundamental group");
}
ExtensionGroup extension_group_from_string(const std::string& s) {
    for (const auto& [k, v] : group_names.table)
        if (s == v) return k;
    return ExtensionGroup::other;
}

std::string to_string(VerdictStatus s) {
    switch (s) {
    case VerdictStatus::pass: return "pass";
    case VerdictStatus::fail: return "fail";
    case VerdictStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

std::string ExtensionRecord::label() const {
    std::string out = "(";
    for (std::size_t i = 0; i < components.size(); ++i) out += (i ? "+" : "") + components[i].name;
    return out + ", " + to_string(group) + ", " + target.name + ")";
}

// Catalog ------------------------------------------------------------------

namespace {

std::vector<std::int64_t> betti_with_ones(int dim, int period) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(dim + 1), 0);
    for (int k = 0; k <= dim; k += period) b[static_cast<std::size_t>(k)] = 1;
    return b;
}

std::vector<std::int64_t> betti_from_map(int dim, std::map<int, std::int64_t> entries) {
    std::vector<std::int64_t> b(static_cast<std::size_t>(dim + 1), 0);
    for (const auto& [k, v] : entries) b[static_cast<std::size_t>(k)] = v;
    return b;
}

CatalogEntry odd_entry(std::string name, int dim, Family family, FundamentalGroup pi1, std::string note) {
    CatalogEntry e;
    e.name = std::move(name);
    e.dim = dim;
    e.euler = 0;
    e.family = family;
    e.pi1 = pi1;
    e.symmetry_note = std::move(note);
    return e;
}

}  // namespace

std::vector<CatalogEntry> builtin_catalog(const CatalogOptions& options) {
    std::vector<CatalogEntry> c;
    const Boson photon{"photon", 0.0, 1.0};
    const Boson gluon{"gluon", 0.0, 1.0};
    const Boson graviton{"graviton", 0.0, 2.0};
    const Boson w_boson{"W-boson", 80.39, 1.0};
    const Boson z_boson{"Z-boson", 91.19, 1.0};
    const Boson higgs{"Higgs", 125.35, 0.0};

    c.push_back({"RP0", 0, 1, std::vector<std::int64_t>{1}, Family::real_projective, DivisionAlgebra::R,
                 FundamentalGroup::trivial, true, "point; start of every extension chain", std::nullopt});
    c.push_back({"S0", 0, 2, std::vector<std::int64_t>{2}, Family::sphere, DivisionAlgebra::none,
                 FundamentalGroup::trivial, true, "two points", std::nullopt});

    for (int d = 1; d <= options.max_d; ++d) {
        const int n = 2 * d;
        const std::string sd = std::to_string(n);
        c.push_back({"S" + sd, n, 2, betti_with_ones(n, n), Family::sphere, DivisionAlgebra::none,
                     FundamentalGroup::trivial, true, "SO(" + std::to_string(n + 1) + ") symmetry", std::nullopt});

        std::vector<std::int64_t> rp(static_cast<std::size_t>(n + 1), 0);
        rp[0] = 1;
        c.push_back({"RP" + sd, n, 1, rp, Family::real_projective, DivisionAlgebra::R, FundamentalGroup::Z2,
                     false, "Z2 quotient of S" + sd, std::nullopt});

        c.push_back({"CP" + std::to_string(d), n, d + 1, betti_with_ones(n, 2), Family::complex_projective,
                     DivisionAlgebra::C, FundamentalGroup::trivial, true, "U(1) extensions", photon});

        c.push_back({"HP" + std::to_string(d), 4 * d, d + 1, betti_with_ones(4 * d, 4),
                     Family::quaternionic_projective, DivisionAlgebra::H, FundamentalGroup::trivial, true,
                     "SU(2) extensions", gluon});
    }

    c.push_back({"OP1", 8, 2, betti_with_ones(8, 8), Family::octonionic_projective, DivisionAlgebra::O,
                 FundamentalGroup::trivial, true, "equals S8", std::nullopt});
    c.push_back({"OP2", 16, 3, betti_with_ones(16, 8), Family::octonionic_projective, DivisionAlgebra::O,
                 FundamentalGroup::trivial, true, "Moufang-Cayley plane; F4 symmetry; last octonionic step",
                 graviton});

    c.push_back({"W6", 6, 6, betti_from_map(6, {{0, 1}, {2, 2}, {4, 2}, {6, 1}}), Family::wallach,
                 DivisionAlgebra::C, FundamentalGroup::trivial, true,
                 "flag manifold SU(3)/T2; U(1) fixed set S2+S2+S0. Boson lineup also names E12, read as W12",
                 w_boson});
    c.push_back({"E6", 6, 6, betti_from_map(6, {{0, 1}, {2, 2}, {4, 2}, {6, 1}}), Family::eschenburg,
                 DivisionAlgebra::C, FundamentalGroup::trivial, true,
                 "biquotient of SU(3) by T2; same Betti vector as W6, different cohomology ring; shares the "
                 "W-boson association with W6",
                 w_boson});
    c.push_back({"W12", 12, 6, betti_from_map(12, {{0, 1}, {4, 2}, {8, 2}, {12, 1}}), Family::wallach,
                 DivisionAlgebra::H, FundamentalGroup::trivial, true,
                 "flags in H3; U(1) fixed set W6 or E6 in codimension 6", z_boson});
    // The quoted 24-entry vector drops one zero; the stored vector restores
    // b_24 = 1 so that it has dim + 1 entries and satisfies Poincare duality.
    c.push_back({"W24", 24, 6, betti_from_map(24, {{0, 1}, {8, 2}, {16, 2}, {24, 1}}), Family::wallach,
                 DivisionAlgebra::O, FundamentalGroup::trivial, true, "flags in O3; F4 symmetry", higgs});

    c.push_back({"SU3", 8, 0, std::vector<std::int64_t>{1, 0, 0, 1, 0, 1, 0, 0, 1}, Family::lie_group,
                 DivisionAlgebra::none, FundamentalGroup::trivial, true,
                 "auxiliary: total space over W6 = SU(3)/T2", std::nullopt});

    for (int d = 1; d <= options.max_d; ++d) {
        const int n = 2 * d + 1;
        c.push_back(odd_entry("S" + std::to_string(n) + "/Zm", n, Family::odd_space_form, FundamentalGroup::other,
                              "space form S" + std::to_string(n) + "/Z_m"));
    }
    c.push_back(odd_entry("W7pq", 7, Family::aloff_wallach, FundamentalGroup::trivial,
                          "Aloff-Wallach spaces W7_{p,q}; odd analogue of W6"));
    c.push_back(odd_entry("E7kl", 7, Family::eschenburg, FundamentalGroup::trivial,
                          "Eschenburg spaces E_{k,l}; odd analogue of E6"));
    c.push_back(odd_entry("B7", 7, Family::berger, FundamentalGroup::unknown, "Berger space B7"));
    c.push_back(odd_entry("B13", 13, Family::berger, FundamentalGroup::unknown, "Berger space B13"));
    c.push_back(odd_entry("B13q", 13, Family::bazaikin, FundamentalGroup::unknown,
                          "Bazaikin spaces B13_q; odd analogue of W12"));
    return c;
}

const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name) {
    for (const CatalogEntry& e : catalog)
        if (e.name == name) return e;
    throw Error(ErrorKind::malformed_input, "catalog has no entry named '" + name + "'");
}

// Rules --------------------------------------------------------------------

Verdict check_entry_consistency(const CatalogEntry& e) {
    if (!e.betti) return Verdict::na("Betti numbers unknown");
    const auto& b = *e.betti;
    if (static_cast<int>(b.size()) != e.dim + 1)
        return Verdict::failed("Betti vector has " + std::to_string(b.size()) + " entries for dimension " +
                               std::to_string(e.dim));
    std::int64_t alt = 0;
    for (std::size_t k = 0; k < b.size(); ++k) alt += (k % 2 == 0 ? 1 : -1) * b[k];
    if (alt != e.euler)
        return Verdict::failed("alternating Betti sum " + std::to_string(alt) + " != Euler characteristic " +
                               std::to_string(e.euler));
    return Verdict::passed();
}

Verdict check_conner_kobayashi(const ExtensionRecord& r) {
    if (r.components.empty()) return Verdict::failed("fixed point set is empty (Berger)");
    for (const CatalogEntry& c : r.components)
        if (c.dim >= r.target.dim)
            return Verdict::failed("component " + c.name + " is not of smaller dimension than " + r.target.name);
    return Verdict::passed();
}

Verdict check_frankel(const ExtensionRecord& r) {
    for (const CatalogEntry& c : r.components)
        if ((r.target.dim - c.dim) % 2 != 0)
            return Verdict::failed("component " + c.name + " has odd codimension");
    const int bound = r.target.dim - 2;
    for (std::size_t i = 0; i < r.components.size(); ++i)
        for (std::size_t j = i + 1; j < r.components.size(); ++j) {
            const int sum = r.components[i].dim + r.components[j].dim;
            if (sum > bound)
                return Verdict::failed("dim " + r.components[i].name + " + dim " + r.components[j].name + " = " +
                                       std::to_string(sum) + " > " + std::to_string(bound));
        }
    return Verdict::passed();
}

Verdict check_euler_lefschetz(const ExtensionRecord& r) {
    std::int64_t sum = 0;
    for (const CatalogEntry& c : r.components) sum += c.euler;
    if (sum != r.target.euler)
        return Verdict::failed("sum of component Euler characteristics " + std::to_string(sum) +
                               " != " + std::to_string(r.target.euler));
    return Verdict::passed();
}

Verdict check_grove_searle(const ExtensionRecord& r) {
    bool applies = false;
    for (const CatalogEntry& c : r.components) {
        if (r.target.dim - c.dim != 2) continue;
        applies = true;
        switch (c.family) {
        case Family::sphere:
        case Family::real_projective:
        case Family::complex_projective:
        case Family::quaternionic_projective:
        case Family::octonionic_projective: break;
        default:
            return Verdict::failed("codimension-2 component " + c.name + " is neither a sphere nor a projective space");
        }
    }
    return applies ? Verdict::passed() : Verdict::na("no codimension-2 component");
}

Verdict check_group(const ExtensionRecord& r) {
    if (r.group == ExtensionGroup::other) return Verdict::failed("group is not a unit sphere of R, C, H or O");
    if (r.group != ExtensionGroup::S7) return Verdict::passed();
    for (const CatalogEntry& c : r.components)
        if (c.family == Family::octonionic_projective && c.dim >= 16)
            return Verdict::failed("no S7 extension beyond the Moufang-Cayley plane");
    if (r.target.family != Family::octonionic_projective)
        return Verdict::failed("S7 extensions only produce octonionic projective spaces");
    return Verdict::passed();
}

Verdict check_synge(const CatalogEntry& e) {
    if (e.dim % 2 != 0) return Verdict::na("odd dimension");
    if (e.pi1 == FundamentalGroup::trivial || e.pi1 == FundamentalGroup::Z2) return Verdict::passed();
    return Verdict::failed(e.name + " has fundamental group " + to_string(e.pi1));
}

Verdict check_synge(const ExtensionRecord& r) {
    Verdict v = check_synge(r.target);
    if (v.status == VerdictStatus::fail) return v;
    for (const CatalogEntry& c : r.components) {
        const Verdict cv = check_synge(c);
        if (cv.status == VerdictStatus::fail) return cv;
    }
    return v;
}

RuleReport check_extension(const ExtensionRecord& r) {
    RuleReport rep;
    rep.conner_kobayashi = check_conner_kobayashi(r);
    rep.group = check_group(r);
    rep.frankel = check_frankel(r);
    rep.synge = check_synge(r);
    rep.euler_lefschetz = check_euler_lefschetz(r);
    rep.grove_searle = check_grove_searle(r);
    return rep;
}

std::vector<std::pair<std::string, Verdict>> RuleReport::named() const {
    return {{"conner-kobayashi", conner_kobayashi}, {"frobenius-hurwitz-moufang", group},
            {"frankel", frankel},                   {"synge", synge},
            {"euler-lefschetz", euler_lefschetz},   {"grove-searle", grove_searle}};
}

bool RuleReport::overall() const { return first_failure().empty(); }

std::string RuleReport::first_failure() const {
    for (const auto& [name, v] : named())
        if (v.status == VerdictStatus::fail) return name;
    return {};
}

// Enumeration --------------------------------------------------------------

std::vector<ExtensionRecord> named_extensions(const std::vector<CatalogEntry>& catalog) {
    auto e = [&](const std::string& n) { return find_entry(catalog, n); };
    CatalogEntry x8{"X8", 8, 6, std::nullopt, Family::hypothetical, DivisionAlgebra::none,
                    FundamentalGroup::trivial, true, "hypothetical target containing W6 in codimension 2",
                    std::nullopt};
    return {
        {{e("S2"), e("S2"), e("S0")}, ExtensionGroup::SU2, e("W6")},
        {{e("CP2"), e("CP2")}, ExtensionGroup::U1, e("W6")},
        {{e("W6")}, ExtensionGroup::U1, e("W12")},
        {{e("E6")}, ExtensionGroup::U1, e("W12")},
        {{e("S2"), e("RP0")}, ExtensionGroup::U1, e("CP2")},
        {{e("S2")}, ExtensionGroup::U1, e("CP2")},
        {{e("W6")}, ExtensionGroup::U1, x8},
        {{e("OP1"), e("RP0")}, ExtensionGroup::S7, e("OP2")},
        {{e("OP2"), e("S2"), e("RP0")}, ExtensionGroup::S7, e("W24")},
    };
}

namespace {

bool entry_order(const CatalogEntry& a, const CatalogEntry& b) {
    return std::tie(a.dim, a.name) < std::tie(b.dim, b.name);
}

std::string record_key(const ExtensionRecord& r) {
    std::ostringstream os;
    os << std::setw(3) << std::setfill('0') << r.target.dim << '|' << r.target.name << '|'
       << static_cast<int>(r.group) << '|';
    for (const CatalogEntry& c : r.components) os << std::setw(3) << c.dim << c.name << ',';
    return os.str();
}

void canonicalize(ExtensionRecord& r) {
    std::sort(r.components.begin(), r.components.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::tie(b.dim, a.name) < std::tie(a.dim, b.name);
    });
}

}  // namespace

std::vector<EnumeratedExtension> enumerate_extensions(const std::vector<CatalogEntry>& catalog,
                                                      const EnumerationOptions& options) {
    std::vector<CatalogEntry> pool;
    for (const CatalogEntry& e : catalog)
        if (!e.auxiliary() && e.dim % 2 == 0 && e.dim <= options.max_dim && e.betti) pool.push_back(e);
    std::sort(pool.begin(), pool.end(), entry_order);

    std::map<std::string, EnumeratedExtension> found;
    const ExtensionGroup groups[] = {ExtensionGroup::Z2, ExtensionGroup::U1, ExtensionGroup::SU2,
                                     ExtensionGroup::S7};

    for (const CatalogEntry& target : pool) {
        std::vector<std::size_t> smaller;
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pool[i].dim < target.dim && (target.dim - pool[i].dim) % 2 == 0) smaller.push_back(i);

        // Multisets of indices into `smaller`, non-decreasing.
        std::vector<std::size_t> pick;
        auto visit = [&](auto&& self, std::size_t start, std::int64_t euler_sum) -> void {
            if (!pick.empty() && euler_sum == target.euler) {
                ExtensionRecord r;
                for (std::size_t i : pick) r.components.push_back(pool[smaller[i]]);
                r.target = target;
                canonicalize(r);
                if (check_frankel(r).status != VerdictStatus::fail) {
                    for (ExtensionGroup g : groups) {
                        r.group = g;
                        RuleReport rep = check_extension(r);
                        if (rep.overall()) found.emplace(record_key(r), EnumeratedExtension{r, rep, false});
                    }
                }
            }
            if (pick.size() == options.max_components) return;
            for (std::size_t i = start; i < smaller.size(); ++i) {
                pick.push_back(i);
                self(self, i, euler_sum + pool[smaller[i]].euler);
                pick.pop_back();
            }
        };
        visit(visit, 0, 0);
    }

    for (ExtensionRecord r : named_extensions(catalog)) {
        canonicalize(r);
        const std::string key = record_key(r);
        auto it = found.find(key);
        if (it != found.end()) {
            it->second.named_case = true;
        } else {
            RuleReport rep = check_extension(r);
            found.emplace(key, EnumeratedExtension{r, rep, true});
        }
    }

    std::vector<EnumeratedExtension> out;
    out.reserve(found.size());
    for (auto& [key, value] : found) out.push_back(std::move(value));
    return out;
}

// Periodic table -----------------------------------------------------------

std::string betti_string(const std::optional<std::vector<std::int64_t>>& betti) {
    if (!betti) return "unknown";
    std::string s = "(";
    for (std::size_t i = 0; i < betti->size(); ++i) s += (i ? "," : "") + std::to_string((*betti)[i]);
    return s + ")";
}

std::vector<PeriodicRow> periodic_table(const std::vector<CatalogEntry>& catalog, int max_dim) {
    std::vector<PeriodicRow> rows;
    for (const CatalogEntry& e : catalog) {
        if (e.auxiliary() || e.dim % 2 != 0 || e.dim > max_dim) continue;
        PeriodicRow r{e.name, e.dim, e.euler, e.betti, "none", std::nullopt};
        if (e.boson) {
            r.boson = e.boson->name;
            r.mass_gev = e.boson->mass_gev;
        }
        rows.push_back(std::move(r));
    }
    std::sort(rows.begin(), rows.end(), [](const PeriodicRow& a, const PeriodicRow& b) {
        return std::tie(a.dim, a.euler, a.name) < std::tie(b.dim, b.euler, b.name);
    });
    return rows;
}

namespace {

std::string mass_string(const std::optional<double>& m) {
    if (!m) return "none";
    std::ostringstream os;
    os << *m;
    return os.str();
}

}  // namespace

void write_periodic_csv(std::ostream& os, const std::vector<PeriodicRow>& rows) {
    os << "name,dim,euler,betti,boson,mass_gev\n";
    for (const PeriodicRow& r : rows)
        os << r.name << ',' << r.dim << ',' << r.euler << ",\"" << betti_string(r.betti) << "\"," << r.boson << ','
           << mass_string(r.mass_gev) << '\n';
}

void write_periodic_svg(std::ostream& os, const std::vector<PeriodicRow>& rows) {
    const int width = 900, height = 560, margin = 60;
    int max_dim = 2;
    std::int64_t max_euler = 2;
    for (const PeriodicRow& r : rows) {
        max_dim = std::max(max_dim, r.dim);
        max_euler = std::max(max_euler, r.euler);
    }
    auto x_of = [&](int dim) { return margin + (width - 2 * margin) * dim / max_dim; };
    auto y_of = [&](std::int64_t chi) {
        return height - margin - static_cast<int>((height - 2 * margin) * chi / (max_euler + 1));
    };

    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
       << height - margin << "\" stroke=\"black\"/>\n";
    os << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
       << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\" font-size=\"14\" text-anchor=\"middle\">"
       << "dimension</text>\n";
    os << "<text x=\"18\" y=\"" << height / 2 << "\" font-size=\"14\" transform=\"rotate(-90 18 " << height / 2
       << ")\" text-anchor=\"middle\">Euler characteristic</text>\n";
    for (int d = 0; d <= max_dim; d += 2)
        os << "<text x=\"" << x_of(d) << "\" y=\"" << height - margin + 16 << "\" font-size=\"10\" "
           << "text-anchor=\"middle\">" << d << "</text>\n";
    for (std::int64_t c = 0; c <= max_euler; ++c)
        os << "<text x=\"" << margin - 8 << "\" y=\"" << y_of(c) + 4 << "\" font-size=\"10\" "
           << "text-anchor=\"end\">" << c << "</text>\n";

    std::map<std::pair<int, std::int64_t>, int> stacked;
    for (const PeriodicRow& r : rows) {
        const int x = x_of(r.dim);
        const int y = y_of(r.euler);
        const int slot = stacked[{r.dim, r.euler}]++;
        const char* fill = r.boson == "none" ? "#888888" : (r.mass_gev && *r.mass_gev > 0 ? "#c0392b" : "#2471a3");
        if (slot == 0) os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"5\" fill=\"" << fill << "\"/>\n";
        os << "<text x=\"" << x + 7 << "\" y=\"" << y - 6 - 11 * slot << "\" font-size=\"10\">" << r.name;
        if (r.boson != "none") os << " [" << r.boson << "]";
        os << "</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace hodgeforge
