#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace hodgeforge {

enum class Family {
    sphere,
    real_projective,
    complex_projective,
    quaternionic_projective,
    octonionic_projective,
    wallach,
    eschenburg,
    odd_space_form,
    aloff_wallach,
    bazaikin,
    berger,
    lie_group,  // auxiliary entries such as SU(3); never enumerated
    hypothetical,
};

enum class DivisionAlgebra { R, C, H, O, none };
enum class FundamentalGroup { trivial, Z2, other, unknown };
enum class ExtensionGroup { Z2, U1, SU2, S7, other };

std::string to_string(Family f);
std::string to_string(DivisionAlgebra a);
std::string to_string(FundamentalGroup g);
std::string to_string(ExtensionGroup g);
Family family_from_string(const std::string& s);
DivisionAlgebra division_algebra_from_string(const std::string& s);
FundamentalGroup fundamental_group_from_string(const std::string& s);
ExtensionGroup extension_group_from_string(const std::string& s);

struct Boson {
    std::string name;
    std::optional<double> mass_gev;
    double spin = 1.0;
    bool operator==(const Boson&) const = default;
};

struct CatalogEntry {
    std::string name;
    int dim = 0;
    std::int64_t euler = 0;
    std::optional<std::vector<std::int64_t>> betti;  // nullopt = unknown
    Family family = Family::sphere;
    DivisionAlgebra division_algebra = DivisionAlgebra::none;
    FundamentalGroup pi1 = FundamentalGroup::trivial;
    bool orientable = true;
    std::string symmetry_note;
    std::optional<Boson> boson;

    bool auxiliary() const { return family == Family::lie_group || family == Family::hypothetical; }
    bool operator==(const CatalogEntry&) const = default;
};

struct ExtensionRecord {
    std::vector<CatalogEntry> components;  // fixed point set N = N_1 + ... + N_k
    ExtensionGroup group = ExtensionGroup::U1;
    CatalogEntry target;

    std::string label() const;
};

enum class VerdictStatus { pass, fail, not_applicable };

struct Verdict {
    VerdictStatus status = VerdictStatus::pass;
    std::string reason;

    static Verdict passed(std::string why = "") { return {VerdictStatus::pass, std::move(why)}; }
    static Verdict failed(std::string why) { return {VerdictStatus::fail, std::move(why)}; }
    static Verdict na(std::string why = "") { return {VerdictStatus::not_applicable, std::move(why)}; }
    bool operator==(const Verdict&) const = default;
};

std::string to_string(VerdictStatus s);

struct RuleReport {
    Verdict conner_kobayashi;  // nonempty fixed set of smaller components
    Verdict group;             // division-algebra unit spheres, single S7 step
    Verdict frankel;
    Verdict synge;
    Verdict euler_lefschetz;
    Verdict grove_searle;

    bool overall() const;
    /// Name of the first failing rule, empty when all pass.
    std::string first_failure() const;
    std::vector<std::pair<std::string, Verdict>> named() const;
    bool operator==(const RuleReport&) const = default;
};

struct CatalogOptions {
    int max_d = 12;  // family parameter cap for S^{2d}, RP^{2d}, CP^d, HP^d
};

std::vector<CatalogEntry> builtin_catalog(const CatalogOptions& options = {});
/// Throws malformed_input when the name is absent.
const CatalogEntry& find_entry(const std::vector<CatalogEntry>& catalog, const std::string& name);

/// Euler-Poincare consistency of a single entry (not applicable without Betti data).
Verdict check_entry_consistency(const CatalogEntry& e);

Verdict check_conner_kobayashi(const ExtensionRecord& r);
Verdict check_frankel(const ExtensionRecord& r);
Verdict check_euler_lefschetz(const ExtensionRecord& r);
Verdict check_grove_searle(const ExtensionRecord& r);
Verdict check_group(const ExtensionRecord& r);
Verdict check_synge(const CatalogEntry& e);
/// Synge on the target and every component.
Verdict check_synge(const ExtensionRecord& r);

RuleReport check_extension(const ExtensionRecord& r);

struct EnumeratedExtension {
    ExtensionRecord record;
    RuleReport report;
    bool named_case = false;  // one of the worked examples, kept even when it fails
};

struct EnumerationOptions {
    int max_dim = 24;
    std::size_t max_components = 3;
};

/// Extension records worked through by hand, including the impossible ones.
std::vector<ExtensionRecord> named_extensions(const std::vector<CatalogEntry>& catalog);

/// All records with up to max_components components passing every rule,
/// merged with the named records (pass or fail). Sorted canonically, so the
/// result does not depend on catalog order.
std::vector<EnumeratedExtension> enumerate_extensions(const std::vector<CatalogEntry>& catalog,
                                                      const EnumerationOptions& options = {});

struct PeriodicRow {
    std::string name;
    int dim = 0;
    std::int64_t euler = 0;
    std::optional<std::vector<std::int64_t>> betti;
    std::string boson;
    std::optional<double> mass_gev;
};

std::vector<PeriodicRow> periodic_table(const std::vector<CatalogEntry>& catalog, int max_dim = 24);
void write_periodic_csv(std::ostream& os, const std::vector<PeriodicRow>& rows);
/// Dimension on the horizontal axis, Euler characteristic on the vertical.
void write_periodic_svg(std::ostream& os, const std::vector<PeriodicRow>& rows);

std::string betti_string(const std::optional<std::vector<std::int64_t>>& betti);

}  // namespace hodgeforge
