#include "cli.hpp"

#include "selftest.hpp"

#include "hodgeforge/catalog.hpp"
#include "hodgeforge/chain.hpp"
#include "hodgeforge/cohomology.hpp"
#include "hodgeforge/error.hpp"
#include "hodgeforge/hodge.hpp"
#include "hodgeforge/io.hpp"
#include "hodgeforge/lefschetz.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace hodgeforge::cli {

namespace {

using nlohmann::json;

std::string num(double x) {
    if (x == 0.0) x = 0.0;  // drop the sign of negative zero
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

/// Output target: the --out file when given, else the data stream.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
        if (path.empty()) return;
        file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file_) throw Error(ErrorKind::malformed_input, "cannot open output file '" + path + "'");
        os_ = file_.get();
    }
    std::ostream& operator*() { return *os_; }

private:
    std::unique_ptr<std::ofstream> file_;
    std::ostream* os_;
};

std::string json_array(const std::vector<std::int64_t>& v) { return json(v).dump(); }

struct SpectralFlags {
    std::optional<double> zero_threshold;
    std::size_t dense_cutoff = 2000;
    std::size_t count = 10;

    void add_to(CLI::App* app) {
        app->add_option("--zero-threshold", zero_threshold, "Eigenvalues at or below this count as zero")
            ->check(CLI::PositiveNumber);
        app->add_option("--dense-cutoff", dense_cutoff, "Largest dimension solved densely")
            ->check(CLI::PositiveNumber);
        app->add_option("--count", count, "Eigenvalues computed above the dense cutoff")->check(CLI::PositiveNumber);
    }
    SpectralOptions options() const {
        SpectralOptions o;
        o.zero_threshold = zero_threshold;
        o.dense_cutoff = dense_cutoff;
        o.count = count;
        return o;
    }
};

SimplicialComplex builtin_complex(const std::string& type, int n) {
    if (type == "simplex-sphere") return simplex_sphere(n);
    if (type == "cross-polytope") return cross_polytope_sphere(n);
    if (type == "circle") return circle(n);
    if (type == "torus") return torus();
    if (type == "rp2") return projective_plane();
    if (type == "icosahedron") return icosahedron_sphere();
    if (type == "point") return point_complex();
    throw Error(ErrorKind::malformed_input, "unknown complex type '" + type + "'");
}

json info_json(const SimplicialComplex& k) {
    json j;
    j["name"] = k.name();
    j["dim"] = k.dim();
    j["f_vector"] = k.f_vector();
    j["euler"] = k.euler_characteristic();
    const bool pm = k.is_pseudomanifold();
    j["pseudomanifold"] = pm;
    if (pm) {
        const auto o = orient(k);
        j["orientable"] = o.orientable();
        if (!o.orientable()) {
            json w = json::array();
            for (std::size_t i : o.witness_cycle) w.push_back(to_string(k.skeleton(k.dim())[i]));
            j["orientation_witness"] = w;
        }
    } else {
        j["orientable"] = nullptr;
    }
    return j;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

json verdict_json(const Verdict& v) {
    return json{{"status", to_string(v.status)}, {"reason", v.reason}};
}

json report_json(const ExtensionRecord& r, const RuleReport& rep) {
    json rules = json::object();
    json order = json::array();
    for (const auto& [name, v] : rep.named()) {
        rules[name] = verdict_json(v);
        order.push_back(name);
    }
    return json{{"record", r.label()},
                {"overall", rep.overall() ? "pass" : "fail"},
                {"first_failure", rep.first_failure()},
                {"rule_order", order},
                {"rules", rules}};
}

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) out += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hodgeforge: simplicial Hodge theory and positive-curvature catalog tools", "hodgeforge"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "hodgeforge 0.1.0");

    std::function<void()> action;
    auto bind = [&](CLI::App* sub, std::function<void()> fn) { sub->callback([&action, fn] { action = fn; }); };

    std::string complex_path, out_path, map_path, action_path, format;

    // complex -----------------------------------------------------------------
    auto* complex_cmd = app.add_subcommand("complex", "Build and inspect simplicial complexes");
    complex_cmd->require_subcommand(1);

    std::string build_type;
    int build_n = 2;
    auto* build = complex_cmd->add_subcommand("build", "Emit a built-in complex as JSON");
    build->add_option("--type", build_type, "simplex-sphere|cross-polytope|circle|torus|rp2|icosahedron|point")
        ->required()
        ->check(CLI::IsMember({"simplex-sphere", "cross-polytope", "circle", "torus", "rp2", "icosahedron", "point"}));
    build->add_option("--n", build_n, "Dimension (spheres) or vertex count (circle)")->check(CLI::NonNegativeNumber);
    build->add_option("--out", out_path, "Output file");
    bind(build, [&] {
        Sink sink(out_path, out);
        write_complex(*sink, builtin_complex(build_type, build_n));
    });

    auto* info = complex_cmd->add_subcommand("info", "Counts, Euler characteristic and orientability");
    info->add_option("--complex", complex_path, "Complex JSON file")->required();
    bind(info, [&] { out << info_json(read_complex(complex_path)).dump() << '\n'; });

    int times = 1;
    auto* subdivide = complex_cmd->add_subcommand("subdivide", "Barycentric subdivision");
    subdivide->add_option("--complex", complex_path, "Complex JSON file")->required();
    subdivide->add_option("--times", times, "Number of subdivisions")->check(CLI::Range(0, 6));
    subdivide->add_option("--out", out_path, "Output file");
    bind(subdivide, [&] {
        SimplicialComplex k = read_complex(complex_path);
        for (int i = 0; i < times; ++i) k = barycentric_subdivision(k);
        Sink sink(out_path, out);
        write_complex(*sink, k);
    });

    std::string right_path;
    auto* prod = complex_cmd->add_subcommand("product", "Staircase product of two complexes");
    prod->add_option("--complex", complex_path, "Left factor")->required();
    prod->add_option("--with", right_path, "Right factor")->required();
    prod->add_option("--out", out_path, "Output file");
    bind(prod, [&] {
        const auto k = product(read_complex(complex_path), read_complex(right_path));
        Sink sink(out_path, out);
        write_complex(*sink, k);
    });

    auto* quot = complex_cmd->add_subcommand("quotient", "Quotient by a free simplicial group action");
    quot->add_option("--complex", complex_path, "Complex JSON file")->required();
    quot->add_option("--action", action_path, "Group action JSON file")->required();
    quot->add_option("--out", out_path, "Output file");
    bind(quot, [&] {
        const auto k = quotient(read_complex(complex_path), read_action(action_path));
        Sink sink(out_path, out);
        write_complex(*sink, k);
    });

    // chain level ---------------------------------------------------------------
    std::optional<int> degree;
    auto* exp = app.add_subcommand("export-boundary", "Boundary matrices as coordinate triplets");
    exp->add_option("--complex", complex_path, "Complex JSON file")->required();
    exp->add_option("--degree", degree, "Only boundary(k); default all 1..dim")->check(CLI::NonNegativeNumber);
    exp->add_option("--out", out_path, "Output file");
    bind(exp, [&] {
        ChainSystem cs(read_complex(complex_path));
        Sink sink(out_path, out);
        if (degree) {
            write_triplets(*sink, *degree, cs.boundary(*degree));
        } else {
            for (int k = 1; k <= cs.dim(); ++k) write_triplets(*sink, k, cs.boundary(k));
        }
    });

    std::string method = "exact";
    SpectralFlags spectral;
    auto* betti = app.add_subcommand("betti", "Betti numbers over the rationals");
    betti->add_option("--complex", complex_path, "Complex JSON file")->required();
    betti->add_option("--method", method, "exact|spectral")->check(CLI::IsMember({"exact", "spectral"}));
    spectral.add_to(betti);
    bind(betti, [&] {
        ChainSystem cs(read_complex(complex_path));
        const auto b = method == "exact" ? betti_exact(cs) : betti_spectral(cs, all_spectra(cs, spectral.options()));
        out << json_array(b) << '\n';
    });

    auto* spec = app.add_subcommand("spectrum", "Hodge Laplacian eigenvalues as CSV");
    spec->add_option("--complex", complex_path, "Complex JSON file")->required();
    spec->add_option("--degree", degree, "Single degree; default all")->check(CLI::NonNegativeNumber);
    spec->add_option("--out", out_path, "Output file");
    spectral.add_to(spec);
    bind(spec, [&] {
        ChainSystem cs(read_complex(complex_path));
        std::vector<SpectrumResult> spectra;
        if (degree) {
            if (*degree > cs.dim())
                throw Error(ErrorKind::malformed_input, "degree " + std::to_string(*degree) + " exceeds dimension");
            spectra.push_back(spectrum(cs, *degree, spectral.options()));
        } else {
            spectra = all_spectra(cs, spectral.options());
        }
        Sink sink(out_path, out);
        *sink << "degree,index,eigenvalue\n";
        for (const auto& s : spectra)
            for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
                *sink << s.degree << ',' << i << ',' << num(s.eigenvalues[i]) << '\n';
    });

    std::vector<double> heat_times;
    auto* heat = app.add_subcommand("heat-trace", "Heat-kernel supertrace at one or more times");
    heat->add_option("--complex", complex_path, "Complex JSON file")->required();
    heat->add_option("--t", heat_times, "Positive times (repeatable)")->required()->check(CLI::PositiveNumber);
    spectral.add_to(heat);
    bind(heat, [&] {
        ChainSystem cs(read_complex(complex_path));
        const auto spectra = all_spectra(cs, spectral.options());
        out << "t,supertrace,euler\n";
        for (double t : heat_times)
            out << num(t) << ',' << num(heat_supertrace(spectra, t)) << ',' << cs.complex().euler_characteristic()
                << '\n';
    });

    auto* ground = app.add_subcommand("groundstate", "Smallest nonzero eigenvalue per degree");
    ground->add_option("--complex", complex_path, "Complex JSON file")->required();
    ground->add_option("--degree", degree, "Single degree; default all")->check(CLI::NonNegativeNumber);
    spectral.add_to(ground);
    bind(ground, [&] {
        ChainSystem cs(read_complex(complex_path));
        out << "degree,ground_state\n";
        for (int k = 0; k <= cs.dim(); ++k) {
            if (degree && *degree != k) continue;
            const auto g = ground_state(spectrum(cs, k, spectral.options()));
            out << k << ',' << (g ? num(*g) : std::string("none")) << '\n';
        }
    });

    int logdet_degree = 0;
    auto* logdet = app.add_subcommand("logdet", "Sum of log nonzero eigenvalues in one degree");
    logdet->add_option("--complex", complex_path, "Complex JSON file")->required();
    logdet->add_option("--degree", logdet_degree, "Degree")->required()->check(CLI::NonNegativeNumber);
    spectral.add_to(logdet);
    bind(logdet, [&] {
        ChainSystem cs(read_complex(complex_path));
        if (logdet_degree > cs.dim()) throw Error(ErrorKind::malformed_input, "degree exceeds dimension");
        out << num(log_det_nonzero(spectrum(cs, logdet_degree, spectral.options()))) << '\n';
    });

    // maps and products -----------------------------------------------------------
    bool full_report = false;
    auto* lef = app.add_subcommand("lefschetz", "Lefschetz number of a simplicial self-map");
    lef->add_option("--complex", complex_path, "Complex JSON file")->required();
    lef->add_option("--map", map_path, "Vertex map JSON file")->required();
    lef->add_flag("--report", full_report, "Print both traces and the fixed subcomplex as JSON");
    bind(lef, [&] {
        ChainSystem cs(read_complex(complex_path));
        const auto t = read_map(map_path);
        const auto r = lefschetz_report(cs, t);
        if (Rational(r.chain_supertrace) != r.homology_supertrace)
            throw Error(ErrorKind::convergence, "chain and homology supertraces disagree");
        if (!full_report) {
            out << r.chain_supertrace << '\n';
            return;
        }
        json setwise = json::array();
        for (const auto& s : r.setwise_only) setwise.push_back(to_string(s));
        out << json{{"chain_supertrace", r.chain_supertrace},
                    {"homology_supertrace", r.homology_supertrace.str()},
                    {"fixed_f_vector", r.fixed.f_vector()},
                    {"fixed_euler", r.chi_fixed},
                    {"setwise_fixed_only", setwise}}
                   .dump()
            << '\n';
    });

    std::vector<int> degrees;
    format = "json";
    auto* cupc = app.add_subcommand("cup", "Cup-product pairing matrix against the fundamental class");
    cupc->add_option("--complex", complex_path, "Complex JSON file")->required();
    cupc->add_option("--degrees", degrees, "p q")->required()->expected(2)->check(CLI::NonNegativeNumber);
    cupc->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    bind(cupc, [&] {
        ChainSystem cs(read_complex(complex_path));
        const auto fc = fundamental_class(cs.complex());
        const auto m = intersection_matrix(cs, degrees[0], degrees[1], fc);
        if (format == "csv") {
            out << "i,j,pairing\n";
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) out << i << ',' << j << ',' << m(i, j).str() << '\n';
            return;
        }
        json rows = json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
            json row = json::array();
            for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
            rows.push_back(row);
        }
        std::string det = "undefined";
        if (m.rows() == m.cols()) det = determinant(m).str();
        out << json{{"p", degrees[0]}, {"q", degrees[1]}, {"matrix", rows}, {"determinant", det}}.dump() << '\n';
    });

    // catalog ---------------------------------------------------------------------
    std::string catalog_path;
    int max_dim = 24;
    auto load_catalog = [&] { return catalog_path.empty() ? builtin_catalog() : read_catalog(catalog_path); };
    auto* catalog = app.add_subcommand("catalog", "Positive-curvature catalog and extension rules");
    catalog->require_subcommand(1);

    auto* list = catalog->add_subcommand("list", "Catalog entries");
    list->add_option("--catalog", catalog_path, "Catalog JSON file (default: built-in)");
    list->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    list->add_option("--out", out_path, "Output file");
    bind(list, [&] {
        const auto cat = load_catalog();
        Sink sink(out_path, out);
        if (format == "csv") {
            *sink << "name,dim,euler,betti,family,pi1,consistency\n";
            for (const auto& e : cat)
                *sink << e.name << ',' << e.dim << ',' << e.euler << ',' << csv_quote(betti_string(e.betti)) << ','
                      << to_string(e.family) << ',' << to_string(e.pi1) << ','
                      << to_string(check_entry_consistency(e).status) << '\n';
        } else {
            *sink << catalog_to_json(cat).dump() << '\n';
        }
    });

    std::string components, group_name, target_name;
    auto* check = catalog->add_subcommand("check", "Apply every rule to one extension record");
    check->add_option("--catalog", catalog_path, "Catalog JSON file (default: built-in)");
    check->add_option("--components", components, "Fixed components, e.g. S2+S2+S0")->required();
    check->add_option("--group", group_name, "Z2|U1|SU2|S7|other")->required();
    check->add_option("--target", target_name, "Target entry name")->required();
    bind(check, [&] {
        const auto cat = load_catalog();
        ExtensionRecord r;
        for (const auto& c : split(components, '+')) r.components.push_back(find_entry(cat, c));
        r.group = extension_group_from_string(group_name);
        r.target = find_entry(cat, target_name);
        out << report_json(r, check_extension(r)).dump() << '\n';
    });

    std::size_t max_components = 3;
    auto* enumerate = catalog->add_subcommand("enumerate", "Extension records passing every rule");
    enumerate->add_option("--catalog", catalog_path, "Catalog JSON file (default: built-in)");
    enumerate->add_option("--max-dim", max_dim, "Largest target dimension")->check(CLI::Range(0, 64));
    enumerate->add_option("--max-components", max_components, "Components per record")->check(CLI::Range(1, 4));
    enumerate->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
    enumerate->add_option("--out", out_path, "Output file");
    bind(enumerate, [&] {
        const auto found = enumerate_extensions(load_catalog(), {max_dim, max_components});
        Sink sink(out_path, out);
        if (format == "csv") {
            *sink << "record,group,target,overall,first_failure,named\n";
            for (const auto& e : found)
                *sink << csv_quote(e.record.label()) << ',' << to_string(e.record.group) << ','
                      << e.record.target.name << ',' << (e.report.overall() ? "pass" : "fail") << ','
                      << e.report.first_failure() << ',' << (e.named_case ? "yes" : "no") << '\n';
        } else {
            json arr = json::array();
            for (const auto& e : found) {
                json j = report_json(e.record, e.report);
                j["named"] = e.named_case;
                arr.push_back(j);
            }
            *sink << arr.dump() << '\n';
        }
    });

    std::string table_format = "csv";
    auto* table = catalog->add_subcommand("table", "Dimension against Euler characteristic");
    table->add_option("--catalog", catalog_path, "Catalog JSON file (default: built-in)");
    table->add_option("--max-dim", max_dim, "Largest dimension shown")->check(CLI::Range(0, 64));
    table->add_option("--format", table_format, "csv|json|svg")->check(CLI::IsMember({"csv", "json", "svg"}));
    table->add_option("--out", out_path, "Output file");
    bind(table, [&] {
        const auto rows = periodic_table(load_catalog(), max_dim);
        Sink sink(out_path, out);
        if (table_format == "svg") {
            write_periodic_svg(*sink, rows);
        } else if (table_format == "csv") {
            write_periodic_csv(*sink, rows);
        } else {
            json arr = json::array();
            for (const auto& r : rows)
                arr.push_back(json{{"name", r.name},
                                   {"dim", r.dim},
                                   {"euler", r.euler},
                                   {"betti", r.betti ? json(*r.betti) : json(nullptr)},
                                   {"boson", r.boson},
                                   {"mass_GeV", r.mass_gev ? json(*r.mass_gev) : json(nullptr)}});
            *sink << arr.dump() << '\n';
        }
    });

    // storage and selftest ------------------------------------------------------------
    std::string f_vector_text;
    int storage_k = 1;
    auto* mem = app.add_subcommand("estimate-memory", "Coordinate-format storage of one boundary matrix");
    auto* mem_complex = mem->add_option("--complex", complex_path, "Complex JSON file");
    mem->add_option("--f-vector", f_vector_text, "Comma-separated face counts")->excludes(mem_complex);
    mem->add_option("--degree", storage_k, "k in 1..dim")->required()->check(CLI::PositiveNumber);
    bind(mem, [&] {
        std::vector<std::size_t> f;
        if (!complex_path.empty()) {
            f = read_complex(complex_path).f_vector();
        } else if (!f_vector_text.empty()) {
            for (const auto& s : split(f_vector_text, ',')) {
                try {
                    std::size_t used = 0;
                    const long long v = std::stoll(s, &used);
                    if (used != s.size() || v < 0) throw std::invalid_argument(s);
                    f.push_back(static_cast<std::size_t>(v));
                } catch (const std::logic_error&) {
                    throw Error(ErrorKind::malformed_input, "bad face count '" + s + "'");
                }
            }
        } else {
            throw Error(ErrorKind::malformed_input, "estimate-memory needs --complex or --f-vector");
        }
        if (storage_k >= static_cast<int>(f.size()))
            throw Error(ErrorKind::malformed_input, "degree " + std::to_string(storage_k) + " exceeds dimension");
        const auto e = estimate_storage(f, storage_k);
        out << json{{"degree", storage_k},
                    {"f_k", f[static_cast<std::size_t>(storage_k)]},
                    {"nnz", e.nnz},
                    {"bytes", e.bytes},
                    {"index_width_bytes", e.index_width},
                    {"value_width_bytes", e.value_width}}
                   .dump()
            << '\n';
    });

    std::string filter, ico_path;
    auto* self = app.add_subcommand("selftest", "Run the built-in acceptance checks");
    self->add_option("--filter", filter, "Only criteria whose id contains this text");
    self->add_option("--icosahedron", ico_path, "Complex JSON replacing the embedded icosahedron facets");
    int self_status = 0;
    bind(self, [&] {
        SelftestOptions opts;
        opts.filter = filter;
        if (!ico_path.empty()) {
            std::vector<std::vector<VertexId>> facets;
            const SimplicialComplex ico = read_complex(ico_path);
            for (const auto& f : ico.facets()) facets.push_back(f.vertices);
            opts.icosahedron = facets;
        }
        self_status = write_selftest_report(out, run_selftest(opts)) ? 0 : 1;
    });

    std::vector<std::string> argv_store;
    argv_store.push_back("hodgeforge");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_store) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        out << app.version() << '\n';
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (action) action();
    } catch (const Error& e) {
        err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return e.kind() == ErrorKind::malformed_input ? 2 : 1;
    } catch (const nlohmann::json::exception& e) {
        err << "error (malformed-input): " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return self_status;
}

}  // namespace hodgeforge::cli
