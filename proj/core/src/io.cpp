#include "hodgeforge/io.hpp"

#include "hodgeforge/error.hpp"

#include <fstream>
#include <ostream>

namespace hodgeforge {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::malformed_input, what); }

VertexId parse_vertex(const json& j) {
    if (!j.is_number_integer()) bad("vertex ids must be integers");
    const auto v = j.get<VertexId>();
    if (v < 0) bad("negative vertex id " + std::to_string(v));
    return v;
}

VertexMap parse_vertex_map(const json& j) {
    if (!j.is_object()) bad("vertex map must be an object");
    VertexMap m;
    for (const auto& [key, value] : j.items()) {
        VertexId v = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(key, &used);
            if (used != key.size()) bad("vertex key '" + key + "' is not an integer");
        } catch (const std::logic_error&) {
            bad("vertex key '" + key + "' is not an integer");
        }
        m[v] = parse_vertex(value);
    }
    return m;
}

}  // namespace

json read_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        bad(path.string() + ": " + e.what());
    }
}

SimplicialComplex complex_from_json(const json& j) {
    if (!j.is_object() || !j.contains("facets") || !j.at("facets").is_array())
        bad("complex must be an object with a \"facets\" array");
    std::string name;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) bad("complex name must be a string");
        name = j.at("name").get<std::string>();
    }
    std::vector<std::vector<VertexId>> facets;
    for (const json& f : j.at("facets")) {
        if (!f.is_array()) bad("each facet must be an array of integers");
        std::vector<VertexId> vs;
        for (const json& v : f) vs.push_back(parse_vertex(v));
        facets.push_back(std::move(vs));
    }
    return build_from_facets(facets, name);
}

json complex_to_json(const SimplicialComplex& k) {
    json facets = json::array();
    for (const Simplex& f : k.facets()) facets.push_back(f.vertices);
    return json{{"name", k.name()}, {"facets", facets}};
}

SimplicialComplex read_complex(const std::filesystem::path& path) { return complex_from_json(read_json(path)); }

void write_complex(std::ostream& os, const SimplicialComplex& k) { os << complex_to_json(k).dump() << '\n'; }

SimplicialSelfMap map_from_json(const json& j) {
    if (!j.is_object() || !j.contains("map")) bad("map file must be an object with a \"map\" field");
    return SimplicialSelfMap{parse_vertex_map(j.at("map"))};
}

SimplicialSelfMap read_map(const std::filesystem::path& path) { return map_from_json(read_json(path)); }

json map_to_json(const SimplicialSelfMap& t) {
    json m = json::object();
    for (const auto& [v, w] : t.vertex_map) m[std::to_string(v)] = w;
    return json{{"map", m}};
}

GroupAction action_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators") || !j.at("generators").is_array())
        bad("action file must be an object with a \"generators\" array");
    GroupAction a;
    for (const json& g : j.at("generators")) a.generators.push_back(parse_vertex_map(g));
    return a;
}

GroupAction read_action(const std::filesystem::path& path) { return action_from_json(read_json(path)); }

json catalog_to_json(const std::vector<CatalogEntry>& catalog) {
    json out = json::array();
    for (const CatalogEntry& e : catalog) {
        json j{{"name", e.name},
               {"dim", e.dim},
               {"euler", e.euler},
               {"betti", e.betti ? json(*e.betti) : json(nullptr)},
               {"family", to_string(e.family)},
               {"division_algebra", to_string(e.division_algebra)},
               {"pi1", to_string(e.pi1)},
               {"orientable", e.orientable},
               {"symmetry_note", e.symmetry_note},
               {"boson", nullptr}};
        if (e.boson)
            j["boson"] = json{{"name", e.boson->name},
                              {"mass_GeV", e.boson->mass_gev ? json(*e.boson->mass_gev) : json(nullptr)},
                              {"spin", e.boson->spin}};
        out.push_back(std::move(j));
    }
    return out;
}

std::vector<CatalogEntry> catalog_from_json(const json& j) {
    if (!j.is_array()) bad("catalog must be a JSON list of entries");
    std::vector<CatalogEntry> out;
    try {
        for (const json& e : j) {
            CatalogEntry c;
            c.name = e.at("name").get<std::string>();
            c.dim = e.at("dim").get<int>();
            c.euler = e.at("euler").get<std::int64_t>();
            if (e.contains("betti") && !e.at("betti").is_null())
                c.betti = e.at("betti").get<std::vector<std::int64_t>>();
            c.family = family_from_string(e.at("family").get<std::string>());
            c.division_algebra = division_algebra_from_string(e.value("division_algebra", std::string("none")));
            c.pi1 = fundamental_group_from_string(e.value("pi1", std::string("trivial")));
            c.orientable = e.value("orientable", true);
            c.symmetry_note = e.value("symmetry_note", std::string());
            if (e.contains("boson") && !e.at("boson").is_null()) {
                const json& b = e.at("boson");
                Boson boson;
                boson.name = b.at("name").get<std::string>();
                if (b.contains("mass_GeV") && !b.at("mass_GeV").is_null())
                    boson.mass_gev = b.at("mass_GeV").get<double>();
                boson.spin = b.value("spin", 1.0);
                c.boson = boson;
            }
            out.push_back(std::move(c));
        }
    } catch (const json::exception& ex) {
        bad(std::string("catalog entry: ") + ex.what());
    }
    return out;
}

std::vector<CatalogEntry> read_catalog(const std::filesystem::path& path) {
    return catalog_from_json(read_json(path));
}

}  // namespace hodgeforge
