#pragma once

#include "hodgeforge/catalog.hpp"
#include "hodgeforge/complex.hpp"
#include "hodgeforge/lefschetz.hpp"

#include <nlohmann/json.hpp>

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace hodgeforge {

// Complex files: {"name": string, "facets": [[int, ...], ...]}.
SimplicialComplex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(const SimplicialComplex& k);
SimplicialComplex read_complex(const std::filesystem::path& path);
void write_complex(std::ostream& os, const SimplicialComplex& k);

// Map files: {"map": {"v": w, ...}}.
SimplicialSelfMap map_from_json(const nlohmann::json& j);
SimplicialSelfMap read_map(const std::filesystem::path& path);
nlohmann::json map_to_json(const SimplicialSelfMap& t);

// Group action files: {"generators": [{"v": w, ...}, ...]}.
GroupAction action_from_json(const nlohmann::json& j);
GroupAction read_action(const std::filesystem::path& path);

// Catalog files: a JSON list of entries.
nlohmann::json catalog_to_json(const std::vector<CatalogEntry>& catalog);
std::vector<CatalogEntry> catalog_from_json(const nlohmann::json& j);
std::vector<CatalogEntry> read_catalog(const std::filesystem::path& path);

/// Parses a file as JSON; malformed_input on missing file or syntax error.
nlohmann::json read_json(const std::filesystem::path& path);

}  // namespace hodgeforge
