#pragma once

#include "branchlab/catalog.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace branchlab {

inline constexpr int kCatalogVersion = 1;

nlohmann::json to_json(const WeylType& t);
nlohmann::json to_json(const GroupDescriptor& g);
nlohmann::json to_json(const AffineMap& m);
nlohmann::json to_json(const Symbol& s);
nlohmann::json to_json(const CaseRecord& c);
nlohmann::json catalog_to_json(const std::vector<CaseRecord>& cases, int max_n);

WeylType weyl_from_json(const nlohmann::json& j);
GroupDescriptor group_from_json(const nlohmann::json& j);
AffineMap affine_from_json(const nlohmann::json& j);
Symbol symbol_from_json(const nlohmann::json& j);
CaseRecord case_from_json(const nlohmann::json& j);

// Reads a catalog document; records with size above max_n are dropped.
std::vector<CaseRecord> catalog_from_json(const nlohmann::json& doc, int max_n);
std::vector<CaseRecord> load_catalog(const std::string& path, int max_n);
void save_catalog(const std::string& path, const std::vector<CaseRecord>& cases, int max_n);

// BRANCHLAB_CATALOG if set, otherwise the path baked in at build time.
std::string default_catalog_path();

}  // namespace branchlab
