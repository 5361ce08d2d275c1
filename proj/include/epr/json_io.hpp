#pragma once

#include <string>

#include <json.hpp>

#include "epr/complex.hpp"
#include "epr/perm_group.hpp"

namespace epr {

// Interchange format for a complex:
//   {"n_phi": N, "objects": [...], "edges": [[a, b], ...]}
// Serialization is canonical (sorted keys, canonical member order), so equal
// complexes produce byte-identical text.
nlohmann::json complex_to_json(const EprComplex& e);
EprComplex complex_from_json(const nlohmann::json& j);

// Interchange format for a permutation group:
//   {"degree": n, "generators": [[...one-line images...], ...]}
nlohmann::json group_to_json(const PermGroup& g);
PermGroup group_from_json(const nlohmann::json& j);

std::string dump_canonical(const nlohmann::json& j);

nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

EprComplex read_complex_file(const std::string& path);
void write_complex_file(const std::string& path, const EprComplex& e);

}  // namespace epr
