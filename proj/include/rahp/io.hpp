#pragma once

#include <string>

#include <json.hpp>

#include "rahp/polyhedron.hpp"

namespace rahp {

// {"faces": [[...], ...]} with optional "tags": [{"class": .., "anchor": [u, v]} | null].
nlohmann::json polyhedron_to_json(const AbstractPolyhedron& P, bool include_tags = false);
AbstractPolyhedron polyhedron_from_json(const nlohmann::json& j);

// Accepts either the JSON form or an RA1: code, decided by the first
// non-blank character.
AbstractPolyhedron read_polyhedron(const std::string& text);

} // namespace rahp
