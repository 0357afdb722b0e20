#pragma once

#include <compare>
#include <string>

#include "rahp/polyhedron.hpp"

namespace rahp {

// Isomorphism key of an embedded polyhedron, reflections identified.
// Text form: "RA1:" then one base-62 width character w, then V and, per
// vertex in label order, its degree and neighbour labels, each in w digits.
struct CanonicalCode {
    std::string text;

    auto operator<=>(const CanonicalCode&) const = default;
};

CanonicalCode canonical_code(const AbstractPolyhedron& P);

// P relabeled so that its rotation system is exactly the one encoded by its
// code; face tags are carried over.
AbstractPolyhedron canonical_form(const AbstractPolyhedron& P);

// Inverse of canonical_code: rebuilds the encoded rotation system.
AbstractPolyhedron decode(const std::string& code);

bool looks_like_code(const std::string& text);

} // namespace rahp
