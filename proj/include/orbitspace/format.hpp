#pragma once

#include <string>
#include <string_view>

#include "orbitspace/orbit_data.hpp"

namespace orbitspace {

// Line-oriented orbit-space file format, version tag "orbitspace v1":
//
//   orbitspace v1
//   sphere e=<int>
//   point index=<+1|-1>
//   arc b1=<int> b2=<int> pairs=(a[:b])[,(a[:b])]*
//   circle segments=<int>[,<int>]* unknotted=<true|false>
//
// '#' starts a comment, blank lines are skipped, directive order is free,
// unknown directives are errors. Semantic legality is checked by validate,
// not by the parser.
OrbitSpaceData parse_orbit_file(std::string_view text);

// Canonical serialization: canonicalize first, one component per line in
// sphere/point/arc/circle order, newline-terminated, byte-deterministic.
// Requires legal data.
std::string serialize_orbit_file(const OrbitSpaceData& o);

// Same component lines joined by "; " without the header; used for census
// cells and digests of embedded data.
std::string serialize_components_inline(const OrbitSpaceData& o);

// FNV-1a 64-bit fingerprint, rendered as 16 hex digits.
std::string digest_text(std::string_view text);

// Fingerprint of the canonical serialization.
std::string digest_orbit(const OrbitSpaceData& o);

}  // namespace orbitspace
