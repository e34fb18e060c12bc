#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cliqueline/collapse.hpp"
#include "cliqueline/complex.hpp"
#include "cliqueline/homology.hpp"

namespace cliqueline {

using Json = nlohmann::ordered_json;

/// {"vertex_count": n, "facets": [[...], ...]} with facets in lexicographic order.
Json to_json(const Complex& k);
Complex complex_from_json(const Json& j);
/// Compact, byte-stable serialization.
std::string serialize(const Complex& k);
Complex parse_complex(const std::string& text);

/// FNV-1a 64-bit hash of serialize(k), as "fnv1a64:<16 hex digits>".
std::string digest(const Complex& k);
std::string digest_text(std::string_view text);

/// {"betti": [...], "torsion": [[...], ...]}; the empty complex adds
/// "betti_minus_one": 1.
Json to_json(const HomologyProfile& p);
HomologyProfile profile_from_json(const Json& j);

Json to_json(const Simplex& s);
/// {"start": digest, "end": digest, "steps": [{"free": [...], "facet": [...]}, ...]}
Json to_json(const CollapseTrace& t);

}  // namespace cliqueline
