#include "cliqueline/serialize.hpp"

#include <cstdio>

#include "cliqueline/errors.hpp"

namespace cliqueline {

Json to_json(const Simplex& s) { return Json(s.vertices()); }

Json to_json(const Complex& k) {
  Json facets = Json::array();
  for (const Simplex& f : k.facets()) facets.push_back(to_json(f));
  return Json{{"vertex_count", k.vertex_count()}, {"facets", std::move(facets)}};
}

Complex complex_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("vertex_count") || !j.contains("facets")) {
      throw ParseError("complex JSON needs \"vertex_count\" and \"facets\"");
    }
    const auto n = j.at("vertex_count").get<std::size_t>();
    std::vector<Simplex> facets;
    for (const auto& f : j.at("facets")) facets.emplace_back(f.get<std::vector<VertexId>>());
    return Complex(n, std::move(facets));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed complex JSON: ") + e.what());
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("invalid complex: ") + e.what());
  }
}

std::string serialize(const Complex& k) { return to_json(k).dump(); }

Complex parse_complex(const std::string& text) {
  try {
    return complex_from_json(Json::parse(text));
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("complex JSON does not parse: ") + e.what());
  }
}

std::string digest(const Complex& k) { return digest_text(serialize(k)); }

std::string digest_text(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const HomologyProfile& p) {
  Json j{{"betti", p.betti}, {"torsion", Json::array()}};
  for (const auto& t : p.torsion) j["torsion"].push_back(t);
  if (p.empty_complex) j["betti_minus_one"] = 1;
  return j;
}

HomologyProfile profile_from_json(const Json& j) {
  try {
    HomologyProfile p;
    p.betti = j.at("betti").get<std::vector<std::size_t>>();
    p.torsion = j.at("torsion").get<std::vector<std::vector<std::int64_t>>>();
    p.empty_complex = j.value("betti_minus_one", 0) == 1;
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed homology JSON: ") + e.what());
  }
}

Json to_json(const CollapseTrace& t) {
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back(Json{{"free", to_json(s.free_face)}, {"facet", to_json(s.facet)}});
  return Json{{"start", digest(t.start)}, {"end", digest(t.end)}, {"steps", std::move(steps)}};
}

}  // namespace cliqueline
