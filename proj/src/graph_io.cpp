#include "cliqueline/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <fstream>
#include <sstream>
#include <vector>

#include "cliqueline/circulant.hpp"
#include "cliqueline/errors.hpp"

namespace cliqueline {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_number(std::string_view tok, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> count;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto toks = tokens(line);
    if (toks.empty()) continue;
    if (!count) {
      if (toks.size() != 2 || toks[0] != "v") {
        throw ParseError("line " + std::to_string(line_no) + ": expected header 'v <count>'");
      }
      count = parse_number(toks[1], line_no);
      continue;
    }
    if (toks.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected 'u w'");
    }
    auto u = parse_number(toks[0], line_no);
    auto w = parse_number(toks[1], line_no);
    if (u >= *count || w >= *count) {
      throw ParseError("line " + std::to_string(line_no) + ": endpoint outside the " +
                       std::to_string(*count) + " declared vertices");
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(w));
  }
  if (!count) throw ParseError("missing header 'v <count>'");
  return Graph(*count, std::span<const std::pair<VertexId, VertexId>>(edges));
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count() << '\n';
  for (const auto& [v, name] : g.labels()) out << "# " << v << " = " << name << '\n';
  for (const EdgeId& e : g.edges()) out << e.lo << ' ' << e.hi << '\n';
  return out.str();
}

Graph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_edge_list(buf.str());
}

void write_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_edge_list(g);
}

namespace {

std::size_t spec_number(std::string_view tok, std::string_view spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || tok.empty()) {
    throw ParseError("bad number '" + std::string(tok) + "' in graph spec '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<std::size_t> spec_numbers(std::string_view list, std::string_view spec) {
  std::vector<std::size_t> out;
  while (true) {
    auto comma = list.find(',');
    out.push_back(spec_number(list.substr(0, comma), spec));
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

Graph named_graph(std::string_view spec) {
  auto colon = spec.find(':');
  auto name = spec.substr(0, colon);
  std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  auto one = [&] { return spec_number(arg, spec); };

  if (name == "cone") return cone(named_graph(arg));
  if (name == "suspension") return suspension(named_graph(arg));
  if (name == "petersen") return petersen();
  if (name == "bowtie") return bowtie();
  if (arg.empty()) throw ParseError("graph spec '" + std::string(spec) + "' needs a size");
  if (name == "complete") return complete(one());
  if (name == "cycle") return cycle(one());
  if (name == "path") return path(one());
  if (name == "star") return star(one());
  if (name == "wheel") return wheel(one());
  if (name == "prism") return prism(one());
  if (name == "multipartite") {
    auto parts = spec_numbers(arg, spec);
    return complete_multipartite(std::span<const std::size_t>(parts));
  }
  if (name == "circulant") {
    auto second = arg.find(':');
    if (second == std::string_view::npos) throw ParseError("circulant spec is circulant:n:s,t");
    return circulant(CirculantSpec(spec_number(arg.substr(0, second), spec),
                                   spec_numbers(arg.substr(second + 1), spec)));
  }
  throw ParseError("unknown graph '" + std::string(name) + "'");
}

}  // namespace cliqueline
