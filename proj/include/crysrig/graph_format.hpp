#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "crysrig/colored_graph.hpp"

namespace crysrig {

// Text format, one directive per line, '#' starts a comment:
//   group gamma <k> | group cone <k>
//   vertices <n>
//   edge <tail> <head> (<tx>,<ty>) <r>      (cone graphs: edge <tail> <head> <r>)
// Vertices are 1-indexed.

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

namespace detail {

inline std::vector<std::string> split_tokens(std::string_view s) {
  // Parentheses and commas are separators so "( 1 , -2 )" and "(1,-2)" agree.
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',' || ch == '(' || ch == ')') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
      if (ch == '(' || ch == ')') out.emplace_back(1, ch);
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

inline std::int64_t parse_int(const std::string& tok, int line) {
  std::int64_t v = 0;
  const char* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc() || ptr != end) throw ParseError(line, "expected an integer, got '" + tok + "'");
  return v;
}

}  // namespace detail

inline constexpr std::int64_t kMaxTranslation = 1'000'000;

inline ColoredGraph parse_colored_graph(std::string_view text) {
  std::optional<GroupContext> ctx;
  std::optional<ColoredGraph> graph;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::vector<std::string> tok = detail::split_tokens(raw);
    if (tok.empty()) continue;
    const std::string& verb = tok[0];
    if (verb == "group") {
      if (ctx) throw ParseError(line, "duplicate group directive");
      if (tok.size() != 3) throw ParseError(line, "expected 'group gamma <k>' or 'group cone <k>'");
      const auto k = static_cast<int>(detail::parse_int(tok[2], line));
      try {
        if (tok[1] == "gamma") {
          ctx = GroupContext::crystallographic(k);
        } else if (tok[1] == "cone") {
          ctx = GroupContext::cone(k);
        } else {
          throw ParseError(line, "unknown group family '" + tok[1] + "'");
        }
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
    } else if (verb == "vertices") {
      if (!ctx) throw ParseError(line, "vertices before group directive");
      if (graph) throw ParseError(line, "duplicate vertices directive");
      if (tok.size() != 2) throw ParseError(line, "expected 'vertices <n>'");
      const std::int64_t n = detail::parse_int(tok[1], line);
      if (n < 0 || n > 1'000'000) throw ParseError(line, "vertex count out of range");
      graph.emplace(*ctx, static_cast<int>(n));
    } else if (verb == "edge") {
      if (!graph) throw ParseError(line, "edge before vertices directive");
      GroupElement color;
      if (ctx->is_cone()) {
        if (tok.size() != 4) throw ParseError(line, "expected 'edge <tail> <head> <r>'");
      } else {
        if (tok.size() != 8 || tok[3] != "(" || tok[6] != ")") {
          throw ParseError(line, "expected 'edge <tail> <head> (<tx>,<ty>) <r>'");
        }
        color.t = {detail::parse_int(tok[4], line), detail::parse_int(tok[5], line)};
        // Keeps lattice arithmetic (HNF, Schreier products) far from overflow.
        if (std::abs(color.t.x) > kMaxTranslation || std::abs(color.t.y) > kMaxTranslation) {
          throw ParseError(line, "translation coordinate exceeds " + std::to_string(kMaxTranslation));
        }
      }
      const std::int64_t tail = detail::parse_int(tok[1], line);
      const std::int64_t head = detail::parse_int(tok[2], line);
      const std::int64_t r = detail::parse_int(tok.back(), line);
      if (tail < 1 || tail > graph->vertex_count() || head < 1 || head > graph->vertex_count()) {
        throw ParseError(line, "edge endpoint out of range 1.." + std::to_string(graph->vertex_count()));
      }
      if (r < 0 || r >= ctx->k()) throw ParseError(line, "rotation class out of range 0.." + std::to_string(ctx->k() - 1));
      color.r = static_cast<int>(r);
      graph->add_edge(static_cast<int>(tail - 1), static_cast<int>(head - 1), color);
    } else {
      throw ParseError(line, "unknown directive '" + verb + "'");
    }
  }
  if (!ctx) throw ParseError(line, "missing group directive");
  if (!graph) throw ParseError(line, "missing vertices directive");
  return *graph;
}

inline ColoredGraph read_colored_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_colored_graph(buf.str());
}

// Normal form: directives in fixed order, edges sorted by (tail, head, color).
inline std::string serialize_colored_graph(const ColoredGraph& g) {
  const GroupContext& ctx = g.context();
  std::vector<ColoredEdge> edges(g.edges().begin(), g.edges().end());
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "group " << (ctx.is_cone() ? "cone " : "gamma ") << ctx.k() << "\n";
  out << "vertices " << g.vertex_count() << "\n";
  for (const ColoredEdge& e : edges) {
    out << "edge " << e.tail + 1 << " " << e.head + 1 << " ";
    if (!ctx.is_cone()) out << "(" << e.color.t.x << "," << e.color.t.y << ") ";
    out << e.color.r << "\n";
  }
  return out.str();
}

}  // namespace crysrig
