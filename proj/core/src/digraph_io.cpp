#include "hermia/digraph_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "hermia/errors.hpp"

namespace hermia {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line.substr(0, line.find('#')));
  for (std::string t; ss >> t;) out.push_back(t);
  return out;
}

std::size_t parse_count(const std::string& tok, const std::string& source, std::size_t line,
                        const char* what) {
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw ParseError(source, line, tok, std::string("expected ") + what);
  }
  return v;
}

}  // namespace

Digraph read_digraph(std::istream& in, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  std::size_t n = 0;
  bool have_n = false;
  std::vector<Edge> edges;
  std::vector<std::uint8_t> declared;
  while (std::getline(in, line)) {
    ++lineno;
    const auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!have_n) {
      if (toks[0] != "n") throw ParseError(source, lineno, toks[0], "expected header 'n <N>'");
      if (toks.size() != 2) {
        throw ParseError(source, lineno, toks.size() > 2 ? toks[2] : toks[0], "header takes one count");
      }
      n = parse_count(toks[1], source, lineno, "vertex count");
      declared.assign(Digraph::pair_count(n), 0);
      have_n = true;
      continue;
    }
    if (toks.size() != 3) {
      throw ParseError(source, lineno, toks.back(), "expected 'u v a' or 'u v d'");
    }
    const Vertex u = parse_count(toks[0], source, lineno, "vertex");
    const Vertex v = parse_count(toks[1], source, lineno, "vertex");
    if (u >= n) throw ParseError(source, lineno, toks[0], "vertex out of range");
    if (v >= n) throw ParseError(source, lineno, toks[1], "vertex out of range");
    if (u == v) throw ParseError(source, lineno, toks[1], "loops are not allowed");
    EdgeKind kind;
    if (toks[2] == "a") {
      kind = EdgeKind::Arc;
    } else if (toks[2] == "d") {
      kind = EdgeKind::Digon;
    } else {
      throw ParseError(source, lineno, toks[2], "edge kind must be 'a' or 'd'");
    }
    auto& flags = declared[Digraph::pair_index(n, std::min(u, v), std::max(u, v))];
    flags |= kind == EdgeKind::Digon ? 4 : (u < v ? 1 : 2);
    if ((flags & 4) && (flags & 3)) {
      throw ParseError(source, lineno, toks[2], "pair declared both as digon and as a single arc");
    }
    edges.push_back({u, v, kind});
  }
  if (!have_n) throw ParseError(source, lineno, "<eof>", "missing header 'n <N>'");
  return digraph_from_edges(n, edges);
}

Digraph read_digraph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, path, "cannot open file");
  return read_digraph(in, path);
}

Digraph parse_digraph(const std::string& text, const std::string& source) {
  std::istringstream in(text);
  return read_digraph(in, source);
}

void write_digraph(std::ostream& out, const Digraph& d) {
  out << "n " << d.order() << '\n';
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      switch (d.state(u, v)) {
        case PairState::Digon:
          out << u << ' ' << v << " d\n";
          break;
        case PairState::ArcUV:
          out << u << ' ' << v << " a\n";
          break;
        case PairState::ArcVU:
          out << v << ' ' << u << " a\n";
          break;
        case PairState::None:
          break;
      }
    }
  }
}

std::string format_digraph(const Digraph& d) {
  std::ostringstream ss;
  write_digraph(ss, d);
  return ss.str();
}

std::string digraph_to_json(const Digraph& d) {
  nlohmann::json digons = nlohmann::json::array(), arcs = nlohmann::json::array();
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      switch (d.state(u, v)) {
        case PairState::Digon: digons.push_back({u, v}); break;
        case PairState::ArcUV: arcs.push_back({u, v}); break;
        case PairState::ArcVU: arcs.push_back({v, u}); break;
        case PairState::None: break;
      }
    }
  }
  return nlohmann::json{{"n", d.order()}, {"digons", digons}, {"arcs", arcs}}.dump();
}

Digraph digraph_from_json(const std::string& text, const std::string& source) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source, 1, text.substr(0, 20), e.what());
  }
  try {
    const std::size_t n = j.at("n").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& p : j.at("digons")) edges.push_back({p.at(0).get<Vertex>(), p.at(1).get<Vertex>(), EdgeKind::Digon});
    for (const auto& p : j.at("arcs")) edges.push_back({p.at(0).get<Vertex>(), p.at(1).get<Vertex>(), EdgeKind::Arc});
    return digraph_from_edges(n, edges);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(source, 1, text.substr(0, 20), e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(source, 1, text.substr(0, 20), e.what());
  }
}

}  // namespace hermia
