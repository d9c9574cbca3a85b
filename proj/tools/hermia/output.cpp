#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>

#include "hermia/digraph_io.hpp"
#include "hermia/errors.hpp"
#include "hermia/families.hpp"
#include "hermia/twins.hpp"

namespace hermia::cli {

Format parse_format(const std::string& s) {
  if (s == "human") return Format::Human;
  if (s == "json") return Format::Json;
  if (s == "tsv") return Format::Tsv;
  throw Error("unknown format '" + s + "'");
}

std::string format_real(double x) {
  const double r = std::round(x);
  if (std::abs(x - r) < 1e-9) return std::to_string(static_cast<long long>(r));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

nlohmann::json charpoly_json(const CharPoly& p) { return nlohmann::json::parse(to_json(p)); }

nlohmann::json digraph_json(const Digraph& d) { return nlohmann::json::parse(digraph_to_json(d)); }

Digraph load_digraph(const std::string& spec) {
  if (spec == "-") return read_digraph(std::cin, "<stdin>");
  if (spec.rfind("named:", 0) == 0) return make_named(parse_named(spec.substr(6)));
  if (spec.rfind("te:", 0) == 0) {
    const auto colon = spec.find(':', 3);
    if (colon == std::string::npos) throw Error("expected te:NAME:t0:t1,...,tk, got '" + spec + "'");
    const Digraph base = make_named(parse_named(spec.substr(3, colon - 3)));
    return twin_expand(base, parse_expansion_vector(spec.substr(colon + 1)));
  }
  return read_digraph_file(spec);
}

}  // namespace hermia::cli
