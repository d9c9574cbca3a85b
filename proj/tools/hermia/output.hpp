#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "hermia/charpoly.hpp"
#include "hermia/digraph.hpp"

namespace hermia::cli {

enum class Format { Human, Json, Tsv };

Format parse_format(const std::string& s);

/// Near-integers print as integers; everything else with 12 significant
/// digits.
std::string format_real(double x);

std::string join(const std::vector<std::string>& parts, const std::string& sep);

nlohmann::json charpoly_json(const CharPoly& p);
nlohmann::json digraph_json(const Digraph& d);

/// Loads `path`, `-` for standard input, `named:NAME`, or
/// `te:NAME:t0:t1,...,tk` for a twin expansion of a named digraph.
Digraph load_digraph(const std::string& spec);

}  // namespace hermia::cli
