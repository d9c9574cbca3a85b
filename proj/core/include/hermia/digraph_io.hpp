#pragma once

#include <iosfwd>
#include <string>

#include "hermia/digraph.hpp"

namespace hermia {

/// Text format, one digraph per file:
///
///     n <N>
///     u v a     # arc u -> v
///     u v d     # digon {u, v}
///
/// `#` starts a comment; blank lines are skipped. Pairs may appear in any
/// order. Errors raise ParseError naming `source`, line and token.
Digraph read_digraph(std::istream& in, const std::string& source = "<input>");
Digraph read_digraph_file(const std::string& path);
Digraph parse_digraph(const std::string& text, const std::string& source = "<string>");

/// Writes pairs sorted lexicographically by (min, max) endpoint.
void write_digraph(std::ostream& out, const Digraph& d);
std::string format_digraph(const Digraph& d);

/// {"n": N, "digons": [[u, v], ...], "arcs": [[tail, head], ...]}, pairs in
/// the same order as write_digraph.
std::string digraph_to_json(const Digraph& d);
/// Throws ParseError on malformed documents.
Digraph digraph_from_json(const std::string& text, const std::string& source = "<json>");

}  // namespace hermia
