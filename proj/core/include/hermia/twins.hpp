#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hermia/digraph.hpp"

namespace hermia {

/// Expansion vector [t0 | t1 ... tk]: t0 isolated vertices plus t_u twins
/// for each vertex u of a k-vertex digraph.
struct ExpansionVector {
  std::size_t t0 = 0;
  std::vector<std::size_t> ts;

  ExpansionVector() = default;
  /// Throws std::invalid_argument if any block size is zero.
  ExpansionVector(std::size_t isolated, std::vector<std::size_t> blocks);

  std::size_t total() const;

  friend bool operator==(const ExpansionVector&, const ExpansionVector&) = default;
};

/// Parses the command-line syntax `t0:t1,t2,...,tk` (e.g. `2:5,4,2,3`).
ExpansionVector parse_expansion_vector(const std::string& text);
std::string to_string(const ExpansionVector& t);

/// Rows u and v of H(D) coincide (so u and v are non-adjacent). u != v.
bool are_twins(const Digraph& d, Vertex u, Vertex v);

/// Twin classes of the non-isolated vertices, each sorted, ordered by
/// smallest member.
std::vector<std::vector<Vertex>> twin_classes(const Digraph& d);

/// TR(D): keeps the lowest-labelled vertex of every twin class, drops
/// isolated vertices and relabels the survivors in increasing order.
Digraph twin_reduction(const Digraph& d);

/// No twin pair and no isolated vertex.
bool is_reduced(const Digraph& d);

/// TE(D, t): the t0 isolated vertices come first, then one contiguous block
/// per source vertex in source order. Throws ArityMismatch if
/// t.ts.size() != D.order().
Digraph twin_expand(const Digraph& d, const ExpansionVector& t);

/// Vertex blocks of twin_expand(D, t): the isolated block (possibly empty)
/// followed by the k expansion blocks.
std::vector<std::vector<Vertex>> expansion_blocks(const ExpansionVector& t);

}  // namespace hermia
