#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hermia/digraph.hpp"

namespace hermia {

/// Vertex bijection pi with pi(D1) = D2, i.e. vertex u of D1 maps to pi[u].
using Permutation = std::vector<Vertex>;

/// Finds an isomorphism D1 -> D2, or nullopt when none exists.
///
/// Candidates are restricted to vertices of equal refined colour, where the
/// colouring starts from (digon degree, out-degree, in-degree) and is
/// refined by neighbour colours. Intended for n <= 10.
/// Throws SizeMismatch when the orders differ.
std::optional<Permutation> is_isomorphic(const Digraph& d1, const Digraph& d2);

/// Isomorphism-invariant byte string: equal strings iff the digraphs are
/// isomorphic. It is the lexicographically least column-major pair-state
/// encoding over vertex orderings that list refined colour classes in
/// increasing order. Practical to n = 8; larger orders work but may be slow
/// when colour classes are large.
std::string canonical_form(const Digraph& d);

/// Rebuilds a representative digraph from a canonical form.
Digraph from_canonical_form(const std::string& form);

/// Hex rendering of a canonical form (used in corpus files).
std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

bool is_self_converse(const Digraph& d);

}  // namespace hermia
