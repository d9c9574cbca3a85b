#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace hermia {

using Vertex = std::size_t;

/// Relation between an unordered vertex pair {u, v}, read from u's side.
enum class PairState : std::uint8_t {
  None = 0,
  Digon = 1,
  ArcUV = 2,  // arc u -> v only
  ArcVU = 3,  // arc v -> u only
};

/// The same relation read from the other endpoint.
constexpr PairState flip(PairState s) {
  switch (s) {
    case PairState::ArcUV:
      return PairState::ArcVU;
    case PairState::ArcVU:
      return PairState::ArcUV;
    default:
      return s;
  }
}

enum class EdgeKind : std::uint8_t { Arc, Digon };

struct Edge {
  Vertex u;
  Vertex v;
  EdgeKind kind;
};

/// Loop-free digraph on vertices 0..n-1, stored as one PairState per
/// unordered pair. Arc sets with loops or multi-arcs are unrepresentable.
///
/// Named digraphs follow the figure convention "north vertex first, then
/// counterclockwise", shifted to 0-based labels.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(std::size_t n);

  std::size_t order() const { return n_; }

  /// State of {u, v} read from u. `u == v` is always None.
  PairState state(Vertex u, Vertex v) const;
  void set_state(Vertex u, Vertex v, PairState s);

  bool adjacent(Vertex u, Vertex v) const { return state(u, v) != PairState::None; }
  bool has_arc(Vertex u, Vertex v) const;

  std::size_t digon_degree(Vertex u) const;
  std::size_t out_degree(Vertex u) const;  // single arcs leaving u
  std::size_t in_degree(Vertex u) const;   // single arcs entering u
  std::size_t degree(Vertex u) const;      // in the underlying graph

  /// Pair states of u<v in row-major order (0,1),(0,2),...,(n-2,n-1),
  /// each read from the lower endpoint.
  std::span<const PairState> pair_states() const { return pairs_; }

  /// Number of unordered pairs, n(n-1)/2.
  static constexpr std::size_t pair_count(std::size_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }
  static std::size_t pair_index(std::size_t n, Vertex lo, Vertex hi);

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PairState> pairs_;
};

/// Builds a digraph from declared edges. An arc together with its reverse
/// merges into a digon; re-declaring an identical edge is harmless.
/// Throws LoopRejected for u == v, Conflict for a digon declared over an
/// existing pair of a different kind, and std::out_of_range for bad labels.
Digraph digraph_from_edges(std::size_t n, std::span<const Edge> edges);
Digraph digraph_from_edges(std::size_t n, std::initializer_list<Edge> edges);

/// Lists the digraph's edges, pairs in lexicographic order.
std::vector<Edge> edges_of(const Digraph& d);

Digraph converse(const Digraph& d);
Digraph underlying_graph(const Digraph& d);

/// D[W]: vertices of W relabeled in increasing order. Duplicates in W are
/// ignored; out-of-range vertices throw std::out_of_range.
Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> w);

/// pi(D): vertex u of D becomes pi[u]. `pi` must be a permutation.
Digraph permuted(const Digraph& d, std::span<const Vertex> pi);

/// Disjoint union; vertices of `b` follow those of `a`.
Digraph disjoint_union(const Digraph& a, const Digraph& b);

std::size_t digon_count(const Digraph& d);
std::size_t arc_count(const Digraph& d);
std::size_t edge_count_underlying(const Digraph& d);

/// Connected components of the underlying graph, each sorted, ordered by
/// smallest member.
std::vector<std::vector<Vertex>> connected_components(const Digraph& d);
bool is_connected(const Digraph& d);
bool has_isolated_vertex(const Digraph& d);

}  // namespace hermia
