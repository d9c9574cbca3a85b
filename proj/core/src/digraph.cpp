#include "hermia/digraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "hermia/errors.hpp"

namespace hermia {

Digraph::Digraph(std::size_t n) : n_(n), pairs_(pair_count(n), PairState::None) {}

std::size_t Digraph::pair_index(std::size_t n, Vertex lo, Vertex hi) {
  // Row-major over the strict upper triangle.
  return lo * (2 * n - lo - 1) / 2 + (hi - lo - 1);
}

PairState Digraph::state(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  if (u == v) return PairState::None;
  if (u < v) return pairs_[pair_index(n_, u, v)];
  return flip(pairs_[pair_index(n_, v, u)]);
}

void Digraph::set_state(Vertex u, Vertex v, PairState s) {
  if (u >= n_ || v >= n_) throw std::out_of_range("vertex out of range");
  if (u == v) throw LoopRejected("loop at vertex " + std::to_string(u));
  if (u < v) {
    pairs_[pair_index(n_, u, v)] = s;
  } else {
    pairs_[pair_index(n_, v, u)] = flip(s);
  }
}

bool Digraph::has_arc(Vertex u, Vertex v) const {
  const PairState s = state(u, v);
  return s == PairState::Digon || s == PairState::ArcUV;
}

std::size_t Digraph::digon_degree(Vertex u) const {
  std::size_t c = 0;
  for (Vertex v = 0; v < n_; ++v) c += state(u, v) == PairState::Digon;
  return c;
}

std::size_t Digraph::out_degree(Vertex u) const {
  std::size_t c = 0;
  for (Vertex v = 0; v < n_; ++v) c += state(u, v) == PairState::ArcUV;
  return c;
}

std::size_t Digraph::in_degree(Vertex u) const {
  std::size_t c = 0;
  for (Vertex v = 0; v < n_; ++v) c += state(u, v) == PairState::ArcVU;
  return c;
}

std::size_t Digraph::degree(Vertex u) const {
  std::size_t c = 0;
  for (Vertex v = 0; v < n_; ++v) c += state(u, v) != PairState::None;
  return c;
}

Digraph digraph_from_edges(std::size_t n, std::span<const Edge> edges) {
  // Per pair: bit 0 arc lo->hi, bit 1 arc hi->lo, bit 2 digon declared.
  std::vector<std::uint8_t> declared(Digraph::pair_count(n), 0);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw std::out_of_range("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              ") outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (e.u == e.v) throw LoopRejected("loop at vertex " + std::to_string(e.u));
    const Vertex lo = std::min(e.u, e.v);
    const Vertex hi = std::max(e.u, e.v);
    auto& flags = declared[Digraph::pair_index(n, lo, hi)];
    if (e.kind == EdgeKind::Digon) {
      flags |= 4;
    } else {
      flags |= e.u == lo ? 1 : 2;
    }
    if ((flags & 4) && (flags & 3)) {
      throw Conflict("pair {" + std::to_string(lo) + "," + std::to_string(hi) +
                     "} declared both as digon and as a single arc");
    }
  }
  Digraph d(n);
  for (Vertex lo = 0; lo < n; ++lo) {
    for (Vertex hi = lo + 1; hi < n; ++hi) {
      const auto flags = declared[Digraph::pair_index(n, lo, hi)];
      PairState s = PairState::None;
      if ((flags & 4) || (flags & 3) == 3) {
        s = PairState::Digon;
      } else if (flags & 1) {
        s = PairState::ArcUV;
      } else if (flags & 2) {
        s = PairState::ArcVU;
      }
      d.set_state(lo, hi, s);
    }
  }
  return d;
}

Digraph digraph_from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return digraph_from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<Edge> edges_of(const Digraph& d) {
  std::vector<Edge> out;
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      switch (d.state(u, v)) {
        case PairState::Digon:
          out.push_back({u, v, EdgeKind::Digon});
          break;
        case PairState::ArcUV:
          out.push_back({u, v, EdgeKind::Arc});
          break;
        case PairState::ArcVU:
          out.push_back({v, u, EdgeKind::Arc});
          break;
        case PairState::None:
          break;
      }
    }
  }
  return out;
}

Digraph converse(const Digraph& d) {
  Digraph out(d.order());
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) out.set_state(u, v, flip(d.state(u, v)));
  }
  return out;
}

Digraph underlying_graph(const Digraph& d) {
  Digraph out(d.order());
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      if (d.adjacent(u, v)) out.set_state(u, v, PairState::Digon);
    }
  }
  return out;
}

Digraph induced_subdigraph(const Digraph& d, std::span<const Vertex> w) {
  std::vector<Vertex> keep(w.begin(), w.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  if (!keep.empty() && keep.back() >= d.order()) throw std::out_of_range("subset vertex out of range");
  Digraph out(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a) {
    for (std::size_t b = a + 1; b < keep.size(); ++b) out.set_state(a, b, d.state(keep[a], keep[b]));
  }
  return out;
}

Digraph permuted(const Digraph& d, std::span<const Vertex> pi) {
  const std::size_t n = d.order();
  if (pi.size() != n) throw SizeMismatch("permutation length differs from digraph order");
  std::vector<bool> seen(n, false);
  for (Vertex x : pi) {
    if (x >= n || seen[x]) throw std::invalid_argument("not a permutation");
    seen[x] = true;
  }
  Digraph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) out.set_state(pi[u], pi[v], d.state(u, v));
  }
  return out;
}

Digraph disjoint_union(const Digraph& a, const Digraph& b) {
  const std::size_t na = a.order();
  Digraph out(na + b.order());
  for (Vertex u = 0; u < na; ++u) {
    for (Vertex v = u + 1; v < na; ++v) out.set_state(u, v, a.state(u, v));
  }
  for (Vertex u = 0; u < b.order(); ++u) {
    for (Vertex v = u + 1; v < b.order(); ++v) out.set_state(na + u, na + v, b.state(u, v));
  }
  return out;
}

std::size_t digon_count(const Digraph& d) {
  return static_cast<std::size_t>(
      std::count(d.pair_states().begin(), d.pair_states().end(), PairState::Digon));
}

std::size_t arc_count(const Digraph& d) {
  return static_cast<std::size_t>(std::count_if(
      d.pair_states().begin(), d.pair_states().end(),
      [](PairState s) { return s == PairState::ArcUV || s == PairState::ArcVU; }));
}

std::size_t edge_count_underlying(const Digraph& d) { return digon_count(d) + arc_count(d); }

std::vector<std::vector<Vertex>> connected_components(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<Vertex>> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      out.back().push_back(u);
      for (Vertex v = 0; v < n; ++v) {
        if (comp[v] < 0 && d.adjacent(u, v)) {
          comp[v] = id;
          stack.push_back(v);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

bool is_connected(const Digraph& d) { return connected_components(d).size() <= 1; }

bool has_isolated_vertex(const Digraph& d) {
  for (Vertex u = 0; u < d.order(); ++u) {
    if (d.degree(u) == 0) return true;
  }
  return false;
}

}  // namespace hermia
