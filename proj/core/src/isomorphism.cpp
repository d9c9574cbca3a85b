#include "hermia/isomorphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "hermia/detail/refine.hpp"
#include "hermia/errors.hpp"

namespace hermia {
namespace {

using Signature = std::vector<int>;

}  // namespace

namespace detail {

std::vector<std::vector<int>> refine_colours(const std::vector<const Digraph*>& gs) {
  const std::size_t n = gs.front()->order();
  std::vector<std::vector<int>> colour(gs.size(), std::vector<int>(n));
  std::vector<std::vector<Signature>> sig(gs.size(), std::vector<Signature>(n));

  auto recolour = [&]() {
    std::vector<Signature> all;
    for (const auto& s : sig) all.insert(all.end(), s.begin(), s.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t g = 0; g < gs.size(); ++g) {
      for (Vertex v = 0; v < n; ++v) {
        colour[g][v] = static_cast<int>(std::lower_bound(all.begin(), all.end(), sig[g][v]) - all.begin());
      }
    }
    return all.size();
  };

  for (std::size_t g = 0; g < gs.size(); ++g) {
    for (Vertex v = 0; v < n; ++v) {
      const Digraph& d = *gs[g];
      sig[g][v] = {static_cast<int>(d.digon_degree(v)), static_cast<int>(d.out_degree(v)),
                   static_cast<int>(d.in_degree(v))};
    }
  }
  std::size_t classes = recolour();
  while (true) {
    for (std::size_t g = 0; g < gs.size(); ++g) {
      const Digraph& d = *gs[g];
      for (Vertex v = 0; v < n; ++v) {
        std::vector<int> nb;
        for (Vertex w = 0; w < n; ++w) {
          const PairState s = d.state(v, w);
          if (s != PairState::None) nb.push_back(colour[g][w] * 4 + static_cast<int>(s));
        }
        std::sort(nb.begin(), nb.end());
        Signature& out = sig[g][v];
        out.clear();
        out.push_back(colour[g][v]);
        out.insert(out.end(), nb.begin(), nb.end());
      }
    }
    const std::size_t next = recolour();
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

}  // namespace detail

namespace {

std::vector<std::vector<int>> refine(const std::vector<const Digraph*>& gs) { return detail::refine_colours(gs); }

struct CanonSearch {
  const Digraph& d;
  std::size_t n;
  std::vector<int> slot_colour;            // colour required at each position
  const std::vector<int>& colour;
  std::vector<Vertex> at;                  // vertex placed at position
  std::vector<bool> used;
  std::vector<std::uint8_t> cur, best;     // column-major pair bytes
  bool have_best = false;

  static std::size_t col_start(std::size_t j) { return j * (j - 1) / 2; }

  void place(std::size_t p, bool less) {
    if (p == n) {
      best = cur;
      have_best = true;
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v] || colour[v] != slot_colour[p]) continue;
      const std::size_t base = col_start(p);
      bool now_less = less;
      bool prune = false;
      for (std::size_t i = 0; i < p; ++i) {
        cur[base + i] = static_cast<std::uint8_t>(d.state(at[i], v));
        if (have_best && !now_less) {
          if (cur[base + i] > best[base + i]) {
            prune = true;
            break;
          }
          if (cur[base + i] < best[base + i]) now_less = true;
        }
      }
      if (prune) continue;
      used[v] = true;
      at[p] = v;
      place(p + 1, now_less || !have_best);
      used[v] = false;
      // A completed leaf beneath this branch may have lowered `best`;
      // siblings must compare against the new value, so `less` cannot be
      // carried over once best has been replaced.
      if (less) less = false;
    }
  }
};

}  // namespace

std::optional<Permutation> is_isomorphic(const Digraph& d1, const Digraph& d2) {
  if (d1.order() != d2.order()) throw SizeMismatch("digraph orders differ");
  const std::size_t n = d1.order();
  if (digon_count(d1) != digon_count(d2) || arc_count(d1) != arc_count(d2)) return std::nullopt;
  if (n == 0) return Permutation{};

  const auto colours = refine({&d1, &d2});
  const auto& c1 = colours[0];
  const auto& c2 = colours[1];
  {
    auto h1 = c1, h2 = c2;
    std::sort(h1.begin(), h1.end());
    std::sort(h2.begin(), h2.end());
    if (h1 != h2) return std::nullopt;
  }

  // Map D1 vertices smallest-class first, breadth-first inside components
  // so each new vertex is constrained by already-mapped neighbours.
  std::vector<std::size_t> class_size(n * 2 + 1, 0);
  for (int c : c1) ++class_size[static_cast<std::size_t>(c)];
  std::vector<Vertex> order;
  std::vector<bool> queued(n, false);
  while (order.size() < n) {
    Vertex seed = n;
    for (Vertex v = 0; v < n; ++v) {
      if (queued[v]) continue;
      if (seed == n || class_size[c1[v]] < class_size[c1[seed]]) seed = v;
    }
    std::size_t head = order.size();
    order.push_back(seed);
    queued[seed] = true;
    while (head < order.size()) {
      const Vertex u = order[head++];
      for (Vertex w = 0; w < n; ++w) {
        if (!queued[w] && d1.adjacent(u, w)) {
          queued[w] = true;
          order.push_back(w);
        }
      }
    }
  }

  Permutation pi(n, n);
  std::vector<bool> taken(n, false);
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    const Vertex u = order[k];
    for (Vertex x = 0; x < n; ++x) {
      if (taken[x] || c2[x] != c1[u]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j) {
        const Vertex w = order[j];
        ok = d1.state(u, w) == d2.state(x, pi[w]);
      }
      if (!ok) continue;
      pi[u] = x;
      taken[x] = true;
      if (self(self, k + 1)) return true;
      taken[x] = false;
    }
    return false;
  };
  if (!extend(extend, 0)) return std::nullopt;
  return pi;
}

std::string canonical_form(const Digraph& d) {
  const std::size_t n = d.order();
  std::string out;
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((n >> shift) & 0xff));
  if (n < 2) return out;

  const auto colours = refine({&d});
  const auto& colour = colours[0];
  std::vector<int> slots = colour;
  std::sort(slots.begin(), slots.end());

  CanonSearch s{d, n, slots, colour, std::vector<Vertex>(n), std::vector<bool>(n, false),
                std::vector<std::uint8_t>(Digraph::pair_count(n)), {}, false};
  s.place(0, false);
  out.append(s.best.begin(), s.best.end());
  return out;
}

Digraph from_canonical_form(const std::string& form) {
  if (form.size() < 4) throw std::invalid_argument("canonical form too short");
  std::size_t n = 0;
  for (int k = 0; k < 4; ++k) n = (n << 8) | static_cast<unsigned char>(form[static_cast<std::size_t>(k)]);
  if (form.size() != 4 + Digraph::pair_count(n)) throw std::invalid_argument("canonical form length mismatch");
  Digraph d(n);
  std::size_t k = 4;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      const auto b = static_cast<unsigned char>(form[k++]);
      if (b > 3) throw std::invalid_argument("bad pair state in canonical form");
      d.set_state(i, j, static_cast<PairState>(b));
    }
  }
  return d;
}

std::string to_hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char c : bytes) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 15]);
  }
  return out;
}

std::string from_hex(const std::string& hex) {
  if (hex.size() % 2) throw std::invalid_argument("odd-length hex string");
  auto val = [](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    throw std::invalid_argument("bad hex digit");
  };
  std::string out;
  for (std::size_t i = 0; i < hex.size(); i += 2) out.push_back(static_cast<char>(val(hex[i]) * 16 + val(hex[i + 1])));
  return out;
}

bool is_self_converse(const Digraph& d) { return is_isomorphic(d, converse(d)).has_value(); }

}  // namespace hermia
