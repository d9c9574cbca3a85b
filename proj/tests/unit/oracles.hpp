#pragma once

// Slow, independent reference implementations used to cross-check the
// library. They read digraphs only through has_arc and never call the
// matrix, canonical-form or search code under test.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "hermia/digraph.hpp"

namespace oracle {

using hermia::Digraph;
using hermia::Vertex;

struct GI {
  long long re = 0, im = 0;
  friend GI operator+(GI a, GI b) { return {a.re + b.re, a.im + b.im}; }
  friend GI operator-(GI a, GI b) { return {a.re - b.re, a.im - b.im}; }
  friend GI operator*(GI a, GI b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
  friend bool operator==(GI a, GI b) { return a.re == b.re && a.im == b.im; }
  GI conj() const { return {re, -im}; }
};

constexpr GI kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

inline GI entry(const Digraph& d, Vertex u, Vertex v) {
  if (u == v) return {};
  const bool f = d.has_arc(u, v), b = d.has_arc(v, u);
  if (f && b) return {1, 0};
  if (f) return {0, 1};
  if (b) return {0, -1};
  return {};
}

inline int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    if (len % 2 == 0) s = -s;
  }
  return s;
}

// Leibniz determinant of a small square Gaussian matrix.
inline GI determinant(const std::vector<std::vector<GI>>& m) {
  const std::size_t k = m.size();
  std::vector<std::size_t> p(k);
  std::iota(p.begin(), p.end(), 0);
  GI total;
  do {
    GI prod{1, 0};
    for (std::size_t r = 0; r < k; ++r) prod = prod * m[r][p[r]];
    total = permutation_sign(p) > 0 ? total + prod : total - prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Coefficients (low to high) of det(mu I - H) from sums of principal minors:
// the coefficient of mu^{n-k} is (-1)^k E_k. Returns the imaginary parts
// too so callers can check they vanish.
inline std::vector<GI> charpoly_by_minors(const std::vector<std::vector<GI>>& h) {
  const std::size_t n = h.size();
  std::vector<GI> c(n + 1);
  c[n] = {1, 0};
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<std::size_t> rows;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1) rows.push_back(i);
    }
    std::vector<std::vector<GI>> sub(rows.size(), std::vector<GI>(rows.size()));
    for (std::size_t a = 0; a < rows.size(); ++a) {
      for (std::size_t b = 0; b < rows.size(); ++b) sub[a][b] = h[rows[a]][rows[b]];
    }
    const GI det = determinant(sub);
    const std::size_t k = rows.size();
    c[n - k] = (k % 2 == 0) ? c[n - k] + det : c[n - k] - det;
  }
  return c;
}

inline std::vector<std::vector<GI>> matrix_of(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<std::vector<GI>> h(n, std::vector<GI>(n));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) h[u][v] = entry(d, u, v);
  }
  return h;
}

inline bool maps_onto(const Digraph& a, const Digraph& b, const std::vector<std::size_t>& p) {
  for (Vertex u = 0; u < a.order(); ++u) {
    for (Vertex v = 0; v < a.order(); ++v) {
      if (u != v && a.has_arc(u, v) != b.has_arc(p[u], p[v])) return false;
    }
  }
  return true;
}

inline bool isomorphic(const Digraph& a, const Digraph& b) {
  if (a.order() != b.order()) return false;
  std::vector<std::size_t> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (maps_onto(a, b, p)) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline Digraph converse_of(const Digraph& d) {
  Digraph c(d.order());
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      const bool f = d.has_arc(u, v), b = d.has_arc(v, u);
      if (f && b) {
        c.set_state(u, v, hermia::PairState::Digon);
      } else if (f) {
        c.set_state(u, v, hermia::PairState::ArcVU);
      } else if (b) {
        c.set_state(u, v, hermia::PairState::ArcUV);
      }
    }
  }
  return c;
}

// D2 = S^-1 H' S up to relabelling, over every permutation (or only the
// identity), every phase vector and H' in {H(D1), H(D1)^T}.
inline bool switching_equivalent(const Digraph& d1, const Digraph& d2, bool relabel) {
  const std::size_t n = d1.order();
  if (d2.order() != n) return false;
  for (int conv = 0; conv < 2; ++conv) {
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
      std::size_t phases = 1;
      for (std::size_t i = 0; i < n; ++i) phases *= 4;
      for (std::size_t code = 0; code < phases; ++code) {
        std::vector<GI> s(n);
        std::size_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 4) s[i] = kPhases[c % 4];
        bool ok = true;
        for (Vertex u = 0; u < n && ok; ++u) {
          for (Vertex v = 0; v < n && ok; ++v) {
            if (u == v) continue;
            const GI h = conv ? entry(d1, v, u) : entry(d1, u, v);
            ok = entry(d2, p[u], p[v]) == s[u].conj() * h * s[v];
          }
        }
        if (ok) return true;
      }
      if (!relabel) break;
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return false;
}

inline Digraph random_digraph(std::size_t n, std::mt19937_64& rng, double density = 0.5) {
  Digraph d(n);
  std::bernoulli_distribution edge(density);
  std::uniform_int_distribution<int> kind(1, 3);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (edge(rng)) d.set_state(u, v, static_cast<hermia::PairState>(kind(rng)));
    }
  }
  return d;
}

inline std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Class of an induced triangle {a,b,c} read off the arcs: 1 for a digon
// {x,y} with arcs x->z and y->z, 2 for arcs z->x and z->y, 3 for three
// digons, 4 for a digon {x,y} with a directed path x->z->y, 0 otherwise.
inline int triangle_class(const Digraph& d, Vertex a, Vertex b, Vertex c) {
  const Vertex vs[3] = {a, b, c};
  auto digon = [&](Vertex x, Vertex y) { return d.has_arc(x, y) && d.has_arc(y, x); };
  auto arc = [&](Vertex x, Vertex y) { return d.has_arc(x, y) && !d.has_arc(y, x); };
  if (digon(a, b) && digon(a, c) && digon(b, c)) return 3;
  for (int i = 0; i < 3; ++i) {
    const Vertex x = vs[i], y = vs[(i + 1) % 3], z = vs[(i + 2) % 3];
    if (!digon(x, y)) continue;
    if (arc(x, z) && arc(y, z)) return 1;
    if (arc(z, x) && arc(z, y)) return 2;
    if ((arc(x, z) && arc(z, y)) || (arc(y, z) && arc(z, x))) return 4;
  }
  return 0;
}

inline std::size_t labelled_orbit_count(std::size_t n, bool self_converse_only) {
  // Number of isomorphism classes among all labelled digraphs, by picking
  // the least index in each orbit under all relabellings.
  const std::size_t pairs = n * (n - 1);
  std::vector<std::pair<Vertex, Vertex>> ordered;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v) ordered.push_back({u, v});
    }
  }
  auto index_of = [&](Vertex u, Vertex v) {
    return static_cast<std::size_t>(std::find(ordered.begin(), ordered.end(), std::make_pair(u, v)) - ordered.begin());
  };
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::vector<std::size_t> img(pairs);
    for (std::size_t k = 0; k < pairs; ++k) img[k] = index_of(p[ordered[k].first], p[ordered[k].second]);
    perms.push_back(img);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::size_t> rev(pairs);
  for (std::size_t k = 0; k < pairs; ++k) rev[k] = index_of(ordered[k].second, ordered[k].first);
  auto apply = [&](const std::vector<std::size_t>& img, std::uint64_t x) {
    std::uint64_t y = 0;
    for (std::size_t k = 0; k < pairs; ++k) {
      if (x >> k & 1) y |= std::uint64_t{1} << img[k];
    }
    return y;
  };
  std::size_t classes = 0;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << pairs); ++x) {
    const bool least = std::all_of(perms.begin(), perms.end(), [&](const auto& img) { return apply(img, x) >= x; });
    if (!least) continue;
    const std::uint64_t cx = apply(rev, x);
    if (!self_converse_only ||
        std::any_of(perms.begin(), perms.end(), [&](const auto& img) { return apply(img, x) == cx; })) {
      ++classes;
    }
  }
  return classes;
}

}  // namespace oracle
