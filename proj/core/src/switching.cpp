#include "hermia/switching.hpp"

#include <algorithm>
#include <queue>

#include "hermia/detail/refine.hpp"
#include "hermia/errors.hpp"
#include "hermia/spectra.hpp"

namespace hermia {
namespace {

constexpr int kNone = -1;

// Entries of H as powers of i; kNone for zero.
int power_of(PairState s) {
  switch (s) {
    case PairState::None: return kNone;
    case PairState::Digon: return 0;
    case PairState::ArcUV: return 1;
    case PairState::ArcVU: return 3;
  }
  return kNone;
}

PairState state_of_power(int p) {
  switch (p) {
    case 0: return PairState::Digon;
    case 1: return PairState::ArcUV;
    case 3: return PairState::ArcVU;
    default: throw NotAppropriate("switching produces an entry -1");
  }
}

int mod4(int x) { return ((x % 4) + 4) % 4; }

int phase_power(Phase p) { return static_cast<int>(p); }

struct Search {
  Search(const Digraph& a, const Digraph& b, SwitchingMode m, std::size_t budget_, std::size_t& counter)
      : d1(a), d2(b), mode(m), budget(budget_), nodes(counter), n(a.order()) {}

  const Digraph& d1;  // already conversed if needed
  const Digraph& d2;
  SwitchingMode mode;
  std::size_t budget;
  std::size_t& nodes;
  std::size_t n;
  std::vector<Vertex> order;
  std::vector<Vertex> parent;  // n = root of a component
  std::vector<int> colour1, colour2;
  std::vector<Vertex> pi;
  std::vector<int> phase;
  std::vector<bool> used;

  void build_order() {
    std::vector<bool> seen(n, false);
    parent.assign(n, n);
    // Start each component from its rarest colour to narrow the root choice.
    std::vector<std::size_t> freq(n + n, 0);
    for (Vertex v = 0; v < n; ++v) ++freq[static_cast<std::size_t>(colour1[v])];
    std::vector<Vertex> starts(n);
    for (Vertex v = 0; v < n; ++v) starts[v] = v;
    std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) {
      return freq[static_cast<std::size_t>(colour1[a])] < freq[static_cast<std::size_t>(colour1[b])];
    });
    for (Vertex s : starts) {
      if (seen[s]) continue;
      std::queue<Vertex> q;
      q.push(s);
      seen[s] = true;
      while (!q.empty()) {
        const Vertex u = q.front();
        q.pop();
        order.push_back(u);
        for (Vertex w = 0; w < n; ++w) {
          if (!seen[w] && d1.state(u, w) != PairState::None) {
            seen[w] = true;
            parent[w] = u;
            q.push(w);
          }
        }
      }
    }
  }

  bool consistent(std::size_t depth, Vertex u, Vertex x, int a) const {
    for (std::size_t k = 0; k < depth; ++k) {
      const Vertex w = order[k];
      const int h1 = power_of(d1.state(w, u));
      const int h2 = power_of(d2.state(pi[w], x));
      if ((h1 == kNone) != (h2 == kNone)) return false;
      if (h1 == kNone) continue;
      if (h2 != mod4(h1 - phase[w] + a)) return false;
    }
    return true;
  }

  bool place(std::size_t depth) {
    if (depth == n) return true;
    const Vertex u = order[depth];
    auto try_candidate = [&](Vertex x) {
      if (used[x] || colour1[u] != colour2[x]) return false;
      if (++nodes > budget) throw Timeout("switching search exceeded node budget", nodes);
      int a = 0;
      if (parent[u] != n) {
        const Vertex p = parent[u];
        const int h2 = power_of(d2.state(pi[p], x));
        if (h2 == kNone) return false;
        a = mod4(h2 - power_of(d1.state(p, u)) + phase[p]);
      }
      if (!consistent(depth, u, x, a)) return false;
      pi[u] = x;
      phase[u] = a;
      used[x] = true;
      if (place(depth + 1)) return true;
      used[x] = false;
      return false;
    };
    if (mode == SwitchingMode::Labeled) return try_candidate(u);
    if (parent[u] != n) {
      // Only neighbours of the parent's image can host u.
      const Vertex px = pi[parent[u]];
      for (Vertex x = 0; x < n; ++x) {
        if (d2.state(px, x) != PairState::None && try_candidate(x)) return true;
      }
      return false;
    }
    for (Vertex x = 0; x < n; ++x) {
      if (try_candidate(x)) return true;
    }
    return false;
  }

  std::optional<EquivalenceWitness> run(bool conversed) {
    if (mode == SwitchingMode::Labeled) {
      colour1.assign(n, 0);
      colour2.assign(n, 0);
    } else {
      const Digraph g1 = underlying_graph(d1);
      const Digraph g2 = underlying_graph(d2);
      auto cols = detail::refine_colours({&g1, &g2});
      colour1 = cols[0];
      colour2 = cols[1];
      auto h1 = colour1, h2 = colour2;
      std::sort(h1.begin(), h1.end());
      std::sort(h2.begin(), h2.end());
      if (h1 != h2) return std::nullopt;
    }
    build_order();
    pi.assign(n, 0);
    phase.assign(n, 0);
    used.assign(n, false);
    if (!place(0)) return std::nullopt;
    EquivalenceWitness w;
    w.permutation = pi;
    w.phases.resize(n);
    for (Vertex v = 0; v < n; ++v) w.phases[v] = static_cast<Phase>(phase[v]);
    w.conversed = conversed;
    return w;
  }
};

}  // namespace

std::string to_string(Phase p) {
  switch (p) {
    case Phase::One: return "1";
    case Phase::I: return "i";
    case Phase::MinusOne: return "-1";
    case Phase::MinusI: return "-i";
  }
  return "?";
}

Phase parse_phase(const std::string& s) {
  if (s == "1") return Phase::One;
  if (s == "i") return Phase::I;
  if (s == "-1") return Phase::MinusOne;
  if (s == "-i") return Phase::MinusI;
  throw std::invalid_argument("not a phase: '" + s + "'");
}

Digraph apply_switching(const Digraph& d, const SwitchingMatrix& s) {
  const std::size_t n = d.order();
  if (s.size() != n) throw SizeMismatch("switching matrix size differs from digraph order");
  Digraph out(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int h = power_of(d.state(u, v));
      if (h == kNone) continue;
      out.set_state(u, v, state_of_power(mod4(h - phase_power(s[u]) + phase_power(s[v]))));
    }
  }
  return out;
}

bool verify_witness(const Digraph& d1, const Digraph& d2, const EquivalenceWitness& w) {
  const std::size_t n = d1.order();
  if (d2.order() != n || w.permutation.size() != n || w.phases.size() != n) return false;
  std::vector<bool> hit(n, false);
  for (Vertex v : w.permutation) {
    if (v >= n || hit[v]) return false;
    hit[v] = true;
  }
  const Digraph base = w.conversed ? converse(d1) : d1;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const int h1 = power_of(base.state(u, v));
      const int h2 = power_of(d2.state(w.permutation[u], w.permutation[v]));
      if ((h1 == kNone) != (h2 == kNone)) return false;
      if (h1 == kNone) continue;
      if (h2 != mod4(h1 - phase_power(w.phases[u]) + phase_power(w.phases[v]))) return false;
    }
  }
  return true;
}

std::optional<EquivalenceWitness> switching_equivalent(const Digraph& d1, const Digraph& d2,
                                                       const SwitchingOptions& opts) {
  if (d1.order() != d2.order()) throw SizeMismatch("digraphs have different orders");
  if (edge_count_underlying(d1) != edge_count_underlying(d2)) return std::nullopt;
  if (!cospectral(d1, d2)) return std::nullopt;
  std::size_t nodes = 0;
  for (bool conversed : {false, true}) {
    const Digraph base = conversed ? converse(d1) : d1;
    Search s(base, d2, opts.mode, opts.node_budget, nodes);
    if (auto w = s.run(conversed)) return w;
  }
  return std::nullopt;
}

bool WhdsReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const WhdsEntry& e) { return e.witness.has_value(); });
}

WhdsReport whds_over(const Digraph& d, const std::vector<Digraph>& candidates, const SwitchingOptions& opts) {
  WhdsReport r;
  r.candidates = candidates.size();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (candidates[i].order() != d.order() || !cospectral(d, candidates[i])) continue;
    ++r.cospectral;
    r.entries.push_back({i, switching_equivalent(d, candidates[i], opts)});
  }
  return r;
}

}  // namespace hermia
