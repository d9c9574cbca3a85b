#include "hermia/twins.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "hermia/errors.hpp"

namespace hermia {

ExpansionVector::ExpansionVector(std::size_t isolated, std::vector<std::size_t> blocks)
    : t0(isolated), ts(std::move(blocks)) {
  for (std::size_t t : ts) {
    if (t == 0) throw std::invalid_argument("expansion block sizes must be positive");
  }
}

std::size_t ExpansionVector::total() const { return std::accumulate(ts.begin(), ts.end(), t0); }

ExpansionVector parse_expansion_vector(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expansion vector must look like t0:t1,...,tk");
  auto number = [&](std::size_t begin, std::size_t end) {
    std::size_t v = 0;
    const char* first = text.data() + begin;
    const char* last = text.data() + end;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (begin == end || ec != std::errc{} || ptr != last) {
      throw std::invalid_argument("bad number '" + text.substr(begin, end - begin) + "' in expansion vector");
    }
    return v;
  };
  const std::size_t t0 = number(0, colon);
  std::vector<std::size_t> ts;
  std::size_t pos = colon + 1;
  if (pos < text.size()) {
    while (true) {
      const auto comma = text.find(',', pos);
      const std::size_t end = comma == std::string::npos ? text.size() : comma;
      ts.push_back(number(pos, end));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return ExpansionVector(t0, std::move(ts));
}

std::string to_string(const ExpansionVector& t) {
  std::string s = std::to_string(t.t0) + ":";
  for (std::size_t i = 0; i < t.ts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t.ts[i]);
  }
  return s;
}

bool are_twins(const Digraph& d, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("are_twins needs distinct vertices");
  if (d.adjacent(u, v)) return false;
  for (Vertex x = 0; x < d.order(); ++x) {
    if (d.state(u, x) != d.state(v, x)) return false;
  }
  return true;
}

std::vector<std::vector<Vertex>> twin_classes(const Digraph& d) {
  const std::size_t n = d.order();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<Vertex>> out;
  for (Vertex u = 0; u < n; ++u) {
    if (assigned[u] || d.degree(u) == 0) continue;
    out.push_back({u});
    assigned[u] = true;
    for (Vertex v = u + 1; v < n; ++v) {
      if (!assigned[v] && are_twins(d, u, v)) {
        out.back().push_back(v);
        assigned[v] = true;
      }
    }
  }
  return out;
}

Digraph twin_reduction(const Digraph& d) {
  std::vector<Vertex> keep;
  for (const auto& cls : twin_classes(d)) keep.push_back(cls.front());
  return induced_subdigraph(d, keep);
}

bool is_reduced(const Digraph& d) {
  const std::size_t n = d.order();
  for (Vertex u = 0; u < n; ++u) {
    if (d.degree(u) == 0) return false;
    for (Vertex v = u + 1; v < n; ++v) {
      if (are_twins(d, u, v)) return false;
    }
  }
  return true;
}

std::vector<std::vector<Vertex>> expansion_blocks(const ExpansionVector& t) {
  std::vector<std::vector<Vertex>> blocks;
  Vertex next = 0;
  blocks.emplace_back();
  for (std::size_t i = 0; i < t.t0; ++i) blocks.back().push_back(next++);
  for (std::size_t size : t.ts) {
    blocks.emplace_back();
    for (std::size_t i = 0; i < size; ++i) blocks.back().push_back(next++);
  }
  return blocks;
}

Digraph twin_expand(const Digraph& d, const ExpansionVector& t) {
  if (t.ts.size() != d.order()) {
    throw ArityMismatch("expansion vector has " + std::to_string(t.ts.size()) + " block sizes for a digraph of order " +
                        std::to_string(d.order()));
  }
  const auto blocks = expansion_blocks(t);
  Digraph out(t.total());
  for (Vertex u = 0; u < d.order(); ++u) {
    for (Vertex v = u + 1; v < d.order(); ++v) {
      const PairState s = d.state(u, v);
      if (s == PairState::None) continue;
      for (Vertex a : blocks[u + 1]) {
        for (Vertex b : blocks[v + 1]) out.set_state(a, b, s);
      }
    }
  }
  return out;
}

}  // namespace hermia
