#include "hermia/enumeration.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "hermia/errors.hpp"
#include "hermia/families.hpp"
#include "hermia/isomorphism.hpp"
#include "hermia/parallel.hpp"

namespace hermia {
namespace {

std::vector<std::string> merge_unique(std::vector<std::vector<std::string>>& parts) {
  std::vector<std::string> all;
  for (auto& p : parts) {
    all.insert(all.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
    p.clear();
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

void sort_unique(std::vector<std::string>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

CorpusEntry entry_for_form(std::string form) {
  CorpusEntry e;
  e.digraph = from_canonical_form(form);
  e.form = std::move(form);
  e.charpoly = char_poly(e.digraph);
  e.inertia = inertia(e.charpoly);
  return e;
}

Digraph with_new_vertex(const Digraph& base, std::uint64_t pattern) {
  const std::size_t n = base.order();
  Digraph d(n + 1);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) d.set_state(u, v, base.state(u, v));
  }
  for (Vertex u = 0; u < n; ++u) d.set_state(u, n, static_cast<PairState>((pattern >> (2 * u)) & 3));
  return d;
}

std::size_t state_nonzero(std::uint64_t pattern, std::size_t n) {
  std::size_t k = 0;
  for (std::size_t u = 0; u < n; ++u) k += ((pattern >> (2 * u)) & 3) != 0;
  return k;
}

// Eigenvalues of a (n-1)-vertex digraph interlace the n eigenvalues `big`
// (both descending).
bool interlaces(const std::vector<double>& big, const std::vector<double>& small) {
  constexpr double slack = 1e-7;
  for (std::size_t i = 0; i < small.size(); ++i) {
    if (small[i] > big[i] + slack || small[i] < big[i + 1] - slack) return false;
  }
  return true;
}

}  // namespace

const CorpusEntry* DigraphCorpus::find(const Digraph& d) const {
  if (d.order() != order) return nullptr;
  const std::string form = canonical_form(d);
  auto it = std::lower_bound(entries.begin(), entries.end(), form,
                             [](const CorpusEntry& e, const std::string& f) { return e.form < f; });
  if (it == entries.end() || it->form != form) return nullptr;
  return &*it;
}

std::uint64_t labelled_count(std::size_t n) {
  const std::size_t p = Digraph::pair_count(n);
  if (2 * p >= 64) throw std::invalid_argument("too many labelled digraphs to index");
  return std::uint64_t{1} << (2 * p);
}

Digraph labelled_digraph(std::size_t n, std::uint64_t index) {
  Digraph d(n);
  std::size_t k = 0;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v, ++k) d.set_state(u, v, static_cast<PairState>((index >> (2 * k)) & 3));
  }
  return d;
}

DigraphCorpus enumerate_digraphs(std::size_t n, unsigned parallelism) {
  if (n > 5) throw std::invalid_argument("exhaustive enumeration is limited to order 5");
  const std::uint64_t total = labelled_count(n);
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(total, 256));
  std::vector<std::vector<std::string>> parts(chunks);
  parallel_for(chunks, parallelism, [&](std::size_t c) {
    const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
    auto& out = parts[c];
    for (std::uint64_t i = lo; i < hi; ++i) out.push_back(canonical_form(labelled_digraph(n, i)));
    sort_unique(out);
  });
  const auto forms = merge_unique(parts);
  DigraphCorpus c;
  c.order = n;
  c.entries.resize(forms.size());
  parallel_for(forms.size(), parallelism, [&](std::size_t i) { c.entries[i] = entry_for_form(forms[i]); });
  return c;
}

DigraphCorpus make_corpus(std::size_t n, std::vector<Digraph> ds) {
  std::vector<std::string> forms;
  forms.reserve(ds.size());
  for (const auto& d : ds) {
    if (d.order() != n) throw SizeMismatch("corpus members must share one order");
    forms.push_back(canonical_form(d));
  }
  sort_unique(forms);
  DigraphCorpus c;
  c.order = n;
  for (auto& f : forms) c.entries.push_back(entry_for_form(std::move(f)));
  return c;
}

void write_corpus(std::ostream& os, const DigraphCorpus& c) {
  os << "order " << c.order << " count " << c.entries.size() << '\n';
  for (const auto& e : c.entries) os << to_hex(e.form) << '\t' << to_json(e.charpoly) << '\n';
}

DigraphCorpus read_corpus(std::istream& is, const std::string& source) {
  std::string line;
  std::size_t lineno = 0;
  DigraphCorpus c;
  std::size_t count = 0;
  if (!std::getline(is, line)) throw ParseError(source, 1, "", "empty corpus file");
  ++lineno;
  {
    std::istringstream hs(line);
    std::string w1, w2;
    if (!(hs >> w1 >> c.order >> w2 >> count) || w1 != "order" || w2 != "count") {
      throw ParseError(source, lineno, line, "expected header 'order N count C'");
    }
  }
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw ParseError(source, lineno, line, "expected form and charpoly separated by a tab");
    const std::string hex = line.substr(0, tab);
    CorpusEntry e;
    try {
      e = entry_for_form(from_hex(hex));
    } catch (const std::exception& ex) {
      throw ParseError(source, lineno, hex, std::string("bad canonical form: ") + ex.what());
    }
    CharPoly stored;
    try {
      stored = charpoly_from_json(line.substr(tab + 1));
    } catch (const std::exception& ex) {
      throw ParseError(source, lineno, line.substr(tab + 1), std::string("bad charpoly: ") + ex.what());
    }
    if (!(stored == e.charpoly)) throw ParseError(source, lineno, hex, "stored charpoly does not match digraph");
    if (e.digraph.order() != c.order) throw ParseError(source, lineno, hex, "digraph order differs from header");
    c.entries.push_back(std::move(e));
  }
  if (c.entries.size() != count) throw ParseError(source, lineno, "", "entry count differs from header");
  if (!std::is_sorted(c.entries.begin(), c.entries.end(),
                      [](const CorpusEntry& a, const CorpusEntry& b) { return a.form < b.form; })) {
    throw ParseError(source, lineno, "", "corpus entries are not sorted by form");
  }
  return c;
}

TriangleIdentityReport verify_triangle_identity(std::size_t n, unsigned parallelism) {
  const std::uint64_t total = labelled_count(n);
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(total, 256));
  std::vector<std::optional<std::uint64_t>> bad(chunks);
  parallel_for(chunks, parallelism, [&](std::size_t c) {
    const std::uint64_t lo = total * c / chunks, hi = total * (c + 1) / chunks;
    for (std::uint64_t i = lo; i < hi; ++i) {
      const Digraph d = labelled_digraph(n, i);
      if (trace_power(hermitian(d), 3) != BigInt(static_cast<long>(triangle_balance(d).trace_cube()))) {
        bad[c] = i;
        return;
      }
    }
  });
  TriangleIdentityReport r;
  r.order = n;
  r.checked = total;
  for (const auto& b : bad) {
    if (b) {
      r.counterexample = labelled_digraph(n, *b);
      break;
    }
  }
  return r;
}

bool is_one_negative_candidate(const Digraph& d, const CharPoly& p) {
  const Inertia in = inertia(p);
  return in.n_neg == 1 && in.rank() > 2 && is_reduced(d);
}

std::vector<Digraph> classify_one_negative(const DigraphCorpus& corpus) {
  std::vector<Digraph> out;
  for (const auto& e : corpus.entries) {
    if (e.inertia.n_neg == 1 && e.inertia.rank() > 2 && is_reduced(e.digraph)) out.push_back(e.digraph);
  }
  return out;
}

std::vector<Digraph> classify_one_negative(std::size_t n, unsigned parallelism) {
  return classify_one_negative(enumerate_digraphs(n, parallelism));
}

std::vector<Digraph> extend_by_vertex(const std::vector<Digraph>& bases,
                                      const std::function<bool(const Digraph&, const CharPoly&)>& keep,
                                      unsigned parallelism) {
  std::vector<std::vector<std::string>> parts(bases.size());
  parallel_for(bases.size(), parallelism, [&](std::size_t b) {
    const std::size_t n = bases[b].order();
    const std::uint64_t patterns = std::uint64_t{1} << (2 * n);
    for (std::uint64_t a = 0; a < patterns; ++a) {
      const Digraph d = with_new_vertex(bases[b], a);
      if (keep(d, char_poly(d))) parts[b].push_back(canonical_form(d));
    }
    sort_unique(parts[b]);
  });
  std::vector<Digraph> out;
  for (const auto& f : merge_unique(parts)) out.push_back(from_canonical_form(f));
  return out;
}

SweepReport sweep_one_negative(const DigraphCorpus& corpus, unsigned parallelism) {
  std::vector<Digraph> bases;
  for (const auto& e : corpus.entries) {
    if (e.inertia.n_neg == 1 || e.inertia.rank() == 0) bases.push_back(e.digraph);
  }
  SweepReport r;
  r.bases = bases.size();
  r.extensions = static_cast<std::uint64_t>(bases.size()) << (2 * corpus.order);
  r.found = extend_by_vertex(bases, is_one_negative_candidate, parallelism);
  return r;
}

std::vector<Digraph> verify_lambda_max_one(const DigraphCorpus& corpus) {
  std::vector<Digraph> out;
  for (const auto& e : corpus.entries) {
    if (is_connected(e.digraph) && largest_eigenvalue_is(e.charpoly, BigInt(1))) out.push_back(e.digraph);
  }
  return out;
}

bool TrReport::passed() const {
  return std::all_of(cases.begin(), cases.end(), [](const TrCase& c) { return c.holds; });
}

TrReport verify_tr_theorem(const std::vector<Digraph>& samples) {
  const std::array<Digraph, 3> rank3 = {make_named(Named::TMinus), make_named(Named::TMinusA),
                                        make_named(Named::TMinusB)};
  const Digraph kminus = make_named(Named::KMinus);
  auto iso = [](const Digraph& a, const Digraph& b) { return a.order() == b.order() && is_isomorphic(a, b); };
  TrReport r;
  for (const auto& d : samples) {
    const Inertia in = inertia(char_poly(d));
    if (in.n_neg != 1 || (in.rank() != 3 && in.rank() != 4)) continue;
    ++r.examined;
    TrCase c{d, in, twin_reduction(d), true};
    if (in.rank() == 3) {
      c.holds = std::any_of(rank3.begin(), rank3.end(), [&](const Digraph& b) { return iso(*c.reduction, b); });
    } else {
      c.holds = iso(*c.reduction, kminus);
    }
    r.cases.push_back(std::move(c));
  }
  return r;
}

ShdsReport shds_check(const Digraph& d, unsigned parallelism, const DigraphCorpus* corpus) {
  const std::size_t n = d.order();
  const CharPoly target = char_poly(d);
  const std::string own = canonical_form(d);
  ShdsReport r;
  if (n <= 5) {
    DigraphCorpus local;
    if (corpus == nullptr || corpus->order != n) {
      local = enumerate_digraphs(n, parallelism);
      corpus = &local;
    }
    r.universe = corpus->entries.size();
    for (const auto& e : corpus->entries) {
      if (!(e.charpoly == target)) continue;
      ++r.cospectral;
      if (e.form != own) r.mates.push_back(e.digraph);
    }
    return r;
  }
  if (n != 6) throw std::invalid_argument("shds_check supports orders up to 6");
  DigraphCorpus local;
  if (corpus == nullptr || corpus->order != 5) {
    local = enumerate_digraphs(5, parallelism);
    corpus = &local;
  }
  const auto lambda = eigenvalues(hermitian(d)).eigenvalues;
  const std::size_t m = edge_count_underlying(d);
  std::vector<Digraph> bases;
  std::vector<std::size_t> need;
  for (const auto& e : corpus->entries) {
    const std::size_t mb = edge_count_underlying(e.digraph);
    if (mb > m || m - mb > 5) continue;
    if (!interlaces(lambda, eigenvalues(hermitian(e.digraph)).eigenvalues)) continue;
    bases.push_back(e.digraph);
    need.push_back(m - mb);
  }
  std::vector<std::vector<std::string>> parts(bases.size());
  parallel_for(bases.size(), parallelism, [&](std::size_t b) {
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << 10); ++a) {
      if (state_nonzero(a, 5) != need[b]) continue;
      const Digraph x = with_new_vertex(bases[b], a);
      if (char_poly(x) == target) parts[b].push_back(canonical_form(x));
    }
    sort_unique(parts[b]);
  });
  const auto forms = merge_unique(parts);
  r.universe = bases.size();
  r.cospectral = forms.size();
  for (const auto& f : forms) {
    if (f != own) r.mates.push_back(from_canonical_form(f));
  }
  return r;
}

// ---- collision searches ----

namespace {

constexpr std::size_t kMaxBound = 20000;

template <std::size_t K>
struct Tuple {
  std::array<std::int64_t, K - 1> key;  // e2..eK
  std::array<std::uint16_t, K> t;
};

template <std::size_t K>
std::array<std::int64_t, K - 1> sym_key(const std::array<std::uint16_t, K>& t) {
  std::array<std::int64_t, K + 1> e{};
  e[0] = 1;
  for (std::size_t i = 0; i < K; ++i) {
    for (std::size_t k = i + 1; k >= 1; --k) e[k] += e[k - 1] * t[i];
  }
  std::array<std::int64_t, K - 1> key{};
  for (std::size_t k = 2; k <= K; ++k) key[k - 2] = e[k];
  return key;
}

template <std::size_t N>
std::uint64_t hash_key(const std::array<std::int64_t, N>& key) {
  std::uint64_t h = 0x9E3779B97F4A7C15ull;
  for (auto v : key) {
    h ^= static_cast<std::uint64_t>(v) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h *= 0xBF58476D1CE4E5B9ull;
    h ^= h >> 31;
  }
  return h;
}

// Visits every monotone K-tuple 1 <= t1 <= ... <= tK <= bound.
template <std::size_t K, typename F>
void for_each_monotone(std::size_t bound, F&& f) {
  std::array<std::uint16_t, K> t;
  t.fill(1);
  while (true) {
    f(t);
    std::size_t i = K;
    while (i > 0 && t[i - 1] == bound) --i;
    if (i == 0) return;
    ++t[i - 1];
    for (std::size_t j = i; j < K; ++j) t[j] = t[i - 1];
  }
}

using Group = std::vector<std::vector<std::size_t>>;

template <std::size_t K>
std::vector<Group> scan_bucket(std::size_t bound, std::size_t buckets, std::size_t bucket) {
  std::vector<Tuple<K>> items;
  for_each_monotone<K>(bound, [&](const std::array<std::uint16_t, K>& t) {
    const auto key = sym_key<K>(t);
    if (hash_key(key) % buckets == bucket) items.push_back({key, t});
  });
  std::sort(items.begin(), items.end(), [](const Tuple<K>& a, const Tuple<K>& b) {
    return std::tie(a.key, a.t) < std::tie(b.key, b.t);
  });
  std::vector<Group> groups;
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j].key == items[i].key) ++j;
    if (j - i >= 2) {
      Group g;
      for (std::size_t k = i; k < j; ++k) g.emplace_back(items[k].t.begin(), items[k].t.end());
      groups.push_back(std::move(g));
    }
    i = j;
  }
  return groups;
}

std::size_t sum_of(const std::vector<std::size_t>& v) {
  std::size_t s = 0;
  for (auto x : v) s += x;
  return s;
}

CollisionReport build_report(Group g) {
  std::sort(g.begin(), g.end(), [](const auto& a, const auto& b) {
    const auto sa = sum_of(a), sb = sum_of(b);
    return sa != sb ? sa > sb : a < b;
  });
  CollisionReport r;
  r.order = sum_of(g.front());
  const bool kminus = g.front().size() == 4;
  const auto e = elementary_symmetric(g.front());
  if (kminus) {
    r.key = {e[2], e[3], e[4]};
    r.nonzero_part = CharPoly({BigInt(-3 * e[4]), BigInt(2 * e[3]), BigInt(-e[2]), BigInt(0), BigInt(1)});
  } else {
    r.key = {e[2], e[3]};
    r.nonzero_part = CharPoly({BigInt(2 * e[3]), BigInt(-e[2]), BigInt(0), BigInt(1)});
  }
  for (auto& ts : g) {
    CollisionMember m;
    m.digons = kminus ? ts[0] * ts[1] + ts[2] * ts[3] : ts[0] * ts[1];
    const std::size_t isolated = r.order - sum_of(ts);
    m.t = ExpansionVector(isolated, std::move(ts));
    r.members.push_back(std::move(m));
  }
  return r;
}

struct Checkpoint {
  std::string path;
  std::string search;
  std::size_t bound, buckets;
  std::mutex mu;

  std::map<std::size_t, std::vector<Group>> load() {
    std::map<std::size_t, std::vector<Group>> done;
    if (path.empty()) return done;
    std::ifstream in(path);
    if (!in) return done;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const std::exception& e) {
        throw ParseError(path, lineno, line.substr(0, 40), std::string("bad checkpoint record: ") + e.what());
      }
      if (j.at("search") != search || j.at("bound") != bound || j.at("buckets") != buckets) {
        throw ParseError(path, lineno, line.substr(0, 40), "checkpoint belongs to a different search");
      }
      done[j.at("bucket").get<std::size_t>()] = j.at("groups").get<std::vector<Group>>();
    }
    return done;
  }

  void save(std::size_t bucket, const std::vector<Group>& groups) {
    if (path.empty()) return;
    nlohmann::json j = {{"search", search}, {"bound", bound}, {"buckets", buckets}, {"bucket", bucket},
                        {"groups", groups}};
    std::lock_guard<std::mutex> lock(mu);
    std::ofstream out(path, std::ios::app);
    out << j.dump() << '\n';
    out.flush();
    if (!out) throw Error("cannot write checkpoint " + path);
  }
};

template <std::size_t K>
std::vector<CollisionReport> collision_search(std::size_t bound, const CollisionOptions& opts, const char* name) {
  if (bound == 0 || bound > kMaxBound) throw std::invalid_argument("collision bound must be in 1.." + std::to_string(kMaxBound));
  const std::size_t buckets = std::max<std::size_t>(1, opts.buckets);
  Checkpoint cp{opts.checkpoint, name, bound, buckets, {}};
  auto done = cp.load();
  std::vector<std::vector<Group>> results(buckets);
  std::vector<std::size_t> todo;
  for (std::size_t b = 0; b < buckets; ++b) {
    auto it = done.find(b);
    if (it != done.end()) {
      results[b] = std::move(it->second);
    } else {
      todo.push_back(b);
    }
  }
  parallel_for(todo.size(), opts.parallelism, [&](std::size_t i) {
    const std::size_t b = todo[i];
    results[b] = scan_bucket<K>(bound, buckets, b);
    cp.save(b, results[b]);
  });
  std::vector<CollisionReport> out;
  for (auto& groups : results) {
    for (auto& g : groups) out.push_back(build_report(std::move(g)));
  }
  std::sort(out.begin(), out.end(), [](const CollisionReport& a, const CollisionReport& b) {
    return a.order != b.order ? a.order < b.order : a.key < b.key;
  });
  return out;
}

}  // namespace

bool CollisionReport::isolated_counts_differ() const {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (members[i].t.t0 == members[j].t.t0) return false;
    }
  }
  return true;
}

std::vector<CollisionReport> expansion_collision_search(std::size_t bound, const CollisionOptions& opts) {
  return collision_search<4>(bound, opts, "kminus");
}

std::vector<CollisionReport> tminus_collision_search(std::size_t bound, const CollisionOptions& opts) {
  return collision_search<3>(bound, opts, "tminus");
}

}  // namespace hermia
