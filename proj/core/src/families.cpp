#include "hermia/families.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "hermia/errors.hpp"

namespace hermia {
namespace {

void require_arity(const ExpansionVector& t, std::size_t k, const char* base) {
  if (t.ts.size() != k) {
    throw ArityMismatch(std::string("expansion vector for ") + base + " needs " + std::to_string(k) +
                        " block sizes, got " + std::to_string(t.ts.size()));
  }
}

BigInt big(std::size_t v) { return BigInt(static_cast<unsigned long>(v)); }

// mu^{n-d} * (mu^d + lower[d-1] mu^{d-1} + ... + lower[0]).
CharPoly padded(std::size_t n, std::vector<BigInt> lower) {
  lower.push_back(BigInt(1));
  const CharPoly zeros = CharPoly::mu_power(n - (lower.size() - 1));
  return zeros * CharPoly(std::move(lower));
}

// mu^{n-3}(mu^3 - s mu + 2p) for the rank-3 families.
CharPoly cubic_family(std::size_t n, const BigInt& s, const BigInt& p) {
  return padded(n, {BigInt(2 * p), BigInt(-s), BigInt(0)});
}

ClosedForm rational_value(const BigRational& q, std::size_t mult) {
  return ClosedForm{q, BigRational(0), BigInt(0), mult};
}

// q + c*sqrt(r), folding perfect squares into the rational part.
ClosedForm surd(const BigRational& q, const BigRational& c, const BigInt& r) {
  if (r < 0) throw InternalInconsistency("negative radicand in closed form");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), r.get_mpz_t());
  if (root * root == r) return rational_value(BigRational(q + c * BigRational(root)), 1);
  return ClosedForm{q, c, r, 1};
}

std::vector<ClosedForm> merged(std::vector<ClosedForm> xs) {
  std::vector<ClosedForm> out;
  for (auto& x : xs) {
    if (x.multiplicity == 0) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const ClosedForm& y) {
      return y.rational == x.rational && y.coefficient == x.coefficient && y.radicand == x.radicand;
    });
    if (it == out.end()) {
      out.push_back(x);
    } else {
      it->multiplicity += x.multiplicity;
    }
  }
  std::sort(out.begin(), out.end(), [](const ClosedForm& a, const ClosedForm& b) { return a.value() > b.value(); });
  return out;
}

}  // namespace

Named parse_named(const std::string& name) {
  static const std::map<std::string, Named> names = {
      {"tminus", Named::TMinus},   {"kminus", Named::KMinus}, {"tminus-a", Named::TMinusA},
      {"tminus-b", Named::TMinusB}, {"k2", Named::K2},        {"k2prime", Named::K2Prime},
  };
  const auto it = names.find(name);
  if (it == names.end()) throw std::invalid_argument("unknown named digraph '" + name + "'");
  return it->second;
}

std::string to_string(Named n) {
  switch (n) {
    case Named::TMinus: return "tminus";
    case Named::KMinus: return "kminus";
    case Named::TMinusA: return "tminus-a";
    case Named::TMinusB: return "tminus-b";
    case Named::K2: return "k2";
    case Named::K2Prime: return "k2prime";
  }
  return "?";
}

Digraph make_named(Named n) {
  using K = EdgeKind;
  switch (n) {
    case Named::TMinus:
      return digraph_from_edges(3, {{0, 1, K::Digon}, {0, 2, K::Arc}, {2, 1, K::Arc}});
    case Named::KMinus:
      return digraph_from_edges(4, {{0, 1, K::Digon},
                                    {2, 3, K::Digon},
                                    {0, 2, K::Arc},
                                    {2, 1, K::Arc},
                                    {1, 3, K::Arc},
                                    {3, 0, K::Arc}});
    case Named::TMinusA:
      return digraph_from_edges(4, {{0, 1, K::Digon}, {0, 2, K::Arc}, {2, 1, K::Arc}, {1, 3, K::Arc}, {3, 0, K::Arc}});
    case Named::TMinusB:
      return digraph_from_edges(4, {{0, 1, K::Digon}, {2, 3, K::Digon}, {0, 2, K::Arc}, {2, 1, K::Arc}, {3, 0, K::Arc}});
    case Named::K2:
      return digraph_from_edges(2, {{0, 1, K::Digon}});
    case Named::K2Prime:
      return digraph_from_edges(2, {{0, 1, K::Arc}});
  }
  throw std::invalid_argument("unknown named digraph");
}

Digraph oriented_c3(std::size_t a, std::size_t b, std::size_t c) {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("oriented_c3 needs nonempty parts");
  const std::size_t n = a + b + c;
  Digraph d(n);
  const std::size_t start[3] = {0, a, a + b};
  const std::size_t size[3] = {a, b, c};
  for (int p = 0; p < 3; ++p) {
    const int q = (p + 1) % 3;
    for (std::size_t x = start[p]; x < start[p] + size[p]; ++x) {
      for (std::size_t y = start[q]; y < start[q] + size[q]; ++y) d.set_state(x, y, PairState::ArcUV);
    }
  }
  return d;
}

bool c3_whds_predicate(unsigned long long a) {
  if (a == 0) throw std::invalid_argument("c3_whds_predicate needs a >= 1");
  for (unsigned long long p = 2; p * p <= a; ++p) {
    if (a % p != 0) continue;
    if (p % 6 == 1) return false;
    while (a % p == 0) a /= p;
  }
  return !(a > 1 && a % 6 == 1);
}

std::vector<BigInt> elementary_symmetric(const std::vector<std::size_t>& ts) {
  std::vector<BigInt> e(ts.size() + 1, BigInt(0));
  e[0] = 1;
  for (std::size_t t : ts) {
    for (std::size_t k = e.size() - 1; k >= 1; --k) e[k] += e[k - 1] * big(t);
  }
  return e;
}

CharPoly charpoly_te_kminus(const ExpansionVector& t) {
  require_arity(t, 4, "kminus");
  const auto e = elementary_symmetric(t.ts);
  return padded(t.total(), {BigInt(-3 * e[4]), BigInt(2 * e[3]), BigInt(-e[2]), BigInt(0)});
}

CharPoly charpoly_te_tminus(const ExpansionVector& t) {
  require_arity(t, 3, "tminus");
  const auto e = elementary_symmetric(t.ts);
  return cubic_family(t.total(), e[2], e[3]);
}

CharPoly charpoly_te_ta(const ExpansionVector& t) {
  require_arity(t, 4, "tminus-a");
  return charpoly_te_tminus(ExpansionVector(t.t0, {t.ts[0], t.ts[1], t.ts[2] + t.ts[3]}));
}

CharPoly charpoly_te_tb(const ExpansionVector& t) {
  require_arity(t, 4, "tminus-b");
  return charpoly_te_tminus(ExpansionVector(t.t0, {t.ts[0], t.ts[2], t.ts[1] + t.ts[3]}));
}

double ClosedForm::value() const {
  return rational.get_d() + coefficient.get_d() * std::sqrt(radicand.get_d());
}

Spectrum ExplicitSpectrum::spectrum() const {
  Spectrum s;
  for (const auto& e : eigenvalues) s.eigenvalues.insert(s.eigenvalues.end(), e.multiplicity, e.value());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<>());
  return s;
}

ExplicitSpectrum explicit_spectrum_cases(const ExpansionVector& t) {
  require_arity(t, 4, "kminus");
  std::map<std::size_t, std::size_t> count;
  for (std::size_t v : t.ts) ++count[v];
  const std::size_t zeros = t.total() - 4;
  ExplicitSpectrum out;
  std::vector<ClosedForm> xs;
  if (count.size() == 1) {
    const BigRational a(big(t.ts[0]));
    out.pattern = 1;
    xs = {rational_value(BigRational(-3 * a), 1), rational_value(a, 3)};
  } else if (count.size() == 2) {
    auto lo = count.begin();
    auto hi = std::next(lo);
    if (lo->second == 2) {
      const BigInt a = big(lo->first), b = big(hi->first);
      const BigRational half(1, 2);
      out.pattern = 3;
      xs = {rational_value(BigRational(a), 1), rational_value(BigRational(b), 1),
            surd(BigRational(-(a + b)) * half, half, BigInt(a * a + 14 * a * b + b * b)),
            surd(BigRational(-(a + b)) * half, -half, BigInt(a * a + 14 * a * b + b * b))};
    } else {
      if (lo->second == 1) std::swap(lo, hi);
      const BigInt a = big(lo->first), b = big(hi->first);
      out.pattern = 2;
      xs = {surd(BigRational(-a), BigRational(-1), BigInt(3 * a * b + a * a)),
            surd(BigRational(-a), BigRational(1), BigInt(3 * a * b + a * a)), rational_value(BigRational(a), 2)};
    }
  } else {
    throw PatternMismatch("block sizes " + to_string(t) + " fit no closed-form pattern");
  }
  xs.push_back(rational_value(BigRational(0), zeros));
  out.eigenvalues = merged(std::move(xs));
  return out;
}

KMinusCounts te_kminus_counts(const ExpansionVector& t) {
  require_arity(t, 4, "kminus");
  const auto e = elementary_symmetric(t.ts);
  return {big(t.total()), e[2], e[3]};
}

SwitchingMatrix kminus_block_exchange(const ExpansionVector& t) {
  require_arity(t, 4, "kminus");
  const Phase block_phase[4] = {Phase::MinusI, Phase::One, Phase::I, Phase::One};
  SwitchingMatrix s(t.t0, Phase::One);
  for (std::size_t b = 0; b < 4; ++b) s.insert(s.end(), t.ts[b], block_phase[b]);
  return s;
}

void validate_partition(const VertexPartition& p, std::size_t n) {
  std::vector<bool> seen(n, false);
  std::size_t covered = 0;
  for (const auto& block : p) {
    if (block.empty()) throw std::invalid_argument("partition has an empty block");
    for (Vertex v : block) {
      if (v >= n) throw std::invalid_argument("partition vertex out of range");
      if (seen[v]) throw std::invalid_argument("partition blocks overlap");
      seen[v] = true;
      ++covered;
    }
  }
  if (covered != n) throw std::invalid_argument("partition does not cover every vertex");
}

GaussianMatrix quotient_matrix(const HermitianMatrix& h, const VertexPartition& p) {
  validate_partition(p, h.size());
  const std::size_t k = p.size();
  GaussianMatrix q(k);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      std::optional<GaussianInt> first;
      Vertex first_row = 0;
      for (Vertex v : p[a]) {
        GaussianInt sum;
        for (Vertex w : p[b]) sum += h.entry(v, w);
        if (!first) {
          first = sum;
          first_row = v;
        } else if (!(sum == *first)) {
          throw NotEquitable(a, b, first_row, v);
        }
      }
      q(a, b) = *first;
    }
  }
  return q;
}

std::vector<std::pair<BigInt, std::size_t>> integer_eigenvalues(const CharPoly& p) { return integer_roots(p); }

}  // namespace hermia
