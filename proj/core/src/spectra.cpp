#include "hermia/spectra.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "hermia/detail/checked_int.hpp"
#include "hermia/errors.hpp"
#include "hermia/isomorphism.hpp"

namespace hermia {
namespace {

using detail::CheckedInt;
using detail::Overflow;

BigInt to_big(const BigInt& x) { return x; }
BigInt to_big(CheckedInt x) { return BigInt(static_cast<long>(x.value())); }

bool divisible(const BigInt& x, long k) { return mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(k)) != 0; }
bool divisible(CheckedInt x, long k) { return x.value() % k == 0; }
BigInt exact_div(const BigInt& x, long k) { return x / k; }
CheckedInt exact_div(CheckedInt x, long k) { return CheckedInt(x.value() / k); }

template <typename Int>
using Mat = std::vector<BasicGaussian<Int>>;

/// Row-sparse view of a matrix with unit entries: `A * M` only rotates and
/// adds rows of M.
struct UnitRows {
  std::size_t n;
  std::vector<std::vector<std::pair<std::size_t, Unit>>> rows;

  explicit UnitRows(const HermitianMatrix& h) : n(h.size()), rows(h.size()) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if (h.unit(r, c) != Unit::Zero) rows[r].emplace_back(c, h.unit(r, c));
      }
    }
  }

  template <typename Int>
  void multiply(const Mat<Int>& m, Mat<Int>& out) const {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Int re(0), im(0);
        for (const auto& [j, u] : rows[r]) {
          const auto& x = m[j * n + c];
          switch (u) {
            case Unit::One:
              re += x.re;
              im += x.im;
              break;
            case Unit::I:  // i * (a + bi) = -b + ai
              re -= x.im;
              im += x.re;
              break;
            case Unit::MinusI:
              re += x.im;
              im -= x.re;
              break;
            case Unit::Zero:
              break;
          }
        }
        out[r * n + c] = {std::move(re), std::move(im)};
      }
    }
  }
};

template <typename Int>
struct DenseRows {
  std::size_t n;
  Mat<Int> a;

  explicit DenseRows(const GaussianMatrix& g) : n(g.size()), a(g.size() * g.size()) {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        if constexpr (std::is_same_v<Int, BigInt>) {
          a[r * n + c] = g(r, c);
        } else {
          if (!g(r, c).re.fits_slong_p() || !g(r, c).im.fits_slong_p()) throw Overflow{};
          a[r * n + c] = {CheckedInt(g(r, c).re.get_si()), CheckedInt(g(r, c).im.get_si())};
        }
      }
    }
  }

  void multiply(const Mat<Int>& m, Mat<Int>& out) const {
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        BasicGaussian<Int> acc;
        for (std::size_t j = 0; j < n; ++j) {
          if (!a[r * n + j].is_zero()) acc += a[r * n + j] * m[j * n + c];
        }
        out[r * n + c] = std::move(acc);
      }
    }
  }
};

/// Faddeev-LeVerrier: M_1 = I; c_{n-k} = -tr(A M_k)/k; M_{k+1} = A M_k + c_{n-k} I.
template <typename Int, typename Mul>
CharPoly faddeev_leverrier(std::size_t n, const Mul& mul) {
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  coeffs[n] = 1;
  Mat<Int> m(n * n), am(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = BasicGaussian<Int>(Int(1), Int(0));
  for (std::size_t k = 1; k <= n; ++k) {
    mul.multiply(m, am);
    BasicGaussian<Int> tr;
    for (std::size_t i = 0; i < n; ++i) tr += am[i * n + i];
    const long step = static_cast<long>(k);
    if (!divisible(tr.re, step) || !divisible(tr.im, step)) {
      throw InternalInconsistency("trace not divisible by " + std::to_string(k) +
                                  " in Faddeev-LeVerrier step");
    }
    const BasicGaussian<Int> c(-exact_div(tr.re, step), -exact_div(tr.im, step));
    if (!c.is_real()) {
      throw InternalInconsistency("characteristic coefficient of degree " + std::to_string(n - k) +
                                  " is not real");
    }
    coeffs[n - k] = to_big(c.re);
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) am[i * n + i] += c;
    std::swap(m, am);
  }
  return CharPoly(std::move(coeffs));
}

template <typename Int>
Mat<Int> unit_power(const HermitianMatrix& h, unsigned k) {
  const std::size_t n = h.size();
  const UnitRows rows(h);
  Mat<Int> m(n * n), next(n * n);
  for (std::size_t i = 0; i < n; ++i) m[i * n + i] = BasicGaussian<Int>(Int(1), Int(0));
  for (unsigned e = 0; e < k; ++e) {
    rows.multiply(m, next);
    std::swap(m, next);
  }
  return m;
}

/// Class (1..4) of the order-3 digraph with pair states s01, s02, s12, or 0.
const std::array<std::uint8_t, 64>& triangle_table() {
  static const std::array<std::uint8_t, 64> table = [] {
    const Digraph templates[4] = {
        digraph_from_edges(3, {{0, 1, EdgeKind::Digon}, {0, 2, EdgeKind::Arc}, {1, 2, EdgeKind::Arc}}),
        digraph_from_edges(3, {{0, 1, EdgeKind::Digon}, {2, 0, EdgeKind::Arc}, {2, 1, EdgeKind::Arc}}),
        digraph_from_edges(3, {{0, 1, EdgeKind::Digon}, {0, 2, EdgeKind::Digon}, {1, 2, EdgeKind::Digon}}),
        digraph_from_edges(3, {{0, 1, EdgeKind::Digon}, {0, 2, EdgeKind::Arc}, {2, 1, EdgeKind::Arc}}),
    };
    std::string forms[4];
    for (int t = 0; t < 4; ++t) forms[t] = canonical_form(templates[t]);
    std::array<std::uint8_t, 64> out{};
    for (unsigned code = 0; code < 64; ++code) {
      Digraph d(3);
      d.set_state(0, 1, static_cast<PairState>(code & 3));
      d.set_state(0, 2, static_cast<PairState>((code >> 2) & 3));
      d.set_state(1, 2, static_cast<PairState>((code >> 4) & 3));
      const std::string f = canonical_form(d);
      for (int t = 0; t < 4; ++t) {
        if (f == forms[t]) out[code] = static_cast<std::uint8_t>(t + 1);
      }
    }
    return out;
  }();
  return table;
}

}  // namespace

std::vector<std::pair<double, std::size_t>> Spectrum::grouped() const {
  std::vector<std::pair<double, std::size_t>> out;
  for (double x : eigenvalues) {
    if (!out.empty()) {
      const double ref = out.back().first;
      if (std::abs(x - ref) <= kGroupingTolerance * std::max(1.0, std::abs(ref))) {
        ++out.back().second;
        continue;
      }
    }
    out.emplace_back(x, 1);
  }
  return out;
}

Inertia Spectrum::sign_pattern() const {
  Inertia in;
  for (double x : eigenvalues) {
    if (x > kGroupingTolerance) {
      ++in.n_pos;
    } else if (x < -kGroupingTolerance) {
      ++in.n_neg;
    } else {
      ++in.n_zero;
    }
  }
  return in;
}

CharPoly char_poly(const HermitianMatrix& h) {
  const UnitRows rows(h);
  try {
    return faddeev_leverrier<CheckedInt>(h.size(), rows);
  } catch (const Overflow&) {
    return faddeev_leverrier<BigInt>(h.size(), rows);
  }
}

CharPoly char_poly(const GaussianMatrix& m) {
  try {
    const DenseRows<CheckedInt> rows(m);
    return faddeev_leverrier<CheckedInt>(m.size(), rows);
  } catch (const Overflow&) {
    const DenseRows<BigInt> rows(m);
    return faddeev_leverrier<BigInt>(m.size(), rows);
  }
}

Inertia inertia(const CharPoly& p) {
  Inertia in;
  in.n_zero = p.zero_valuation();
  std::vector<BigInt> c(p.coefficients().begin() + static_cast<std::ptrdiff_t>(in.n_zero),
                        p.coefficients().end());
  in.n_pos = sign_changes(c);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 2) c[k] = -c[k];
  }
  in.n_neg = sign_changes(c);
  if (in.order() != p.degree()) {
    throw InternalInconsistency("Descartes counts do not sum to the degree; polynomial is not real-rooted");
  }
  return in;
}

std::size_t rank(const HermitianMatrix& h) { return inertia(h).rank(); }

BigInt trace_power(const HermitianMatrix& h, unsigned k) {
  const std::size_t n = h.size();
  auto trace_of = [n](const auto& m) {
    using G = std::decay_t<decltype(m[0])>;
    G tr;
    for (std::size_t i = 0; i < n; ++i) tr += m[i * n + i];
    if (!tr.is_real()) throw InternalInconsistency("trace of a Hermitian power is not real");
    return to_big(tr.re);
  };
  if (k == 0) return BigInt(static_cast<unsigned long>(n));
  try {
    return trace_of(unit_power<CheckedInt>(h, k));
  } catch (const Overflow&) {
    return trace_of(unit_power<BigInt>(h, k));
  }
}

TriangleBalance triangle_balance(const Digraph& d) {
  const auto& table = triangle_table();
  TriangleBalance tb;
  const std::size_t n = d.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const auto sab = static_cast<unsigned>(d.state(a, b));
      for (Vertex c = b + 1; c < n; ++c) {
        const unsigned code = sab | static_cast<unsigned>(d.state(a, c)) << 2 |
                              static_cast<unsigned>(d.state(b, c)) << 4;
        switch (table[code]) {
          case 1:
            ++tb.x1;
            break;
          case 2:
            ++tb.x2;
            break;
          case 3:
            ++tb.x3;
            break;
          case 4:
            ++tb.x4;
            break;
          default:
            break;
        }
      }
    }
  }
  return tb;
}

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, int max_sweeps) {
  auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };
  double total = 0;
  for (double x : a) total += x * x;
  for (int sweep = 0;; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) off += at(p, q) * at(p, q);
    }
    if (off <= 1e-30 * std::max(total, 1.0)) break;
    if (sweep == max_sweeps) throw NonConvergence("Jacobi iteration did not converge");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        at(p, q) = at(q, p) = 0.0;
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

Spectrum eigenvalues(const HermitianMatrix& h) {
  const std::size_t n = h.size();
  const std::size_t m = 2 * n;
  std::vector<double> a(m * m, 0.0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      double re = 0, im = 0;
      switch (h.unit(r, c)) {
        case Unit::One:
          re = 1;
          break;
        case Unit::I:
          im = 1;
          break;
        case Unit::MinusI:
          im = -1;
          break;
        case Unit::Zero:
          break;
      }
      a[r * m + c] = re;
      a[r * m + (n + c)] = -im;
      a[(n + r) * m + c] = im;
      a[(n + r) * m + (n + c)] = re;
    }
  }
  const auto doubled = jacobi_eigenvalues(std::move(a), m);
  Spectrum s;
  for (std::size_t i = 0; i < m; i += 2) s.eigenvalues.push_back(0.5 * (doubled[i] + doubled[i + 1]));
  std::sort(s.eigenvalues.rbegin(), s.eigenvalues.rend());
  return s;
}

bool cospectral(const Digraph& d1, const Digraph& d2) {
  if (d1.order() != d2.order()) return false;
  return char_poly(d1) == char_poly(d2);
}

double spectral_radius(const Digraph& d) {
  double r = 0;
  for (double x : eigenvalues(hermitian(d)).eigenvalues) r = std::max(r, std::abs(x));
  return r;
}

bool largest_eigenvalue_is(const CharPoly& p, const BigInt& value) {
  return p.evaluate(value) == 0 && roots_above(p, value) == 0;
}

bool interlacing_holds(const HermitianMatrix& h, const std::vector<std::size_t>& w) {
  std::vector<std::size_t> rows = w;
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  const auto lambda = eigenvalues(h).eigenvalues;
  const auto mu = eigenvalues(h.principal(rows)).eigenvalues;
  const std::size_t n = lambda.size(), m = mu.size();
  constexpr double slack = 1e-9;
  for (std::size_t i = 0; i < m; ++i) {
    if (lambda[i] < mu[i] - slack) return false;
    if (mu[i] < lambda[n - m + i] - slack) return false;
  }
  return true;
}

}  // namespace hermia
