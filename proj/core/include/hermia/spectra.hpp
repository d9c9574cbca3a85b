#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "hermia/charpoly.hpp"
#include "hermia/digraph.hpp"
#include "hermia/hermitian.hpp"

namespace hermia {

struct Inertia {
  std::size_t n_pos = 0;
  std::size_t n_neg = 0;
  std::size_t n_zero = 0;

  std::size_t order() const { return n_pos + n_neg + n_zero; }
  std::size_t rank() const { return n_pos + n_neg; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Floating-point eigenvalues, sorted descending.
struct Spectrum {
  static constexpr double kGroupingTolerance = 1e-9;

  std::vector<double> eigenvalues;

  /// Distinct values with multiplicities, grouped at relative tolerance
  /// kGroupingTolerance; descending.
  std::vector<std::pair<double, std::size_t>> grouped() const;
  /// Sign counts at the grouping tolerance.
  Inertia sign_pattern() const;
};

/// Induced copies of the four order-3 digraphs that contribute to Tr H^3:
/// x1: digon {a,b}, arcs a->c and b->c;  x2: digon {a,b}, arcs c->a, c->b;
/// x3: three digons;                      x4: negative triangle.
struct TriangleBalance {
  std::size_t x1 = 0, x2 = 0, x3 = 0, x4 = 0;

  /// 6(x1 + x2 + x3 - x4), which equals Tr H^3.
  long long trace_cube() const {
    return 6 * (static_cast<long long>(x1 + x2 + x3) - static_cast<long long>(x4));
  }
  friend bool operator==(const TriangleBalance&, const TriangleBalance&) = default;
};

/// det(mu I - H) by the Faddeev-LeVerrier recurrence over Gaussian
/// integers. Runs in checked 64-bit arithmetic and falls back to GMP on
/// overflow. Throws InternalInconsistency if a coefficient has a nonzero
/// imaginary part or a trace is not divisible by its step index.
CharPoly char_poly(const HermitianMatrix& h);
/// Same recurrence for an arbitrary Gaussian matrix whose characteristic
/// polynomial is real (quotient matrices of equitable partitions).
CharPoly char_poly(const GaussianMatrix& m);
inline CharPoly char_poly(const Digraph& d) { return char_poly(hermitian(d)); }

/// Exact inertia by Descartes' rule on the characteristic polynomial.
Inertia inertia(const CharPoly& p);
inline Inertia inertia(const HermitianMatrix& h) { return inertia(char_poly(h)); }

std::size_t rank(const HermitianMatrix& h);

/// Tr H^k computed by exact matrix powers. Throws InternalInconsistency if
/// the trace is not real.
BigInt trace_power(const HermitianMatrix& h, unsigned k);

TriangleBalance triangle_balance(const Digraph& d);

/// Eigenvalues from cyclic Jacobi on the real symmetric embedding
/// [[Re H, -Im H], [Im H, Re H]], whose spectrum is that of H doubled.
/// Throws NonConvergence if the sweep budget is exhausted.
Spectrum eigenvalues(const HermitianMatrix& h);

/// Symmetric Jacobi eigenvalues of a dense row-major real matrix, ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n, int max_sweeps = 100);

/// Exact equality of characteristic polynomials; false for unequal orders.
bool cospectral(const Digraph& d1, const Digraph& d2);

double spectral_radius(const Digraph& d);

/// Largest eigenvalue, decided exactly: true iff it equals `value`.
bool largest_eigenvalue_is(const CharPoly& p, const BigInt& value);

/// Cauchy interlacing for the principal submatrix on W, at 1e-9 slack.
bool interlacing_holds(const HermitianMatrix& h, const std::vector<std::size_t>& w);

}  // namespace hermia
