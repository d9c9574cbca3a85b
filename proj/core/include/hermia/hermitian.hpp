#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hermia/digraph.hpp"
#include "hermia/gaussian.hpp"

namespace hermia {

/// An entry of a Hermitian adjacency matrix: 0, 1, i or -i.
enum class Unit : std::int8_t { Zero = 0, One = 1, I = 2, MinusI = 3 };

constexpr Unit conj(Unit u) {
  return u == Unit::I ? Unit::MinusI : u == Unit::MinusI ? Unit::I : u;
}

GaussianInt to_gaussian(Unit u);

/// Dense square matrix over the Gaussian integers.
class GaussianMatrix {
 public:
  GaussianMatrix() = default;
  explicit GaussianMatrix(std::size_t n) : n_(n), a_(n * n) {}

  std::size_t size() const { return n_; }
  const GaussianInt& operator()(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  GaussianInt& operator()(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }

  friend bool operator==(const GaussianMatrix&, const GaussianMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<GaussianInt> a_;
};

/// Hermitian adjacency matrix of a digraph: zero diagonal, off-diagonal
/// entries in {0, 1, i, -i}, entry(v,u) = conj(entry(u,v)).
///
/// The alphabet is enforced by storing one Unit per entry; `entry()` exposes
/// the value as a Gaussian integer.
class HermitianMatrix {
 public:
  HermitianMatrix() = default;

  std::size_t size() const { return n_; }
  Unit unit(std::size_t r, std::size_t c) const { return u_[r * n_ + c]; }
  GaussianInt entry(std::size_t r, std::size_t c) const { return to_gaussian(unit(r, c)); }

  /// Entrywise transpose; equals the Hermitian of the converse.
  HermitianMatrix transpose() const;
  GaussianMatrix to_gaussian_matrix() const;

  /// Principal submatrix on the given rows/columns, in the given order.
  HermitianMatrix principal(const std::vector<std::size_t>& rows) const;

  /// Validates a Gaussian matrix against the Hermitian alphabet and
  /// conjugate symmetry; throws std::invalid_argument otherwise.
  static HermitianMatrix from_gaussian(const GaussianMatrix& m);

  friend bool operator==(const HermitianMatrix&, const HermitianMatrix&) = default;

 private:
  friend HermitianMatrix hermitian(const Digraph& d);
  std::size_t n_ = 0;
  std::vector<Unit> u_;
};

HermitianMatrix hermitian(const Digraph& d);

/// Inverse of `hermitian`.
Digraph digraph_of(const HermitianMatrix& h);

}  // namespace hermia
