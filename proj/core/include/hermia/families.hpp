#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hermia/charpoly.hpp"
#include "hermia/digraph.hpp"
#include "hermia/hermitian.hpp"
#include "hermia/spectra.hpp"
#include "hermia/switching.hpp"
#include "hermia/twins.hpp"

namespace hermia {

enum class Named { TMinus, KMinus, TMinusA, TMinusB, K2, K2Prime };

/// Names accepted: tminus, kminus, tminus-a, tminus-b, k2, k2prime.
Named parse_named(const std::string& name);
std::string to_string(Named n);

/// Labelled as in the figures, north vertex first then counterclockwise:
///   T-   : digon 0-1, arcs 0->2, 2->1
///   K-   : digons 0-1 and 2-3, arcs 0->2, 2->1, 1->3, 3->0
///   T-_a : digon 0-1, arcs 0->2, 2->1, 1->3, 3->0
///   T-_b : digons 0-1 and 2-3, arcs 0->2, 2->1, 3->0
///   K2   : one digon;  K2' : the arc 0->1
Digraph make_named(Named n);

/// Complete tripartite digraph with parts of sizes a, b, c (labelled in this
/// order) and all arcs A->B, B->C, C->A. Throws std::invalid_argument if a
/// part is empty.
Digraph oriented_c3(std::size_t a, std::size_t b, std::size_t c);

/// True iff no prime p = 1 (mod 6) divides a. Trial division; a >= 1.
bool c3_whds_predicate(unsigned long long a);

/// Closed forms for the characteristic polynomials of expansions. Each
/// throws ArityMismatch unless t has the base digraph's order.
CharPoly charpoly_te_kminus(const ExpansionVector& t);
CharPoly charpoly_te_tminus(const ExpansionVector& t);
CharPoly charpoly_te_ta(const ExpansionVector& t);
CharPoly charpoly_te_tb(const ExpansionVector& t);

/// Elementary symmetric polynomials e_1..e_k of the block sizes.
std::vector<BigInt> elementary_symmetric(const std::vector<std::size_t>& ts);

/// rational + coefficient * sqrt(radicand), with the radicand not a square.
struct ClosedForm {
  BigRational rational;
  BigRational coefficient;
  BigInt radicand;
  std::size_t multiplicity = 1;

  double value() const;
};

struct ExplicitSpectrum {
  int pattern = 0;  // 1, 2 or 3 for the three block-size patterns
  std::vector<ClosedForm> eigenvalues;  // includes the zero eigenvalue

  Spectrum spectrum() const;
};

/// Spectrum of TE(K-, t) in closed form when the block sizes, as a
/// multiset, are {a,a,a,a}, {a,a,a,b} or {a,a,b,b}; the most specific
/// pattern wins. Throws PatternMismatch otherwise.
ExplicitSpectrum explicit_spectrum_cases(const ExpansionVector& t);

struct KMinusCounts {
  BigInt order;
  BigInt edges;
  BigInt negative_triangles;

  friend bool operator==(const KMinusCounts&, const KMinusCounts&) = default;
};

/// Order, underlying edge count and number of induced negative triangles
/// of TE(K-, t), from symmetric functions of t.
KMinusCounts te_kminus_counts(const ExpansionVector& t);

/// Diagonal switching that exchanges expansion blocks 1 and 3 of TE(K-, t):
/// phases -i, 1, i, 1 on blocks 1..4 and 1 on the isolated block.
SwitchingMatrix kminus_block_exchange(const ExpansionVector& t);

/// Ordered, disjoint blocks covering 0..n-1.
using VertexPartition = std::vector<std::vector<Vertex>>;

/// Throws std::invalid_argument unless the blocks are disjoint, nonempty
/// and cover 0..n-1.
void validate_partition(const VertexPartition& p, std::size_t n);

/// Block row sums Q[a][b] = sum_{w in B} H(v, w) for v in block a. Throws
/// NotEquitable if some block of H has non-constant row sums.
GaussianMatrix quotient_matrix(const HermitianMatrix& h, const VertexPartition& p);

/// Integer roots of a characteristic polynomial with their multiplicities.
/// A root shared with some block size says nothing about block sizes.
std::vector<std::pair<BigInt, std::size_t>> integer_eigenvalues(const CharPoly& p);

}  // namespace hermia
