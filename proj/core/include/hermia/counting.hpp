#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hermia/gaussian.hpp"

namespace hermia {

/// A conjugacy class of the symmetric group: cycle lengths in
/// non-increasing order, with class size n! / prod(l^k_l * k_l!).
struct CycleType {
  std::vector<std::size_t> parts;
  BigInt weight;
};

/// All cycle types of S_n, partitions in reverse lexicographic order.
std::vector<CycleType> cycle_types(std::size_t n);

/// Number of digraphs on n unlabelled vertices (no loops), by Burnside over
/// the action of S_n on ordered pairs. Throws InternalInconsistency if the
/// orbit sum is not divisible by n!.
BigInt count_digraphs(std::size_t n, unsigned parallelism = 1);

/// Number of self-converse digraphs on n unlabelled vertices.
///
/// Let G = S_n x {1, conv} act on arc sets, conv reversing every arc. An
/// isomorphism class is self-converse iff it is a single G-orbit, else it
/// merges with its converse class. Burnside over G gives
///   2 |G-orbits| = D_n + (1/n!) sum_pi |Fix(pi o conv)|,
/// and |G-orbits| = (D_n + SC_n) / 2, so SC_n = (1/n!) sum_pi |Fix(pi o conv)|.
/// pi o conv fixes an arc set iff the set is a union of cycles of
/// (u,v) -> (pi v, pi u) on ordered pairs.
BigInt count_self_converse(std::size_t n, unsigned parallelism = 1);

/// SC_n / D_n, reduced exactly.
BigRational self_converse_ratio(std::size_t n, unsigned parallelism = 1);
double self_converse_fraction(std::size_t n, unsigned parallelism = 1);

enum class SigDigits { Truncate, RoundHalfUp };

/// Scientific notation with three significant digits taken from the exact
/// value: 5/8 -> "6.25e-1". Truncation keeps the leading digits as they
/// are (708/9608 -> "7.36e-2"); rounding gives "7.37e-2". q > 0.
std::string format_sig3(const BigRational& q, SigDigits mode = SigDigits::Truncate);

}  // namespace hermia
