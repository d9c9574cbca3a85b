#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hermia/digraph.hpp"
#include "hermia/isomorphism.hpp"

namespace hermia {

/// A diagonal entry of a switching matrix.
enum class Phase : std::uint8_t { One = 0, I = 1, MinusOne = 2, MinusI = 3 };

/// Diagonal switching matrix S = Diag(phases).
using SwitchingMatrix = std::vector<Phase>;

std::string to_string(Phase p);
Phase parse_phase(const std::string& s);

/// H(D') = S^-1 H(D) S. Throws NotAppropriate if any entry becomes -1 and
/// SizeMismatch if |S| != order.
Digraph apply_switching(const Digraph& d, const SwitchingMatrix& s);

/// Witness that D2 is a four-way switching of pi(D1) or of pi(D1^T):
///   H(D2)[pi u, pi v] = conj(s_u) * H'(u, v) * s_v,  H' = H(D1) or H(D1)^T,
/// with `phases` indexed by vertices of D1.
struct EquivalenceWitness {
  Permutation permutation;
  SwitchingMatrix phases;
  bool conversed = false;
};

/// Checks a witness by replaying it entry by entry.
bool verify_witness(const Digraph& d1, const Digraph& d2, const EquivalenceWitness& w);

enum class SwitchingMode {
  /// Vertex labels are fixed: bare four-way switching plus optional converse.
  Labeled,
  /// Additionally allow any relabelling (the reading used for WHDS).
  UpToIsomorphism,
};

struct SwitchingOptions {
  SwitchingMode mode = SwitchingMode::UpToIsomorphism;
  /// Search nodes allowed before Timeout is thrown.
  std::size_t node_budget = 50'000'000;
};

/// Searches for an EquivalenceWitness. The first vertex of each connected
/// component is fixed to phase 1; the remaining phases are forced along a
/// breadth-first order, and relabellings are drawn from vertices of equal
/// underlying degree. Runs the search on D1 and then on D1^T. Returns
/// nullopt when none exists, throws Timeout past the node budget.
std::optional<EquivalenceWitness> switching_equivalent(const Digraph& d1, const Digraph& d2,
                                                       const SwitchingOptions& opts = {});

struct WhdsEntry {
  std::size_t candidate_index;
  std::optional<EquivalenceWitness> witness;  // absent: cospectral but not equivalent
};

struct WhdsReport {
  std::size_t candidates = 0;
  std::size_t cospectral = 0;
  std::vector<WhdsEntry> entries;  // one per cospectral candidate

  /// Every cospectral candidate is switching equivalent.
  bool passed() const;
};

/// Tests D against every cospectral member of `candidates`.
WhdsReport whds_over(const Digraph& d, const std::vector<Digraph>& candidates, const SwitchingOptions& opts = {});

}  // namespace hermia
