#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hermia/charpoly.hpp"
#include "hermia/digraph.hpp"
#include "hermia/spectra.hpp"
#include "hermia/twins.hpp"

namespace hermia {

struct CorpusEntry {
  Digraph digraph;   // rebuilt from the canonical form
  std::string form;  // canonical_form bytes
  CharPoly charpoly;
  Inertia inertia;
};

/// One representative per isomorphism class of order n, sorted by form.
struct DigraphCorpus {
  std::size_t order = 0;
  std::vector<CorpusEntry> entries;

  /// Entry whose form equals canonical_form(d), if present.
  const CorpusEntry* find(const Digraph& d) const;
};

/// Labelled digraph number `index` of order n: pair k (row-major) takes
/// state (index >> 2k) & 3.
Digraph labelled_digraph(std::size_t n, std::uint64_t index);
std::uint64_t labelled_count(std::size_t n);

/// All 4^{n(n-1)/2} labelled digraphs deduplicated by canonical form.
/// Throws std::invalid_argument for n > 5.
DigraphCorpus enumerate_digraphs(std::size_t n, unsigned parallelism = 1);

/// Sorted, deduplicated corpus of the given digraphs (one order only).
DigraphCorpus make_corpus(std::size_t n, std::vector<Digraph> ds);

/// Line-oriented corpus file: a header `order N count C`, then one line per
/// class with the hex form and the charpoly JSON separated by a tab.
void write_corpus(std::ostream& os, const DigraphCorpus& c);
/// Throws ParseError for malformed lines or a charpoly that does not match
/// the stored digraph.
DigraphCorpus read_corpus(std::istream& is, const std::string& source);

struct TriangleIdentityReport {
  std::size_t order = 0;
  std::uint64_t checked = 0;
  std::optional<Digraph> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

/// Checks Tr H^3 = 6(x1 + x2 + x3 - x4) on every labelled digraph of order n.
TriangleIdentityReport verify_triangle_identity(std::size_t n, unsigned parallelism = 1);

/// Reduced, rank > 2, exactly one negative eigenvalue.
bool is_one_negative_candidate(const Digraph& d, const CharPoly& p);

/// Corpus members satisfying is_one_negative_candidate.
std::vector<Digraph> classify_one_negative(const DigraphCorpus& corpus);
std::vector<Digraph> classify_one_negative(std::size_t n, unsigned parallelism = 1);

/// Every digraph obtained by adding one vertex, with any of the 4^n
/// attachment patterns, to some base of order n; kept when `keep` accepts
/// it, then deduplicated by canonical form.
std::vector<Digraph> extend_by_vertex(const std::vector<Digraph>& bases,
                                      const std::function<bool(const Digraph&, const CharPoly&)>& keep,
                                      unsigned parallelism = 1);

struct SweepReport {
  std::size_t bases = 0;
  std::uint64_t extensions = 0;
  std::vector<Digraph> found;
};

/// One-negative candidates at order n+1 from the order-n corpus. A digraph
/// with one negative eigenvalue has, by interlacing, at most one in every
/// vertex-deleted subdigraph, and only the empty digraph has none; so the
/// bases are the corpus members with n_neg = 1 and the empty digraph.
SweepReport sweep_one_negative(const DigraphCorpus& corpus, unsigned parallelism = 1);

/// Connected corpus members whose largest eigenvalue is exactly 1.
std::vector<Digraph> verify_lambda_max_one(const DigraphCorpus& corpus);

struct TrCase {
  Digraph digraph;
  Inertia inertia;
  std::optional<Digraph> reduction;  // set for rank 3 or 4 with n_neg = 1
  bool holds = true;
};

struct TrReport {
  std::vector<TrCase> cases;
  std::size_t examined = 0;  // samples with n_neg = 1 and rank 3 or 4

  bool passed() const;
};

/// For samples with one negative eigenvalue: rank 3 implies TR(D) is one of
/// T-, T-_a, T-_b; rank 4 implies TR(D) = K-.
TrReport verify_tr_theorem(const std::vector<Digraph>& samples);

struct ShdsReport {
  std::size_t universe = 0;    // classes of D's order examined
  std::size_t cospectral = 0;  // including D's own class
  std::vector<Digraph> mates;  // cospectral, not isomorphic to D

  bool strongly_determined() const { return mates.empty(); }
};

/// Cospectral mates of D among all digraphs of its order. Order <= 5 scans
/// the corpus (built on demand when none is given). Order 6 extends the
/// order-5 classes whose spectrum interlaces D's, keeping only extensions
/// with D's edge count and characteristic polynomial. Throws
/// std::invalid_argument beyond order 6.
ShdsReport shds_check(const Digraph& d, unsigned parallelism = 1, const DigraphCorpus* corpus = nullptr);

struct CollisionMember {
  ExpansionVector t;         // padded with isolated vertices to the common order
  std::size_t digons = 0;    // digon count of the expansion
};

/// Block-size multisets sharing one nonzero characteristic polynomial.
struct CollisionReport {
  std::vector<BigInt> key;               // (e2, e3, e4) for K-, (e2, e3) for T-
  std::vector<CollisionMember> members;  // by decreasing total block size
  CharPoly nonzero_part;                 // charpoly with the zero root removed
  std::size_t order = 0;                 // common order after padding

  /// Members pairwise differ in isolated-vertex count, which rules out both
  /// isomorphism and switching equivalence.
  bool isolated_counts_differ() const;
};

struct CollisionOptions {
  unsigned parallelism = 1;
  std::size_t buckets = 16;
  /// Completed buckets are appended here and skipped on restart.
  std::string checkpoint;
};

/// All monotone 0 < t1 <= t2 <= t3 <= t4 <= bound, grouped by (e2, e3, e4);
/// groups of two or more are reported, sorted by order then key. The
/// vectors are scanned once per hash bucket so memory stays bounded.
std::vector<CollisionReport> expansion_collision_search(std::size_t bound, const CollisionOptions& opts = {});

/// Same over monotone 3-vectors for TE(T-, .), keyed by (e2, e3).
std::vector<CollisionReport> tminus_collision_search(std::size_t bound, const CollisionOptions& opts = {});

}  // namespace hermia
