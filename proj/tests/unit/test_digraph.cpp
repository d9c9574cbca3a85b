#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "hermia/digraph.hpp"
#include "hermia/digraph_io.hpp"
#include "hermia/errors.hpp"
#include "hermia/families.hpp"
#include "hermia/hermitian.hpp"
#include "hermia/isomorphism.hpp"
#include "oracles.hpp"

using namespace hermia;

namespace {

GaussianInt gi(long re, long im) { return GaussianInt{BigInt(re), BigInt(im)}; }

}  // namespace

TEST(Digraph, EdgesBuildPairStates) {
  const Digraph d = digraph_from_edges(3, {{0, 1, EdgeKind::Digon}, {2, 0, EdgeKind::Arc}});
  EXPECT_EQ(d.state(0, 1), PairState::Digon);
  EXPECT_EQ(d.state(1, 0), PairState::Digon);
  EXPECT_EQ(d.state(2, 0), PairState::ArcUV);
  EXPECT_EQ(d.state(0, 2), PairState::ArcVU);
  EXPECT_TRUE(d.has_arc(2, 0));
  EXPECT_FALSE(d.has_arc(0, 2));
  EXPECT_EQ(digon_count(d), 1u);
  EXPECT_EQ(arc_count(d), 1u);
  EXPECT_EQ(edge_count_underlying(d), 2u);
}

TEST(Digraph, OppositeArcsMergeIntoDigon) {
  const Digraph d = digraph_from_edges(2, {{0, 1, EdgeKind::Arc}, {1, 0, EdgeKind::Arc}});
  EXPECT_EQ(d.state(0, 1), PairState::Digon);
}

TEST(Digraph, RejectsLoopsConflictsAndBadLabels) {
  EXPECT_THROW(digraph_from_edges(2, {{1, 1, EdgeKind::Arc}}), LoopRejected);
  EXPECT_THROW(digraph_from_edges(2, {{0, 1, EdgeKind::Digon}, {0, 1, EdgeKind::Arc}}), Conflict);
  EXPECT_THROW(digraph_from_edges(2, {{0, 2, EdgeKind::Arc}}), std::out_of_range);
  Digraph d(3);
  EXPECT_THROW(d.set_state(1, 1, PairState::Digon), LoopRejected);
}

TEST(Digraph, ConverseReversesArcsOnly) {
  const Digraph t = make_named(Named::TMinus);
  const Digraph c = converse(t);
  EXPECT_TRUE(c.has_arc(2, 0));
  EXPECT_TRUE(c.has_arc(1, 2));
  EXPECT_EQ(c.state(0, 1), PairState::Digon);
  EXPECT_EQ(converse(c), t);
}

TEST(Digraph, InducedSubdigraphAndComponents) {
  const Digraph k = make_named(Named::KMinus);
  const std::vector<Vertex> w = {0, 1, 2};
  const Digraph sub = induced_subdigraph(k, w);
  EXPECT_EQ(sub, make_named(Named::TMinus));
  const Digraph two = disjoint_union(make_named(Named::K2), make_named(Named::TMinus));
  EXPECT_EQ(two.order(), 5u);
  EXPECT_EQ(connected_components(two).size(), 2u);
  EXPECT_FALSE(is_connected(two));
  EXPECT_FALSE(has_isolated_vertex(two));
  EXPECT_TRUE(has_isolated_vertex(Digraph(1)));
}

TEST(Digraph, UnderlyingGraphTurnsArcsIntoDigons) {
  const Digraph g = underlying_graph(make_named(Named::TMinus));
  EXPECT_EQ(digon_count(g), 3u);
  EXPECT_EQ(arc_count(g), 0u);
}

TEST(Hermitian, NegativeTriangleMatchesPrintedMatrix) {
  const HermitianMatrix h = hermitian(make_named(Named::TMinus));
  const GaussianInt expect[3][3] = {{gi(0, 0), gi(1, 0), gi(0, 1)},
                                    {gi(1, 0), gi(0, 0), gi(0, -1)},
                                    {gi(0, -1), gi(0, 1), gi(0, 0)}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) EXPECT_EQ(h.entry(r, c), expect[r][c]) << r << "," << c;
  }
}

TEST(Hermitian, AgreesWithOracleAndIsConjugateSymmetric) {
  std::mt19937_64 rng(11);
  for (int s = 0; s < 200; ++s) {
    const Digraph d = oracle::random_digraph(1 + s % 8, rng);
    const HermitianMatrix h = hermitian(d);
    for (Vertex u = 0; u < d.order(); ++u) {
      for (Vertex v = 0; v < d.order(); ++v) {
        const auto o = oracle::entry(d, u, v);
        EXPECT_EQ(h.entry(u, v), gi(o.re, o.im));
        EXPECT_EQ(h.entry(v, u), h.entry(u, v).conj());
      }
    }
    EXPECT_EQ(h.transpose(), hermitian(converse(d)));
    EXPECT_EQ(digraph_of(h), d);
    EXPECT_EQ(HermitianMatrix::from_gaussian(h.to_gaussian_matrix()), h);
  }
}

TEST(Hermitian, FromGaussianValidatesAlphabetAndSymmetry) {
  GaussianMatrix m(2);
  m(0, 1) = gi(0, 1);
  m(1, 0) = gi(0, 1);
  EXPECT_THROW(HermitianMatrix::from_gaussian(m), std::invalid_argument);
  m(1, 0) = gi(0, -1);
  EXPECT_NO_THROW(HermitianMatrix::from_gaussian(m));
  m(0, 1) = gi(2, 0);
  m(1, 0) = gi(2, 0);
  EXPECT_THROW(HermitianMatrix::from_gaussian(m), std::invalid_argument);
}

TEST(DigraphIo, RoundTripsRandomDigraphs) {
  std::mt19937_64 rng(5);
  for (int s = 0; s < 100; ++s) {
    const Digraph d = oracle::random_digraph(s % 9, rng);
    EXPECT_EQ(parse_digraph(format_digraph(d)), d);
    EXPECT_EQ(digraph_from_json(digraph_to_json(d)), d);
  }
}

TEST(DigraphIo, ParsesCommentsAndBlankLines) {
  const Digraph d = parse_digraph("# tminus\n\nn 3\n0 1 d  # digon\n0 2 a\n2 1 a\n");
  EXPECT_EQ(d, make_named(Named::TMinus));
}

TEST(DigraphIo, ErrorsNameSourceLineAndToken) {
  try {
    parse_digraph("n 3\n0 1 d\n0 1 a\n", "bad.dg");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.source(), "bad.dg");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.token(), "a");
  }
  auto fails_at = [](const std::string& text, std::size_t line, const std::string& token) {
    try {
      parse_digraph(text, "t");
    } catch (const ParseError& e) {
      return e.line() == line && e.token() == token;
    }
    return false;
  };
  EXPECT_TRUE(fails_at("0 1 a\n", 1, "0"));
  EXPECT_TRUE(fails_at("n 2\n0 2 a\n", 2, "2"));
  EXPECT_TRUE(fails_at("n 2\n1 1 d\n", 2, "1"));
  EXPECT_TRUE(fails_at("n 2\n0 1 x\n", 2, "x"));
  EXPECT_TRUE(fails_at("n two\n", 1, "two"));
  EXPECT_TRUE(fails_at("", 0, "<eof>"));
}

TEST(Isomorphism, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int s = 0; s < 300; ++s) {
    const std::size_t n = 1 + s % 6;
    const Digraph a = oracle::random_digraph(n, rng);
    // Relabelled copies for positives, independent draws for (mostly) negatives.
    Digraph b = s % 2 ? permuted(a, oracle::random_permutation(n, rng)) : oracle::random_digraph(n, rng);
    const bool expect = oracle::isomorphic(a, b);
    const auto got = is_isomorphic(a, b);
    ASSERT_EQ(got.has_value(), expect) << format_digraph(a) << format_digraph(b);
    if (got) {
      EXPECT_TRUE(oracle::maps_onto(a, b, *got));
    }
    EXPECT_EQ(canonical_form(a) == canonical_form(b), expect);
  }
}

TEST(Isomorphism, ThrowsOnOrderMismatch) {
  EXPECT_THROW(is_isomorphic(Digraph(2), Digraph(3)), SizeMismatch);
}

TEST(CanonicalForm, InvariantUnderRelabellingAndRebuildsClass) {
  std::mt19937_64 rng(13);
  for (int s = 0; s < 200; ++s) {
    const std::size_t n = 1 + s % 8;
    const Digraph d = oracle::random_digraph(n, rng, 0.3 + 0.1 * (s % 5));
    const std::string f = canonical_form(d);
    EXPECT_EQ(canonical_form(permuted(d, oracle::random_permutation(n, rng))), f);
    const Digraph r = from_canonical_form(f);
    EXPECT_EQ(canonical_form(r), f);
    if (n <= 6) {
      EXPECT_TRUE(oracle::isomorphic(d, r));
    }
    EXPECT_EQ(from_hex(to_hex(f)), f);
  }
}

TEST(SelfConverse, AgreesWithBruteForce) {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 200; ++s) {
    const Digraph d = oracle::random_digraph(1 + s % 6, rng);
    EXPECT_EQ(is_self_converse(d), oracle::isomorphic(d, oracle::converse_of(d)));
  }
  for (Named n : {Named::TMinus, Named::KMinus, Named::TMinusA, Named::TMinusB, Named::K2, Named::K2Prime}) {
    EXPECT_TRUE(is_self_converse(make_named(n))) << to_string(n);
  }
}
