#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "hermia/charpoly.hpp"
#include "hermia/digraph_io.hpp"
#include "hermia/families.hpp"
#include "hermia/isomorphism.hpp"
#include "hermia/twins.hpp"

using namespace hermia;
using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun hermia_cli(const std::string& args) {
  const std::string cmd = std::string(HERMIA_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  for (std::size_t got; (got = std::fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), got);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(HERMIA_DATA_DIR) + "/" + name; }

}  // namespace

TEST(Cli, SpectrumOfNamedFiles) {
  const CliRun k = hermia_cli("spectrum " + data("kminus.dg"));
  EXPECT_EQ(k.code, 0);
  EXPECT_EQ(k.out, "-3 1 1 1\n");
  EXPECT_EQ(hermia_cli("spectrum " + data("tminus.dg")).out, "-2 1 1\n");
  EXPECT_EQ(hermia_cli("charpoly named:kminus").out, "mu^4 - 6mu^2 + 8mu - 3\n");
}

TEST(Cli, CountTable) {
  const CliRun r = hermia_cli("count --max-n 3 --table");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n\tf(n)\n3\t6.25e-1\n");
}

TEST(Cli, CollideFindsTheOrderOneHundredSevenPair) {
  const CliRun r = hermia_cli("--format json collide --base kminus --bound 60");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j["collisions"].size(), 1u);
  const json& c = j["collisions"][0];
  EXPECT_EQ(c["order"], 107);
  EXPECT_EQ(charpoly_from_json(c["nonzero_part"].dump()),
            CharPoly(std::vector<BigInt>{BigInt(-583200), BigInt(90720), BigInt(-3522), BigInt(0), BigInt(1)}));
  EXPECT_EQ(c["members"][0]["t"], "0:9,18,20,60");
  EXPECT_EQ(c["members"][1]["t"], "4:10,12,36,45");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(hermia_cli("spectrum " + data("does-not-exist.dg")).code, 1);
  EXPECT_EQ(hermia_cli("spectrum named:nothing").code, 1);
  EXPECT_EQ(hermia_cli("frobnicate").code, 1);
  EXPECT_EQ(hermia_cli("shds-check named:kminus").code, 0);
  EXPECT_EQ(hermia_cli("shds-check named:k2").code, 2);
  EXPECT_EQ(hermia_cli("iso te:tminus:0:3,3,18 te:tminus:4:2,9,9").code, 2);
  EXPECT_EQ(hermia_cli("switch-equiv te:tminus:0:3,3,18 te:tminus:4:2,9,9").code, 2);
  EXPECT_EQ(hermia_cli("switch-equiv named:k2 named:k2prime").code, 0);
  EXPECT_EQ(hermia_cli("triangles named:tminus").code, 0);
  EXPECT_EQ(hermia_cli("--help").code, 0);
}

TEST(Cli, JsonOutputsRoundTrip) {
  const CliRun show = hermia_cli("--format json family show --base tminus --t 2:3,2,1");
  ASSERT_EQ(show.code, 0);
  const Digraph e = digraph_from_json(show.out);
  EXPECT_EQ(e, twin_expand(make_named(Named::TMinus), ExpansionVector(2, {3, 2, 1})));

  const CliRun red = hermia_cli("--format json reduce " + data("tminus_2_3_2_1.dg"));
  ASSERT_EQ(red.code, 0);
  EXPECT_EQ(digraph_from_json(red.out), make_named(Named::TMinus));

  const CliRun cp = hermia_cli("--format json charpoly te:kminus:0:1,2,6,9");
  ASSERT_EQ(cp.code, 0);
  EXPECT_EQ(charpoly_from_json(cp.out), charpoly_te_kminus(ExpansionVector(0, {1, 2, 6, 9})));

  const CliRun fc = hermia_cli("family charpoly --base kminus --t 0:1,2,6,9");
  EXPECT_EQ(charpoly_from_json(fc.out), charpoly_from_json(cp.out));

  const CliRun sp = hermia_cli("--format json spectrum named:tminus-a");
  const json j = json::parse(sp.out);
  EXPECT_EQ(charpoly_from_json(j["charpoly"].dump()), char_poly(make_named(Named::TMinusA)));
  EXPECT_EQ(j["eigenvalues"].size(), 4u);

  const CliRun sw = hermia_cli("--format json switch-equiv named:k2 named:k2prime");
  const json w = json::parse(sw.out);
  EXPECT_TRUE(w["equivalent"].get<bool>());
  EXPECT_EQ(w["permutation"].size(), 2u);
}

TEST(Cli, TextOutputRoundTripsThroughFiles) {
  const CliRun show = hermia_cli("family show --base kminus --t 1:2,1,1,1");
  ASSERT_EQ(show.code, 0);
  EXPECT_EQ(parse_digraph(show.out), twin_expand(make_named(Named::KMinus), ExpansionVector(1, {2, 1, 1, 1})));
  EXPECT_EQ(parse_digraph(hermia_cli("expand named:tminus --t 2:3,2,1").out), read_digraph_file(data("tminus_2_3_2_1.dg")));
}

TEST(Cli, OutputDoesNotDependOnParallelism) {
  const std::string args = "--format json collide --base tminus --bound 30";
  const CliRun a = hermia_cli("--parallelism 1 " + args);
  const CliRun b = hermia_cli("--parallelism 3 " + args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(hermia_cli("--parallelism 1 classify --n 4").out, hermia_cli("--parallelism 2 classify --n 4").out);
}

TEST(Cli, ClassifyListsTheThreeOrderFourDigraphs) {
  const CliRun r = hermia_cli("--format json classify --n 4");
  ASSERT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  std::vector<std::string> names;
  for (const auto& d : j["digraphs"]) names.push_back(d["name"]);
  std::sort(names.begin(), names.end());
  EXPECT_EQ(names, (std::vector<std::string>{"kminus", "tminus-a", "tminus-b"}));
}

TEST(Cli, FamilySpectrumAndVerify) {
  const CliRun s = hermia_cli("--format json family spectrum --t 0:1,1,1,2");
  ASSERT_EQ(s.code, 0);
  const json j = json::parse(s.out);
  EXPECT_EQ(j["pattern"], 2);
  bool seven = false;
  for (const auto& e : j["eigenvalues"]) seven = seven || e["radicand"] == "7";
  EXPECT_TRUE(seven);
  EXPECT_EQ(hermia_cli("family spectrum --t 0:1,2,3,4").code, 1);
  EXPECT_EQ(hermia_cli("family verify --base kminus --samples 20").code, 0);
}
