#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "hermia/counting.hpp"
#include "hermia/digraph_io.hpp"
#include "hermia/enumeration.hpp"
#include "hermia/errors.hpp"
#include "hermia/families.hpp"
#include "hermia/isomorphism.hpp"
#include "hermia/spectra.hpp"
#include "hermia/switching.hpp"
#include "hermia/twins.hpp"
#include "output.hpp"

using nlohmann::json;

namespace hermia::cli {
namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kCheckFailed = 2;

struct Config {
  std::string format_name = "human";
  Format format = Format::Human;
  unsigned parallelism = 1;
  std::size_t budget = SwitchingOptions{}.node_budget;
  std::string checkpoint;
  std::uint64_t seed = 20240607;
  std::size_t bound = 60;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string name_of(const Digraph& d) {
  for (Named n : {Named::TMinus, Named::KMinus, Named::TMinusA, Named::TMinusB, Named::K2, Named::K2Prime}) {
    const Digraph b = make_named(n);
    if (b.order() == d.order() && is_isomorphic(b, d)) return to_string(n);
  }
  return "";
}

std::vector<std::string> eigen_strings(const Spectrum& s) {
  std::vector<std::string> out;
  for (auto it = s.eigenvalues.rbegin(); it != s.eigenvalues.rend(); ++it) out.push_back(format_real(*it));
  return out;
}

std::string permutation_string(const Permutation& p) {
  std::vector<std::string> parts;
  for (std::size_t u = 0; u < p.size(); ++u) parts.push_back(std::to_string(u) + "->" + std::to_string(p[u]));
  return join(parts, " ");
}

int cmd_spectrum(const Config& cfg, const std::string& in) {
  const Digraph d = load_digraph(in);
  const auto h = hermitian(d);
  const auto ev = eigen_strings(eigenvalues(h));
  switch (cfg.format) {
    case Format::Human: std::cout << join(ev, " ") << '\n'; break;
    case Format::Tsv:
      std::cout << "eigenvalue\n";
      for (const auto& e : ev) std::cout << e << '\n';
      break;
    case Format::Json: {
      json vals = json::array();
      for (double x : eigenvalues(h).eigenvalues) vals.push_back(x);
      std::reverse(vals.begin(), vals.end());
      emit({{"eigenvalues", vals}, {"charpoly", charpoly_json(char_poly(h))}});
      break;
    }
  }
  return kOk;
}

int cmd_charpoly(const Config& cfg, const std::string& in) {
  const CharPoly p = char_poly(load_digraph(in));
  switch (cfg.format) {
    case Format::Human: std::cout << to_string(p) << '\n'; break;
    case Format::Tsv:
      std::cout << "degree\tcoefficient\n";
      for (std::size_t k = 0; k <= p.degree(); ++k) std::cout << k << '\t' << p[k].get_str() << '\n';
      break;
    case Format::Json: emit(charpoly_json(p)); break;
  }
  return kOk;
}

int cmd_inertia(const Config& cfg, const std::string& in) {
  const Inertia i = inertia(char_poly(load_digraph(in)));
  switch (cfg.format) {
    case Format::Human:
      std::cout << "positive " << i.n_pos << "\nnegative " << i.n_neg << "\nzero " << i.n_zero << '\n';
      break;
    case Format::Tsv: std::cout << "n_pos\tn_neg\tn_zero\n" << i.n_pos << '\t' << i.n_neg << '\t' << i.n_zero << '\n'; break;
    case Format::Json: emit({{"n_pos", i.n_pos}, {"n_neg", i.n_neg}, {"n_zero", i.n_zero}, {"rank", i.rank()}}); break;
  }
  return kOk;
}

int cmd_triangles(const Config& cfg, const std::string& in) {
  const Digraph d = load_digraph(in);
  const TriangleBalance tb = triangle_balance(d);
  const BigInt trace = trace_power(hermitian(d), 3);
  const bool holds = trace == BigInt(static_cast<long>(tb.trace_cube()));
  switch (cfg.format) {
    case Format::Human:
      std::cout << "x1 " << tb.x1 << "\nx2 " << tb.x2 << "\nx3 " << tb.x3 << "\nx4 " << tb.x4 << "\ntrace_h3 "
                << trace.get_str() << "\nbalance " << tb.trace_cube() << '\n';
      break;
    case Format::Tsv:
      std::cout << "x1\tx2\tx3\tx4\ttrace_h3\tbalance\n"
                << tb.x1 << '\t' << tb.x2 << '\t' << tb.x3 << '\t' << tb.x4 << '\t' << trace.get_str() << '\t'
                << tb.trace_cube() << '\n';
      break;
    case Format::Json:
      emit({{"x1", tb.x1}, {"x2", tb.x2}, {"x3", tb.x3}, {"x4", tb.x4}, {"trace_h3", trace.get_str()},
            {"balance", tb.trace_cube()}, {"holds", holds}});
      break;
  }
  return holds ? kOk : kCheckFailed;
}

void print_digraph(const Config& cfg, const Digraph& d) {
  if (cfg.format == Format::Json) {
    emit(digraph_json(d));
  } else {
    write_digraph(std::cout, d);
  }
}

int cmd_iso(const Config& cfg, const std::string& a, const std::string& b) {
  const Digraph d1 = load_digraph(a), d2 = load_digraph(b);
  std::optional<Permutation> p;
  if (d1.order() == d2.order()) p = is_isomorphic(d1, d2);
  switch (cfg.format) {
    case Format::Human:
      std::cout << (p ? "isomorphic: " + permutation_string(*p) : std::string("not isomorphic")) << '\n';
      break;
    case Format::Tsv:
      std::cout << "vertex\timage\n";
      if (p) {
        for (std::size_t u = 0; u < p->size(); ++u) std::cout << u << '\t' << (*p)[u] << '\n';
      }
      break;
    case Format::Json:
      emit({{"isomorphic", p.has_value()}, {"permutation", p ? json(*p) : json(nullptr)}});
      break;
  }
  return p ? kOk : kCheckFailed;
}

int cmd_switch(const Config& cfg, const std::string& a, const std::string& b, bool labeled) {
  const Digraph d1 = load_digraph(a), d2 = load_digraph(b);
  SwitchingOptions opts;
  opts.mode = labeled ? SwitchingMode::Labeled : SwitchingMode::UpToIsomorphism;
  opts.node_budget = cfg.budget;
  std::optional<EquivalenceWitness> w;
  if (d1.order() == d2.order()) w = switching_equivalent(d1, d2, opts);
  if (w && !verify_witness(d1, d2, *w)) throw InternalInconsistency("switching witness failed verification");
  std::vector<std::string> phases;
  if (w) {
    for (Phase p : w->phases) phases.push_back(to_string(p));
  }
  switch (cfg.format) {
    case Format::Human:
      if (!w) {
        std::cout << "not switching equivalent\n";
      } else {
        std::cout << "switching equivalent" << (w->conversed ? " (via converse)" : "") << "\npermutation "
                  << permutation_string(w->permutation) << "\nphases " << join(phases, " ") << '\n';
      }
      break;
    case Format::Tsv:
      std::cout << "vertex\timage\tphase\n";
      if (w) {
        for (std::size_t u = 0; u < phases.size(); ++u) std::cout << u << '\t' << w->permutation[u] << '\t' << phases[u] << '\n';
      }
      break;
    case Format::Json:
      if (!w) {
        emit({{"equivalent", false}});
      } else {
        emit({{"equivalent", true}, {"conversed", w->conversed}, {"permutation", w->permutation}, {"phases", phases}});
      }
      break;
  }
  return w ? kOk : kCheckFailed;
}

CharPoly closed_form_for(Named base, const ExpansionVector& t) {
  switch (base) {
    case Named::KMinus: return charpoly_te_kminus(t);
    case Named::TMinus: return charpoly_te_tminus(t);
    case Named::TMinusA: return charpoly_te_ta(t);
    case Named::TMinusB: return charpoly_te_tb(t);
    default: throw Error("no closed-form charpoly for " + to_string(base));
  }
}

int cmd_family_charpoly(const Config& cfg, const std::string& base, const std::string& t) {
  const CharPoly p = closed_form_for(parse_named(base), parse_expansion_vector(t));
  if (cfg.format == Format::Tsv) {
    std::cout << "degree\tcoefficient\n";
    for (std::size_t k = 0; k <= p.degree(); ++k) std::cout << k << '\t' << p[k].get_str() << '\n';
  } else {
    std::cout << charpoly_json(p).dump() << '\n';
  }
  return kOk;
}

std::string closed_form_text(const ClosedForm& c) {
  std::ostringstream ss;
  const bool has_surd = c.coefficient != 0;
  if (c.rational != 0 || !has_surd) ss << c.rational.get_str();
  if (has_surd) {
    const BigRational a = abs(c.coefficient);
    ss << (c.coefficient < 0 ? "-" : (c.rational != 0 ? "+" : ""));
    if (a != 1) ss << a.get_str() << "*";
    ss << "sqrt(" << c.radicand.get_str() << ")";
  }
  return ss.str();
}

int cmd_family_spectrum(const Config& cfg, const std::string& t, const std::string& which) {
  const ExplicitSpectrum s = explicit_spectrum_cases(parse_expansion_vector(t));
  if (which != "auto" && std::to_string(s.pattern) != which) {
    throw PatternMismatch("block sizes match pattern " + std::to_string(s.pattern) + ", not " + which);
  }
  switch (cfg.format) {
    case Format::Human:
      std::cout << "pattern " << s.pattern << '\n';
      for (const auto& e : s.eigenvalues) {
        std::cout << closed_form_text(e) << "\tx" << e.multiplicity << "\t" << format_real(e.value()) << '\n';
      }
      break;
    case Format::Tsv:
      std::cout << "closed_form\tmultiplicity\tvalue\n";
      for (const auto& e : s.eigenvalues) {
        std::cout << closed_form_text(e) << '\t' << e.multiplicity << '\t' << format_real(e.value()) << '\n';
      }
      break;
    case Format::Json: {
      json vals = json::array();
      for (const auto& e : s.eigenvalues) {
        vals.push_back({{"rational", e.rational.get_str()}, {"coefficient", e.coefficient.get_str()},
                        {"radicand", e.radicand.get_str()}, {"multiplicity", e.multiplicity}, {"value", e.value()}});
      }
      emit({{"pattern", s.pattern}, {"eigenvalues", vals}});
      break;
    }
  }
  return kOk;
}

int cmd_family_verify(const Config& cfg, const std::string& base_name, std::size_t samples, std::size_t max_entry) {
  const Named base = parse_named(base_name);
  const Digraph b = make_named(base);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_int_distribution<std::size_t> entry(1, max_entry), iso(0, max_entry);
  std::size_t failures = 0;
  std::string first_failure;
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> ts(b.order());
    for (auto& x : ts) x = entry(rng);
    const ExpansionVector t(iso(rng), ts);
    if (!(closed_form_for(base, t) == char_poly(twin_expand(b, t)))) {
      if (failures++ == 0) first_failure = to_string(t);
    }
  }
  switch (cfg.format) {
    case Format::Human:
      std::cout << samples << " samples, " << failures << " mismatches";
      if (failures) std::cout << " (first " << first_failure << ")";
      std::cout << '\n';
      break;
    case Format::Tsv: std::cout << "samples\tmismatches\n" << samples << '\t' << failures << '\n'; break;
    case Format::Json:
      emit({{"base", base_name}, {"seed", cfg.seed}, {"samples", samples}, {"mismatches", failures},
            {"first_mismatch", failures ? json(first_failure) : json(nullptr)}});
      break;
  }
  return failures ? kCheckFailed : kOk;
}

void print_digraph_list(const Config& cfg, const std::string& title, const std::vector<Digraph>& ds, json extra) {
  switch (cfg.format) {
    case Format::Human:
      std::cout << title << ": " << ds.size() << '\n';
      for (const auto& d : ds) {
        const std::string nm = name_of(d);
        std::cout << "# " << (nm.empty() ? to_hex(canonical_form(d)) : nm) << '\n';
        write_digraph(std::cout, d);
      }
      break;
    case Format::Tsv:
      std::cout << "name\tform\n";
      for (const auto& d : ds) std::cout << name_of(d) << '\t' << to_hex(canonical_form(d)) << '\n';
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& d : ds) arr.push_back({{"name", name_of(d)}, {"digraph", digraph_json(d)}});
      extra["digraphs"] = arr;
      emit(extra);
      break;
    }
  }
}

int cmd_classify(const Config& cfg, std::size_t n, bool lambda_one) {
  if (n == 0 || n > 6) throw Error("classify supports orders 1..6");
  if (lambda_one) {
    if (n > 5) throw Error("largest-eigenvalue check supports orders 1..5");
    const auto found = verify_lambda_max_one(enumerate_digraphs(n, cfg.parallelism));
    print_digraph_list(cfg, "connected, largest eigenvalue 1, order " + std::to_string(n), found, {{"order", n}});
    return kOk;
  }
  std::vector<Digraph> found;
  json extra = {{"order", n}};
  if (n <= 5) {
    found = classify_one_negative(enumerate_digraphs(n, cfg.parallelism));
  } else {
    const auto sweep = sweep_one_negative(enumerate_digraphs(5, cfg.parallelism), cfg.parallelism);
    found = sweep.found;
    extra["bases"] = sweep.bases;
    extra["extensions"] = sweep.extensions;
  }
  print_digraph_list(cfg, "reduced, rank > 2, one negative eigenvalue, order " + std::to_string(n), found, extra);
  return kOk;
}

int cmd_shds(const Config& cfg, const std::string& in) {
  const Digraph d = load_digraph(in);
  const ShdsReport r = shds_check(d, cfg.parallelism);
  json extra = {{"order", d.order()}, {"universe", r.universe}, {"cospectral", r.cospectral},
                {"strongly_determined", r.strongly_determined()}};
  if (cfg.format == Format::Human) {
    std::cout << "order " << d.order() << ", universe " << r.universe << ", cospectral classes " << r.cospectral << '\n';
  }
  print_digraph_list(cfg, "non-isomorphic cospectral mates", r.mates, extra);
  return r.strongly_determined() ? kOk : kCheckFailed;
}

std::string key_text(const std::vector<BigInt>& key) {
  std::vector<std::string> parts;
  for (const auto& k : key) parts.push_back(k.get_str());
  return "(" + join(parts, ", ") + ")";
}

int cmd_collide(const Config& cfg, const std::string& base, std::size_t buckets) {
  CollisionOptions opts;
  opts.parallelism = cfg.parallelism;
  opts.checkpoint = cfg.checkpoint;
  opts.buckets = buckets;
  std::vector<CollisionReport> rs;
  if (base == "kminus") {
    rs = expansion_collision_search(cfg.bound, opts);
  } else if (base == "tminus") {
    rs = tminus_collision_search(cfg.bound, opts);
  } else {
    throw Error("collide supports --base kminus or tminus");
  }
  switch (cfg.format) {
    case Format::Human:
      std::cout << rs.size() << " collision" << (rs.size() == 1 ? "" : "s") << " with block sizes <= " << cfg.bound << '\n';
      for (const auto& r : rs) {
        std::cout << "order " << r.order << " key " << key_text(r.key) << " nonzero part " << to_string(r.nonzero_part)
                  << '\n';
        for (const auto& m : r.members) std::cout << "  " << to_string(m.t) << "  digons " << m.digons << '\n';
      }
      break;
    case Format::Tsv:
      std::cout << "order\tkey\tmembers\tdigons\n";
      for (const auto& r : rs) {
        std::vector<std::string> ms, ds;
        for (const auto& m : r.members) {
          ms.push_back(to_string(m.t));
          ds.push_back(std::to_string(m.digons));
        }
        std::cout << r.order << '\t' << key_text(r.key) << '\t' << join(ms, " ") << '\t' << join(ds, " ") << '\n';
      }
      break;
    case Format::Json: {
      json arr = json::array();
      for (const auto& r : rs) {
        json members = json::array();
        for (const auto& m : r.members) members.push_back({{"t", to_string(m.t)}, {"digons", m.digons}});
        std::vector<std::string> key;
        for (const auto& k : r.key) key.push_back(k.get_str());
        arr.push_back({{"order", r.order}, {"key", key}, {"nonzero_part", charpoly_json(r.nonzero_part)},
                       {"members", members}, {"isolated_counts_differ", r.isolated_counts_differ()}});
      }
      emit({{"base", base}, {"bound", cfg.bound}, {"collisions", arr}});
      break;
    }
  }
  return kOk;
}

int cmd_count(const Config& cfg, std::size_t min_n, std::size_t max_n, bool table) {
  if (min_n < 1 || max_n < min_n || max_n > 64) throw Error("count needs 1 <= --min-n <= --max-n <= 64");
  if (table || cfg.format == Format::Tsv) {
    std::cout << "n\tf(n)\n";
    for (std::size_t n = min_n; n <= max_n; ++n) {
      std::cout << n << '\t' << format_sig3(self_converse_ratio(n, cfg.parallelism)) << '\n';
    }
    return kOk;
  }
  json rows = json::array();
  for (std::size_t n = min_n; n <= max_n; ++n) {
    const BigInt d = count_digraphs(n, cfg.parallelism), sc = count_self_converse(n, cfg.parallelism);
    BigRational q(sc, d);
    q.canonicalize();
    if (cfg.format == Format::Human) {
      std::cout << "n " << n << "  digraphs " << d.get_str() << "  self-converse " << sc.get_str() << "  f "
                << format_sig3(q) << '\n';
    } else {
      rows.push_back({{"n", n}, {"digraphs", d.get_str()}, {"self_converse", sc.get_str()}, {"fraction", format_sig3(q)}});
    }
  }
  if (cfg.format == Format::Json) emit(rows);
  return kOk;
}

}  // namespace
}  // namespace hermia::cli

int main(int argc, char** argv) {
  using namespace hermia::cli;
  CLI::App app{"Hermitian spectra of digraphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  if (const char* env = std::getenv("HERMIA_PARALLELISM")) {
    try {
      cfg.parallelism = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      std::cerr << "hermia: HERMIA_PARALLELISM must be a positive integer\n";
      return kInputError;
    }
  }
  app.add_option("--format", cfg.format_name, "human, json or tsv")->check(CLI::IsMember({"human", "json", "tsv"}));
  app.add_option("--parallelism", cfg.parallelism, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for randomized checks");

  std::function<int()> run;
  std::string in, in2, base = "kminus", tvec, which = "auto";
  bool labeled = false, table = false, lambda_one = false;
  std::size_t n = 0, min_n = 3, max_n = 20, samples = 500, max_entry = 6, buckets = 16;

  auto one_input = [&](const char* name, const char* help, int (*fn)(const Config&, const std::string&)) {
    auto* c = app.add_subcommand(name, help);
    c->add_option("input", in, "digraph file, '-', named:NAME or te:NAME:t0:t1,...")->required();
    c->callback([&, fn]() { run = [&, fn]() { return fn(cfg, in); }; });
  };
  one_input("spectrum", "eigenvalues in ascending order", cmd_spectrum);
  one_input("charpoly", "exact characteristic polynomial", cmd_charpoly);
  one_input("inertia", "counts of positive, negative and zero eigenvalues", cmd_inertia);
  one_input("triangles", "induced triangle classes and the trace of H^3", cmd_triangles);
  one_input("shds-check", "search all digraphs of the same order for cospectral mates", cmd_shds);

  auto* reduce = app.add_subcommand("reduce", "twin reduction");
  reduce->add_option("input", in)->required();
  reduce->callback([&]() { run = [&]() { print_digraph(cfg, hermia::twin_reduction(load_digraph(in))); return kOk; }; });

  auto* expand = app.add_subcommand("expand", "twin expansion");
  expand->add_option("input", in)->required();
  expand->add_option("--t", tvec, "expansion vector t0:t1,...,tk")->required();
  expand->callback([&]() {
    run = [&]() {
      print_digraph(cfg, hermia::twin_expand(load_digraph(in), hermia::parse_expansion_vector(tvec)));
      return kOk;
    };
  });

  auto* iso = app.add_subcommand("iso", "isomorphism test");
  iso->add_option("first", in)->required();
  iso->add_option("second", in2)->required();
  iso->callback([&]() { run = [&]() { return cmd_iso(cfg, in, in2); }; });

  auto* sw = app.add_subcommand("switch-equiv", "four-way switching equivalence, possibly via converse");
  sw->add_option("first", in)->required();
  sw->add_option("second", in2)->required();
  sw->add_flag("--labeled", labeled, "keep vertex labels fixed");
  sw->add_option("--budget", cfg.budget, "search node budget")->check(CLI::PositiveNumber);
  sw->callback([&]() { run = [&]() { return cmd_switch(cfg, in, in2, labeled); }; });

  auto* family = app.add_subcommand("family", "named digraphs and closed forms for their expansions");
  family->require_subcommand(1);
  auto* fshow = family->add_subcommand("show", "print a named digraph or its expansion");
  fshow->add_option("--base", base)->required();
  fshow->add_option("--t", tvec);
  fshow->callback([&]() {
    run = [&]() {
      const auto d = hermia::make_named(hermia::parse_named(base));
      print_digraph(cfg, tvec.empty() ? d : hermia::twin_expand(d, hermia::parse_expansion_vector(tvec)));
      return kOk;
    };
  });
  auto* fchar = family->add_subcommand("charpoly", "closed-form charpoly of an expansion");
  fchar->add_option("--base", base)->required();
  fchar->add_option("--t", tvec)->required();
  fchar->callback([&]() { run = [&]() { return cmd_family_charpoly(cfg, base, tvec); }; });
  auto* fspec = family->add_subcommand("spectrum", "closed-form spectrum of an expansion of kminus");
  fspec->add_option("--t", tvec)->required();
  fspec->add_option("--case", which, "auto, 1, 2 or 3")->check(CLI::IsMember({"auto", "1", "2", "3"}));
  fspec->callback([&]() { run = [&]() { return cmd_family_spectrum(cfg, tvec, which); }; });
  auto* fver = family->add_subcommand("verify", "compare closed forms with exact matrix charpolys on random vectors");
  fver->add_option("--base", base)->required();
  fver->add_option("--samples", samples)->check(CLI::PositiveNumber);
  fver->add_option("--max-entry", max_entry)->check(CLI::PositiveNumber);
  fver->callback([&]() { run = [&]() { return cmd_family_verify(cfg, base, samples, max_entry); }; });

  auto* classify = app.add_subcommand("classify", "reduced digraphs of rank > 2 with one negative eigenvalue");
  classify->add_option("--n", n, "order")->required()->check(CLI::Range(1, 6));
  classify->add_flag("--lambda-max-one", lambda_one, "list connected digraphs with largest eigenvalue 1 instead");
  classify->callback([&]() { run = [&]() { return cmd_classify(cfg, n, lambda_one); }; });

  auto* collide = app.add_subcommand("collide", "expansion vectors sharing a nonzero characteristic polynomial");
  collide->add_option("--base", base, "kminus or tminus")->check(CLI::IsMember({"kminus", "tminus"}));
  collide->add_option("--bound", cfg.bound, "largest block size")->check(CLI::PositiveNumber);
  collide->add_option("--checkpoint", cfg.checkpoint, "append finished buckets here and resume from it");
  collide->add_option("--buckets", buckets)->check(CLI::PositiveNumber);
  collide->callback([&]() { run = [&]() { return cmd_collide(cfg, base, buckets); }; });

  auto* count = app.add_subcommand("count", "digraphs and self-converse digraphs up to isomorphism");
  count->add_option("--min-n", min_n)->check(CLI::PositiveNumber);
  count->add_option("--max-n", max_n)->check(CLI::PositiveNumber);
  count->add_flag("--table", table, "TSV table of the self-converse fraction");
  count->callback([&]() { run = [&]() { return cmd_count(cfg, min_n, max_n, table); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }
  try {
    cfg.format = parse_format(cfg.format_name);
    return run();
  } catch (const std::exception& e) {
    std::cerr << "hermia: " << e.what() << '\n';
    return kInputError;
  }
}
