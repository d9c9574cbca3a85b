#include "hermia/counting.hpp"

#include <numeric>

#include "hermia/errors.hpp"
#include "hermia/parallel.hpp"

namespace hermia {
namespace {

BigInt factorial(std::size_t n) {
  BigInt f = 1;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<unsigned long>(k);
  return f;
}

void partitions(std::size_t rest, std::size_t max_part, std::vector<std::size_t>& cur,
                std::vector<std::vector<std::size_t>>& out) {
  if (rest == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(rest, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(rest - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<std::size_t> representative(const std::vector<std::size_t>& parts, std::size_t n) {
  std::vector<std::size_t> pi(n);
  std::size_t start = 0;
  for (std::size_t len : parts) {
    for (std::size_t j = 0; j < len; ++j) pi[start + j] = start + (j + 1) % len;
    start += len;
  }
  return pi;
}

// Cycles of the map on ordered pairs (u,v), u != v.
std::size_t pair_cycles(const std::vector<std::size_t>& pi, bool reverse) {
  const std::size_t n = pi.size();
  std::vector<bool> seen(n * n, false);
  std::size_t cycles = 0;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u == v || seen[u * n + v]) continue;
      ++cycles;
      std::size_t a = u, b = v;
      while (!seen[a * n + b]) {
        seen[a * n + b] = true;
        const std::size_t na = reverse ? pi[b] : pi[a];
        const std::size_t nb = reverse ? pi[a] : pi[b];
        a = na;
        b = nb;
      }
    }
  }
  return cycles;
}

BigInt burnside(std::size_t n, bool reverse, unsigned parallelism) {
  if (n == 0) return 1;
  const auto types = cycle_types(n);
  std::vector<BigInt> terms(types.size());
  parallel_for(types.size(), parallelism, [&](std::size_t i) {
    BigInt fixed;
    mpz_ui_pow_ui(fixed.get_mpz_t(), 2, pair_cycles(representative(types[i].parts, n), reverse));
    terms[i] = types[i].weight * fixed;
  });
  BigInt total = std::accumulate(terms.begin(), terms.end(), BigInt(0));
  const BigInt nf = factorial(n);
  if (total % nf != 0) throw InternalInconsistency("Burnside sum not divisible by n!");
  return total / nf;
}

}  // namespace

std::vector<CycleType> cycle_types(std::size_t n) {
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::size_t> cur;
  partitions(n, n, cur, parts);
  const BigInt nf = factorial(n);
  std::vector<CycleType> out;
  out.reserve(parts.size());
  for (auto& p : parts) {
    BigInt denom = 1;
    std::size_t i = 0;
    while (i < p.size()) {
      std::size_t j = i;
      while (j < p.size() && p[j] == p[i]) ++j;
      const std::size_t k = j - i;
      BigInt lk;
      mpz_ui_pow_ui(lk.get_mpz_t(), p[i], k);
      denom *= lk * factorial(k);
      i = j;
    }
    out.push_back({std::move(p), BigInt(nf / denom)});
  }
  return out;
}

BigInt count_digraphs(std::size_t n, unsigned parallelism) { return burnside(n, false, parallelism); }

BigInt count_self_converse(std::size_t n, unsigned parallelism) { return burnside(n, true, parallelism); }

BigRational self_converse_ratio(std::size_t n, unsigned parallelism) {
  BigRational q(count_self_converse(n, parallelism), count_digraphs(n, parallelism));
  q.canonicalize();
  return q;
}

double self_converse_fraction(std::size_t n, unsigned parallelism) {
  return self_converse_ratio(n, parallelism).get_d();
}

std::string format_sig3(const BigRational& q, SigDigits mode) {
  if (q <= 0) throw std::invalid_argument("format_sig3 needs a positive value");
  // Find e with 10^e <= q < 10^(e+1).
  long e = 0;
  BigRational x = q;
  while (x >= 10) {
    x /= 10;
    ++e;
  }
  while (x < 1) {
    x *= 10;
    --e;
  }
  BigRational scaled = x * 100;
  if (mode == SigDigits::RoundHalfUp) scaled += BigRational(1, 2);
  BigInt m = scaled.get_num() / scaled.get_den();
  if (m >= 1000) {
    m /= 10;
    ++e;
  }
  const std::string digits = m.get_str();
  return digits.substr(0, 1) + "." + digits.substr(1) + "e" + std::to_string(e);
}

}  // namespace hermia
