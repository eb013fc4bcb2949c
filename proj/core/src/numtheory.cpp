#include "cyclecone/numtheory.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace cyclecone {

namespace {

BigInt binomial(unsigned n, unsigned k) {
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

void require_positive(std::uint64_t m, const char* what) {
  if (m == 0) throw std::invalid_argument(std::string(what) + ": argument must be >= 1");
}

}  // namespace

ExactRational bernoulli(unsigned n) {
  // sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
  static std::mutex mutex;
  static std::vector<ExactRational> table{ExactRational(1)};

  std::lock_guard lock(mutex);
  while (table.size() <= n) {
    const auto next = static_cast<unsigned>(table.size());
    if (next >= 3 && next % 2 == 1) {
      table.emplace_back(0);
      continue;
    }
    ExactRational acc = 0;
    for (unsigned j = 0; j < next; ++j) {
      if (table[j] != 0) acc += ExactRational(binomial(next + 1, j)) * table[j];
    }
    table.push_back(ExactRational(-acc / (next + 1)));
  }
  return table[n];
}

ExactRational zeta_negative(unsigned s) {
  if (s == 0) throw std::invalid_argument("zeta_negative: s must be >= 1");
  return ExactRational(-bernoulli(s + 1) / (s + 1));
}

std::vector<std::uint64_t> divisors(std::uint64_t m) {
  require_positive(m, "divisors");
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d <= m / d; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

BigInt sigma(unsigned s, std::uint64_t m) {
  require_positive(m, "sigma");
  BigInt total = 0;
  BigInt term;
  for (const auto d : divisors(m)) {
    mpz_ui_pow_ui(term.get_mpz_t(), d, s);
    total += term;
  }
  return total;
}

Factorization factorize(std::uint64_t m) {
  require_positive(m, "factorize");
  if (m > kFactorizeLimit) {
    throw std::out_of_range("factorize: input exceeds trial-division bound " +
                            std::to_string(kFactorizeLimit));
  }
  Factorization out;
  for (std::uint64_t p = 2; p <= m / p; p += (p == 2 ? 1 : 2)) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) out.push_back({p, e});
  }
  if (m > 1) out.push_back({m, 1});
  return out;
}

int moebius(std::uint64_t t) {
  const auto f = factorize(t);
  if (std::any_of(f.begin(), f.end(), [](const PrimePower& pp) { return pp.exponent > 1; })) {
    return 0;
  }
  return f.size() % 2 == 0 ? 1 : -1;
}

std::vector<std::uint64_t> square_divisors(std::uint64_t m) {
  // t^2 | m iff every prime of t appears with at most half the exponent in m.
  std::vector<std::uint64_t> out{1};
  for (const auto& [p, e] : factorize(m)) {
    const std::size_t existing = out.size();
    std::uint64_t power = 1;
    for (unsigned i = 1; i <= e / 2; ++i) {
      power *= p;
      for (std::size_t j = 0; j < existing; ++j) out.push_back(out[j] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt factorial(unsigned n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

}  // namespace cyclecone
