#pragma once

// Brute-force reference computations used only by tests. Nothing here calls
// into the library's own algorithms, so each check compares two independent
// routes.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;

inline mpz_class sigma(unsigned s, std::uint64_t m) {
  mpz_class total = 0;
  for (std::uint64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), d, s);
    total += term;
  }
  return total;
}

inline int moebius(std::uint64_t t) {
  int sign = 1;
  for (std::uint64_t p = 2; p <= t; ++p) {
    if (t % p != 0) continue;
    t /= p;
    if (t % p == 0) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::vector<std::uint64_t> square_divisors(std::uint64_t m) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 1; t * t <= m; ++t) {
    if (m % (t * t) == 0) out.push_back(t);
  }
  return out;
}

/// Akiyama-Tanigawa; converted to the B_1 = -1/2 convention.
inline Q bernoulli(unsigned n) {
  std::vector<Q> a(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    a[m] = Q(1, m + 1);
    for (unsigned j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
  }
  return n == 1 ? Q(-a[0]) : a[0];
}

/// Solves sum_j x_j cols[j] = rhs. Returns the unique solution when the
/// columns are independent and the system is consistent.
inline std::optional<Vec> solve_independent(const std::vector<Vec>& cols, const Vec& rhs) {
  const std::size_t rows = rhs.size();
  const std::size_t n = cols.size();
  std::vector<Vec> a(rows, Vec(n + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
    a[i][n] = rhs[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c] / a[r][c];
      for (std::size_t j = 0; j <= n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  if (pivot_cols.size() != n) return std::nullopt;
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][n] != 0) return std::nullopt;
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[pivot_cols[i]] = a[i][n] / a[i][pivot_cols[i]];
  return x;
}

/// Kernel of the matrix whose columns are `cols`, as a basis.
inline std::vector<Vec> kernel(const std::vector<Vec>& cols, std::size_t rows) {
  const std::size_t n = cols.size();
  std::vector<Vec> a(rows, Vec(n));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = cols[j][i];
  }
  std::vector<int> pivot_row(n, -1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Q inv = 1 / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Q f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_row[c] = static_cast<int>(r);
    ++r;
  }
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_row[free] >= 0) continue;
    Vec z(n);
    z[free] = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (pivot_row[c] >= 0) z[c] = -a[static_cast<std::size_t>(pivot_row[c])][free];
    }
    basis.push_back(z);
  }
  return basis;
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t max_size, F&& f) {
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!chosen.empty()) f(chosen);
    if (chosen.size() == max_size) return;
    for (std::size_t i = start; i < n; ++i) {
      chosen.push_back(i);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

/// Caratheodory: v is in the cone iff it is a nonnegative combination of some
/// linearly independent subset of at most d generators.
inline bool member(const Vec& v, const std::vector<Vec>& gens) {
  bool zero = true;
  for (const auto& c : v) zero = zero && c == 0;
  if (zero) return true;
  bool found = false;
  for_each_subset(gens.size(), v.size(), [&](const std::vector<std::size_t>& idx) {
    if (found) return;
    std::vector<Vec> cols;
    for (auto i : idx) cols.push_back(gens[i]);
    const auto x = solve_independent(cols, v);
    if (!x) return;
    bool nonneg = true;
    for (const auto& c : *x) nonneg = nonneg && c >= 0;
    found = nonneg;
  });
  return found;
}

/// Not pointed iff some circuit of at most d+1 generators carries a strictly
/// one-signed dependency.
inline bool pointed(const std::vector<Vec>& gens, std::size_t d) {
  bool line = false;
  for_each_subset(gens.size(), d + 1, [&](const std::vector<std::size_t>& idx) {
    if (line) return;
    std::vector<Vec> cols;
    for (auto i : idx) cols.push_back(gens[i]);
    const auto k = kernel(cols, d);
    if (k.size() != 1) return;
    bool pos = true, neg = true;
    for (const auto& c : k[0]) {
      pos = pos && c > 0;
      neg = neg && c < 0;
    }
    line = pos || neg;
  });
  return !line;
}

}  // namespace oracle
