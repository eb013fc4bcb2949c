#include "cyclecone/qseries.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "cyclecone/linalg.hpp"
#include "cyclecone/numtheory.hpp"

namespace cyclecone {

QSeries::QSeries(int weight, std::vector<ExactRational> coefficients)
    : weight_(weight), coefficients_(std::move(coefficients)) {
  if (weight_ < 0 || weight_ % 2 != 0) {
    throw std::invalid_argument("q-series weight must be even and nonnegative, got " +
                                std::to_string(weight_));
  }
  if (coefficients_.empty()) throw std::invalid_argument("q-series precision must be >= 1");
}

QSeries QSeries::zero(int weight, std::size_t precision) {
  return QSeries(weight, std::vector<ExactRational>(precision));
}

QSeries QSeries::one(std::size_t precision) {
  std::vector<ExactRational> c(precision);
  if (!c.empty()) c[0] = 1;
  return QSeries(0, std::move(c));
}

QSeries QSeries::truncated(std::size_t precision) const {
  if (precision > this->precision()) {
    throw std::invalid_argument("cannot extend a q-series beyond its precision");
  }
  return QSeries(weight_, {coefficients_.begin(), coefficients_.begin() + static_cast<std::ptrdiff_t>(precision)});
}

bool QSeries::is_zero() const {
  return std::all_of(coefficients_.begin(), coefficients_.end(),
                     [](const ExactRational& c) { return c == 0; });
}

QSeries multiply(const QSeries& a, const QSeries& b) {
  const std::size_t n = std::min(a.precision(), b.precision());
  std::vector<ExactRational> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < n; ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return QSeries(a.weight() + b.weight(), std::move(out));
}

QSeries power(const QSeries& a, unsigned exponent) {
  QSeries result = QSeries::one(a.precision());
  QSeries base = a;
  // Square-and-multiply; weights track through multiply.
  while (exponent > 0) {
    if (exponent & 1U) result = multiply(result, base);
    exponent >>= 1U;
    if (exponent > 0) base = multiply(base, base);
  }
  return result;
}

QSeries linear_combine(std::span<const ExactRational> scalars, std::span<const QSeries> series) {
  if (series.empty()) throw std::invalid_argument("linear_combine: no series");
  if (scalars.size() != series.size()) {
    throw std::invalid_argument("linear_combine: scalar/series count mismatch");
  }
  const int weight = series.front().weight();
  std::size_t n = series.front().precision();
  for (const auto& s : series) {
    if (s.weight() != weight) throw std::invalid_argument("linear_combine: weight mismatch");
    n = std::min(n, s.precision());
  }
  std::vector<ExactRational> out(n);
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (scalars[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) out[j] += scalars[i] * series[i][j];
  }
  return QSeries(weight, std::move(out));
}

int dim_mk(int k) {
  if (k < 0 || k % 2 != 0 || k == 2) return 0;
  return k / 12 + (k % 12 == 2 ? 0 : 1);
}

QSeries eisenstein(int k, std::size_t precision) {
  if (k < 4 || k % 2 != 0) {
    throw std::invalid_argument("eisenstein: weight must be even and >= 4, got " + std::to_string(k));
  }
  if (precision == 0) throw std::invalid_argument("eisenstein: precision must be >= 1");
  const ExactRational factor = -2 * k / bernoulli(static_cast<unsigned>(k));
  std::vector<ExactRational> c(precision);
  c[0] = 1;
  for (std::size_t m = 1; m < precision; ++m) {
    c[m] = factor * ExactRational(sigma(static_cast<unsigned>(k - 1), m));
  }
  return QSeries(k, std::move(c));
}

QSeries delta(std::size_t precision) {
  const QSeries e4 = eisenstein(4, precision);
  const QSeries e6 = eisenstein(6, precision);
  const std::vector<ExactRational> scalars{ExactRational(1, 1728), ExactRational(-1, 1728)};
  const std::vector<QSeries> parts{power(e4, 3), power(e6, 2)};
  return linear_combine(scalars, parts);
}

std::vector<std::pair<int, int>> eisenstein_monomial_exponents(int k) {
  std::vector<std::pair<int, int>> out;
  if (k < 0 || k % 2 != 0) return out;
  for (int a = k / 4; a >= 0; --a) {
    const int rest = k - 4 * a;
    if (rest % 6 == 0) out.emplace_back(a, rest / 6);
  }
  return out;
}

std::vector<QSeries> eisenstein_monomials(int k, std::size_t precision) {
  const auto exponents = eisenstein_monomial_exponents(k);
  std::vector<QSeries> out;
  if (exponents.empty()) return out;
  const QSeries e4 = eisenstein(4, precision);
  const QSeries e6 = eisenstein(6, precision);
  // Incremental powers keep the work linear in the number of monomials.
  std::vector<QSeries> e4_powers{QSeries::one(precision)};
  std::vector<QSeries> e6_powers{QSeries::one(precision)};
  for (const auto& [a, b] : exponents) {
    while (static_cast<int>(e4_powers.size()) <= a) e4_powers.push_back(multiply(e4_powers.back(), e4));
    while (static_cast<int>(e6_powers.size()) <= b) e6_powers.push_back(multiply(e6_powers.back(), e6));
    out.push_back(multiply(e4_powers[static_cast<std::size_t>(a)], e6_powers[static_cast<std::size_t>(b)]));
  }
  return out;
}

bool MillerBasis::has_pivot_property() const {
  const std::size_t d = dimension();
  if (precision < d) return false;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (basis[i][j] != (i == j ? 1 : 0)) return false;
    }
  }
  return true;
}

MillerBasis miller_basis(int k, std::size_t precision) {
  const int d = dim_mk(k);
  if (precision < static_cast<std::size_t>(std::max(1, d))) {
    throw std::invalid_argument("miller_basis: precision " + std::to_string(precision) +
                                " below required " + std::to_string(std::max(1, d)));
  }
  MillerBasis out{k, precision, {}};
  if (d == 0) return out;

  const auto monomials = eisenstein_monomials(k, precision);
  RationalMatrix rows;
  rows.reserve(monomials.size());
  for (const auto& f : monomials) rows.emplace_back(f.coefficients().begin(), f.coefficients().end());

  const auto pivots = reduce_to_echelon(rows);
  if (pivots.size() != static_cast<std::size_t>(d)) {
    throw std::logic_error("miller_basis: monomial rank does not match dim M_k");
  }
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] != i) throw std::logic_error("miller_basis: pivot outside the leading block");
  }
  for (auto& row : rows) out.basis.emplace_back(k, std::move(row));
  return out;
}

void write_miller_basis(std::ostream& out, const MillerBasis& basis) {
  out << "weight " << basis.weight << ", dimension " << basis.dimension() << ", precision "
      << basis.precision << '\n';
  for (const auto& f : basis.basis) {
    for (std::size_t j = 0; j < f.precision(); ++j) {
      if (j > 0) out << ' ';
      out << to_string(f[j]);
    }
    out << '\n';
  }
}

MillerBasis read_miller_basis(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw std::runtime_error("miller basis: missing header");
  int weight = 0;
  long long dimension = -1;
  long long precision = -1;
  char tail = 0;
  if (std::sscanf(header.c_str(), "weight %d, dimension %lld, precision %lld%c", &weight, &dimension,
                  &precision, &tail) != 3 ||
      dimension < 0 || precision < 1) {
    throw std::runtime_error("miller basis: malformed header '" + header + "'");
  }
  if (dimension != dim_mk(weight)) throw std::runtime_error("miller basis: dimension does not match weight");

  MillerBasis out{weight, static_cast<std::size_t>(precision), {}};
  for (long long i = 0; i < dimension; ++i) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("miller basis: truncated body");
    std::vector<ExactRational> coefficients;
    coefficients.reserve(out.precision);
    std::size_t start = 0;
    while (start <= line.size()) {
      const auto end = std::min(line.find(' ', start), line.size());
      try {
        coefficients.push_back(parse_rational(std::string_view(line).substr(start, end - start)));
      } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("miller basis: ") + e.what());
      }
      start = end + 1;
    }
    if (coefficients.size() != out.precision) {
      throw std::runtime_error("miller basis: row " + std::to_string(i) + " has wrong length");
    }
    out.basis.emplace_back(weight, std::move(coefficients));
  }
  std::string extra;
  if (std::getline(in, extra)) throw std::runtime_error("miller basis: trailing data");
  return out;
}

}  // namespace cyclecone
