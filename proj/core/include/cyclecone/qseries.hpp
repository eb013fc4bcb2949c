#pragma once

// Truncated q-expansions of level-1 modular forms with exact coefficients.

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "cyclecone/rational.hpp"

namespace cyclecone {

/// f = sum_{j < N} a_j q^j + O(q^N) of a given even weight. The precision N
/// is the number of stored coefficients and is always >= 1.
class QSeries {
 public:
  QSeries(int weight, std::vector<ExactRational> coefficients);

  static QSeries zero(int weight, std::size_t precision);
  static QSeries one(std::size_t precision);

  int weight() const { return weight_; }
  std::size_t precision() const { return coefficients_.size(); }
  const ExactRational& operator[](std::size_t j) const { return coefficients_.at(j); }
  std::span<const ExactRational> coefficients() const { return coefficients_; }

  QSeries truncated(std::size_t precision) const;
  bool is_zero() const;

  friend bool operator==(const QSeries&, const QSeries&) = default;

 private:
  int weight_;
  std::vector<ExactRational> coefficients_;
};

/// Truncated Cauchy product; weights add, precision is the minimum.
QSeries multiply(const QSeries& a, const QSeries& b);
QSeries power(const QSeries& a, unsigned exponent);

/// sum_i scalars[i] * series[i]. All series must share one weight; the result
/// precision is the minimum. Throws std::invalid_argument on weight mismatch,
/// length mismatch or empty input.
QSeries linear_combine(std::span<const ExactRational> scalars, std::span<const QSeries> series);

/// Dimension of level-1 modular forms of weight k.
int dim_mk(int k);

/// Normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(m) q^m,
/// k even and >= 4.
QSeries eisenstein(int k, std::size_t precision);

/// Delta = (E_4^3 - E_6^2) / 1728.
QSeries delta(std::size_t precision);

/// Exponent pairs (a, b) with 4a + 6b = k, ordered by decreasing a.
std::vector<std::pair<int, int>> eisenstein_monomial_exponents(int k);

/// E_4^a E_6^b for every pair of eisenstein_monomial_exponents(k).
std::vector<QSeries> eisenstein_monomials(int k, std::size_t precision);

/// Echelon basis f_0..f_{d-1} of M_k with f_i = q^i + O(q^d).
struct MillerBasis {
  int weight = 0;
  std::size_t precision = 0;
  std::vector<QSeries> basis;

  std::size_t dimension() const { return basis.size(); }
  /// True iff the coefficient of q^j in f_i is the Kronecker delta for i, j < d.
  bool has_pivot_property() const;

  friend bool operator==(const MillerBasis&, const MillerBasis&) = default;
};

/// Odd k, k = 2 and k < 0 give a dimension-0 basis. Requires
/// precision >= max(1, dim_mk(k)).
MillerBasis miller_basis(int k, std::size_t precision);

/// Text format:
///   weight k, dimension d, precision N
///   followed by d lines of N rationals "p/q" separated by single spaces.
void write_miller_basis(std::ostream& out, const MillerBasis& basis);

/// Inverse of write_miller_basis. Throws std::runtime_error on malformed or
/// truncated input.
MillerBasis read_miller_basis(std::istream& in);

}  // namespace cyclecone
