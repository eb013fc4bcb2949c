#include "cyclecone/lattice.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclecone/linalg.hpp"

namespace cyclecone {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in lattice arithmetic");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("int64 overflow in lattice arithmetic");
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix out(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged integer matrix");
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rows[i][j];
  }
  return out;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  }
  return out;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  }
  return out;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

BigInt IntMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>((*this)(i, j));
  }
  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // Bareiss: the division is exact.
        BigInt num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), previous.get_mpz_t());
      }
    }
    previous = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = checked_add(out(i, j), checked_mul(a(i, k), b(k, j)));
    }
  }
  return out;
}

LatticeVector operator*(std::int64_t s, const LatticeVector& v) {
  LatticeVector out{v.coords};
  for (auto& c : out.coords) c = checked_mul(s, c);
  return out;
}

LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("lattice vector rank mismatch");
  LatticeVector out{a.coords};
  for (std::size_t i = 0; i < out.rank(); ++i) out.coords[i] = checked_add(out.coords[i], b.coords[i]);
  return out;
}

EvenLattice::EvenLattice(IntMatrix gram, std::pair<int, int> signature)
    : gram_(std::move(gram)), signature_(signature) {
  if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix is not symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i) {
    if (gram_(i, i) % 2 != 0) throw std::invalid_argument("Gram matrix has an odd diagonal entry");
  }
  if (static_cast<std::size_t>(signature_.first + signature_.second) != gram_.rows()) {
    throw std::invalid_argument("signature does not match rank");
  }
  const BigInt det = gram_.determinant();
  if (det != 1 && det != -1) throw std::invalid_argument("Gram matrix is not unimodular");
}

LatticeVector EvenLattice::basis_vector(std::size_t i) const {
  LatticeVector v{std::vector<std::int64_t>(rank(), 0)};
  v.coords.at(i) = 1;
  return v;
}

HalfIntegralMatrix::HalfIntegralMatrix(IntMatrix doubled) : doubled_(std::move(doubled)) {
  if (!doubled_.is_symmetric()) throw std::invalid_argument("half-integral matrix must be square and symmetric");
  for (std::size_t i = 0; i < doubled_.rows(); ++i) {
    if (doubled_(i, i) % 2 != 0) throw std::invalid_argument("half-integral matrix needs an integral diagonal");
  }
}

ExactRational HalfIntegralMatrix::entry(std::size_t i, std::size_t j) const {
  return make_rational(static_cast<long>(doubled_(i, j)), 2);
}

ExactRational HalfIntegralMatrix::determinant() const {
  BigInt scale = 1;
  scale <<= static_cast<mp_bitcnt_t>(dimension());
  return make_rational(doubled_.determinant(), scale);
}

IntMatrix e8_gram() {
  IntMatrix g(8, 8);
  for (std::size_t i = 0; i < 8; ++i) g(i, i) = 2;
  // Bourbaki labels 1..8: chain 1-3-4-5-6-7-8 with node 2 attached to 4.
  constexpr std::pair<int, int> edges[] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& [a, b] : edges) {
    g(a - 1, b - 1) = -1;
    g(b - 1, a - 1) = -1;
  }
  return g;
}

EvenLattice build_even_unimodular(int n) {
  if (n < 10 || (n - 2) % 8 != 0) {
    throw std::invalid_argument("no even unimodular lattice of signature (" + std::to_string(n) +
                                ", 2) in this construction: need n = 2 mod 8 and n >= 10");
  }
  const auto rank = static_cast<std::size_t>(n + 2);
  IntMatrix gram(rank, rank);
  for (std::size_t block = 0; block < 2; ++block) {
    gram(2 * block, 2 * block + 1) = 1;
    gram(2 * block + 1, 2 * block) = 1;
  }
  const IntMatrix e8 = e8_gram();
  for (std::size_t offset = 4; offset < rank; offset += 8) {
    for (std::size_t i = 0; i < 8; ++i) {
      for (std::size_t j = 0; j < 8; ++j) gram(offset + i, offset + j) = e8(i, j);
    }
  }
  return EvenLattice(std::move(gram), {n, 2});
}

std::int64_t inner(const EvenLattice& lattice, const LatticeVector& a, const LatticeVector& b) {
  if (a.rank() != lattice.rank() || b.rank() != lattice.rank()) {
    throw std::invalid_argument("inner: vector rank does not match lattice rank");
  }
  const auto& g = lattice.gram();
  std::int64_t out = 0;
  for (std::size_t i = 0; i < lattice.rank(); ++i) {
    if (a.coords[i] == 0) continue;
    std::int64_t row = 0;
    for (std::size_t j = 0; j < lattice.rank(); ++j) {
      if (g(i, j) != 0 && b.coords[j] != 0) row = checked_add(row, checked_mul(g(i, j), b.coords[j]));
    }
    out = checked_add(out, checked_mul(a.coords[i], row));
  }
  return out;
}

std::int64_t norm_q(const EvenLattice& lattice, const LatticeVector& v) { return inner(lattice, v, v) / 2; }

HalfIntegralMatrix moment_matrix(const EvenLattice& lattice, std::span<const LatticeVector> tuple) {
  if (tuple.empty()) throw std::invalid_argument("moment_matrix: empty tuple");
  IntMatrix doubled(tuple.size(), tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i; j < tuple.size(); ++j) {
      doubled(i, j) = inner(lattice, tuple[i], tuple[j]);
      doubled(j, i) = doubled(i, j);
    }
  }
  return HalfIntegralMatrix(std::move(doubled));
}

namespace {

std::int64_t coordinate_gcd(const LatticeVector& v) {
  std::int64_t g = 0;
  for (const auto c : v.coords) g = std::gcd(g, c);
  if (g == 0) throw std::invalid_argument("zero lattice vector has no primitive part");
  return g;
}

}  // namespace

bool is_primitive(const LatticeVector& v) { return coordinate_gcd(v) == 1; }

PrimitivePart primitive_part(const LatticeVector& v) {
  const std::int64_t t = coordinate_gcd(v);
  PrimitivePart out{v, t};
  for (auto& c : out.vector.coords) c /= t;
  return out;
}

LatticeVector vector_of_norm(const EvenLattice& lattice, std::int64_t m, bool /*require_primitive*/,
                             std::size_t block) {
  if (m < 1) throw std::invalid_argument("vector_of_norm: m must be >= 1");
  if (block > 1) throw std::invalid_argument("vector_of_norm: only hyperbolic blocks 0 and 1 exist");
  // e + m f is always primitive (its e-coordinate is 1).
  LatticeVector v = lattice.basis_vector(2 * block);
  v.coords[2 * block + 1] = m;
  return v;
}

bool is_positive_definite(const HalfIntegralMatrix& t) {
  const auto& d = t.doubled();
  for (std::size_t k = 1; k <= t.dimension(); ++k) {
    IntMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor(i, j) = d(i, j);
    }
    if (minor.determinant() <= 0) return false;
  }
  return true;
}

bool is_reduced(const HalfIntegralMatrix& t) {
  if (t.dimension() != 2) return false;
  const auto& d = t.doubled();
  const std::int64_t a = d(0, 0), b = d(0, 1), c = d(1, 1);
  return 0 <= b && 2 * b <= a && a <= c;
}

Reduction gauss_reduce(const HalfIntegralMatrix& t) {
  if (t.dimension() != 2) throw std::invalid_argument("gauss_reduce: only binary matrices are supported");
  if (!is_positive_definite(t)) throw std::domain_error("gauss_reduce: matrix is not positive definite");

  // Work on 2T = [[a, b], [b, c]]; the target is 0 <= 2b <= a <= c.
  std::int64_t a = t.doubled()(0, 0), b = t.doubled()(0, 1), c = t.doubled()(1, 1);
  IntMatrix u = IntMatrix::identity(2);

  for (;;) {
    if (a > c) {
      std::swap(a, c);
      u = u * IntMatrix::from_rows({{0, 1}, {1, 0}});
    }
    const std::int64_t shift = floor_div(checked_add(a, -2 * b), checked_mul(2, a));
    if (shift != 0) {
      // u <- u [[1, s], [0, 1]]
      c = checked_add(c, checked_add(checked_mul(2 * shift, b), checked_mul(checked_mul(shift, shift), a)));
      b = checked_add(b, checked_mul(shift, a));
      u = u * IntMatrix::from_rows({{1, shift}, {0, 1}});
    }
    if (2 * (b < 0 ? -b : b) <= a && a <= c) break;
  }
  if (b < 0) {
    b = -b;
    u = u * IntMatrix::from_rows({{1, 0}, {0, -1}});
  }
  return {HalfIntegralMatrix(IntMatrix::from_rows({{a, b}, {b, c}})), u};
}

bool CommonComponentFamily::all_checks_pass() const {
  if (!determinants_increasing) return false;
  for (const auto& member : members) {
    if (!member.moment_is_expected_diagonal || !member.span_matches_base) return false;
  }
  return true;
}

namespace {

RationalMatrix as_rational_rows(std::span<const LatticeVector> vectors) {
  RationalMatrix rows;
  for (const auto& v : vectors) {
    std::vector<ExactRational> row;
    for (const auto c : v.coords) row.emplace_back(static_cast<long>(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

CommonComponentFamily common_component_family(const EvenLattice& lattice, std::int64_t m, std::int64_t j_max) {
  if (m < 1) throw std::invalid_argument("common_component_family: m must be >= 1");
  if (j_max < 2) throw std::invalid_argument("common_component_family: j_max must be >= 2");

  CommonComponentFamily family;
  family.lambda2 = vector_of_norm(lattice, m, true, 0);
  family.lambda1 = vector_of_norm(lattice, 1, true, 1);
  family.lambda1_norm = norm_q(lattice, family.lambda1);

  const std::array<LatticeVector, 2> base{family.lambda1, family.lambda2};
  const RationalMatrix base_span = echelon_basis(as_rational_rows(base));

  family.determinants_increasing = true;
  for (std::int64_t j = 1; j <= j_max; ++j) {
    FamilyMember member;
    member.j = j;
    member.tuple = {j * family.lambda1, family.lambda2};
    member.moment = moment_matrix(lattice, member.tuple);
    member.determinant = member.moment.determinant();

    const auto expected = HalfIntegralMatrix(
        IntMatrix::from_rows({{checked_mul(2, checked_mul(j * j, family.lambda1_norm)), 0}, {0, 2 * m}}));
    member.moment_is_expected_diagonal = member.moment == expected;
    member.span_matches_base = echelon_basis(as_rational_rows(member.tuple)) == base_span;

    if (!family.members.empty() && !(family.members.back().determinant < member.determinant)) {
      family.determinants_increasing = false;
    }
    family.members.push_back(std::move(member));
  }
  return family;
}

}  // namespace cyclecone
