#pragma once

// Even unimodular lattices of signature (n, 2), moment matrices of vector
// tuples and GL_2(Z) reduction of binary half-integral matrices.

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "cyclecone/rational.hpp"

namespace cyclecone {

/// Small dense integer matrix. Arithmetic that would overflow int64 throws
/// std::overflow_error.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  /// Throws std::invalid_argument on ragged input.
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::vector<std::int64_t>> to_rows() const;
  IntMatrix transposed() const;
  bool is_symmetric() const;
  /// Exact determinant of a square matrix (Bareiss elimination over BigInt).
  BigInt determinant() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Coordinates in the fixed basis of an EvenLattice.
struct LatticeVector {
  std::vector<std::int64_t> coords;

  std::size_t rank() const { return coords.size(); }
  friend LatticeVector operator*(std::int64_t s, const LatticeVector& v);
  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
};

/// Symmetric integral Gram matrix with even diagonal and determinant +-1.
///
/// Basis order of the lattices built here: e_1, f_1 (first hyperbolic plane),
/// e_2, f_2 (second hyperbolic plane), then 8 basis vectors per E_8 block in
/// Bourbaki order.
class EvenLattice {
 public:
  /// Throws std::invalid_argument unless gram is symmetric, even and
  /// unimodular.
  EvenLattice(IntMatrix gram, std::pair<int, int> signature);

  std::size_t rank() const { return gram_.rows(); }
  const IntMatrix& gram() const { return gram_; }
  std::pair<int, int> signature() const { return signature_; }

  LatticeVector basis_vector(std::size_t i) const;

 private:
  IntMatrix gram_;
  std::pair<int, int> signature_;
};

/// T in Lambda_d, stored as the integral matrix 2T (even diagonal).
class HalfIntegralMatrix {
 public:
  /// Throws std::invalid_argument unless doubled is square, symmetric and has
  /// an even diagonal.
  explicit HalfIntegralMatrix(IntMatrix doubled);

  std::size_t dimension() const { return doubled_.rows(); }
  const IntMatrix& doubled() const { return doubled_; }
  ExactRational entry(std::size_t i, std::size_t j) const;
  ExactRational determinant() const;

  friend bool operator==(const HalfIntegralMatrix&, const HalfIntegralMatrix&) = default;

 private:
  IntMatrix doubled_;
};

/// Gram matrix of E_8 (positive definite, determinant 1).
IntMatrix e8_gram();

/// U + U + E_8^{(n-2)/8}. Requires n = 2 (mod 8) and n >= 10.
EvenLattice build_even_unimodular(int n);

std::int64_t inner(const EvenLattice& lattice, const LatticeVector& a, const LatticeVector& b);
/// q(v) = (v, v) / 2, an integer since the lattice is even.
std::int64_t norm_q(const EvenLattice& lattice, const LatticeVector& v);

/// 2T with entries (lambda_i, lambda_j). Throws on an empty tuple.
HalfIntegralMatrix moment_matrix(const EvenLattice& lattice, std::span<const LatticeVector> tuple);

struct PrimitivePart {
  LatticeVector vector;
  std::int64_t multiplier = 1;
};

/// gcd of coordinates equals 1. Throws std::invalid_argument on zero.
bool is_primitive(const LatticeVector& v);
/// (v / t, t) with t the coordinate gcd.
PrimitivePart primitive_part(const LatticeVector& v);

/// e_1 + m f_1: primitive with q = m, for m >= 1. `block` selects the
/// hyperbolic plane (0 or 1).
LatticeVector vector_of_norm(const EvenLattice& lattice, std::int64_t m, bool require_primitive = true,
                             std::size_t block = 0);

/// All leading principal minors of T are positive.
bool is_positive_definite(const HalfIntegralMatrix& t);

struct Reduction {
  HalfIntegralMatrix reduced;
  IntMatrix u;  // u^T T u == reduced, det u = +-1
};

/// Reduced form of a positive definite binary T under T -> u^T T u,
/// u in GL_2(Z): 0 <= 2 T_12 <= T_11 <= T_22. Throws std::domain_error for
/// non-positive-definite input and std::invalid_argument for d != 2.
Reduction gauss_reduce(const HalfIntegralMatrix& t);

/// True iff 0 <= 2 T_12 <= T_11 <= T_22.
bool is_reduced(const HalfIntegralMatrix& t);

struct FamilyMember {
  std::int64_t j = 0;
  std::array<LatticeVector, 2> tuple;
  HalfIntegralMatrix moment{IntMatrix(2, 2)};
  ExactRational determinant;
  bool moment_is_expected_diagonal = false;
  bool span_matches_base = false;
};

struct CommonComponentFamily {
  LatticeVector lambda1;
  LatticeVector lambda2;
  std::int64_t lambda1_norm = 0;
  std::vector<FamilyMember> members;
  bool determinants_increasing = false;

  bool all_checks_pass() const;
};

/// Tuples (j lambda_1, lambda_2) for j = 1..j_max with lambda_2 = e_1 + m f_1
/// and lambda_1 = e_2 + f_2, which are orthogonal with q(lambda_1) = 1.
CommonComponentFamily common_component_family(const EvenLattice& lattice, std::int64_t m, std::int64_t j_max);

}  // namespace cyclecone
