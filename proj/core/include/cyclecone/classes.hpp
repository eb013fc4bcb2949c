#pragma once

// Cohomology classes of Heegner divisors, primitive Heegner divisors and the
// Kaehler class, represented by their preimages in the dual of M_k: finite
// combinations of the coefficient functionals c_m.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclecone/qseries.hpp"
#include "cyclecone/rational.hpp"

namespace cyclecone {

struct CoefficientIndexing {};
struct PrimitiveIndexing {};

/// Sparse combination sum_m a_m X_m of weight-k classes. With
/// CoefficientIndexing, X_m is c_m (= [H_m] for m >= 1, c_0 = -[omega]);
/// with PrimitiveIndexing, X_m is the primitive Heegner class [P_m] for
/// m >= 1 and X_0 is c_0. Zero coefficients are never stored.
template <typename Indexing>
class IndexedCombo {
 public:
  using Terms = std::map<std::uint64_t, ExactRational>;

  explicit IndexedCombo(int weight) : weight_(weight) {}
  IndexedCombo(int weight, const Terms& terms) : weight_(weight) {
    for (const auto& [m, a] : terms) add(m, a);
  }

  int weight() const { return weight_; }
  const Terms& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  ExactRational coefficient(std::uint64_t m) const {
    const auto it = terms_.find(m);
    return it == terms_.end() ? ExactRational(0) : it->second;
  }

  std::uint64_t max_index() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  void add(std::uint64_t m, const ExactRational& a) {
    if (a == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, a);
    if (!inserted) {
      it->second += a;
      if (it->second == 0) terms_.erase(it);
    }
  }

  IndexedCombo& operator+=(const IndexedCombo& other) {
    if (other.weight_ != weight_) throw std::invalid_argument("combo weight mismatch");
    for (const auto& [m, a] : other.terms_) add(m, a);
    return *this;
  }

  friend IndexedCombo operator+(IndexedCombo lhs, const IndexedCombo& rhs) { return lhs += rhs; }

  friend IndexedCombo operator*(const ExactRational& s, const IndexedCombo& c) {
    IndexedCombo out(c.weight_);
    for (const auto& [m, a] : c.terms_) out.add(m, s * a);
    return out;
  }

  friend bool operator==(const IndexedCombo&, const IndexedCombo&) = default;

 private:
  int weight_;
  Terms terms_;
};

using FunctionalCombo = IndexedCombo<CoefficientIndexing>;
using PrimitiveCombo = IndexedCombo<PrimitiveIndexing>;

/// Coordinates of a functional in the basis of M_k^* dual to the Miller basis.
struct ClassVector {
  int weight = 0;
  std::vector<ExactRational> coordinates;

  std::size_t dimension() const { return coordinates.size(); }
  bool is_zero() const;

  friend bool operator==(const ClassVector&, const ClassVector&) = default;
};

/// c_m, the preimage of [H_m]. m >= 1.
FunctionalCombo heegner_class(std::uint64_t m, int k);

/// -c_0, the preimage of [omega].
FunctionalCombo omega_class(int k);

/// P_m = sum_{t^2 | m} mu(t) H_{m/t^2}.
FunctionalCombo primitive_heegner_class(std::uint64_t m, int k);

/// H_m = sum_{t^2 | m} P_{m/t^2}, each P expanded back into c-functionals.
FunctionalCombo heegner_from_primitive(std::uint64_t m, int k);

/// Rewrites a combination of H_m (m >= 1) in terms of P_m. The c_0 term is
/// carried over unchanged.
PrimitiveCombo to_primitive_indexing(const FunctionalCombo& combo);

/// Rewrites a combination of P_m in terms of c_m. The index-0 term is carried
/// over unchanged.
FunctionalCombo to_coefficient_indexing(const PrimitiveCombo& combo);

/// coordinate i = sum_m a_m * [q^m] f_i. Requires basis.precision > max index
/// and matching weight.
ClassVector coordinates(const FunctionalCombo& combo, const MillerBasis& basis);

/// sum_m a_m * [q^m] f.
ExactRational evaluate(const FunctionalCombo& combo, const QSeries& f);

/// Evaluates a coordinate vector on f given in the same Miller basis:
/// f = sum_i b_i f_i is recovered from the first d coefficients of f.
ExactRational evaluate(const ClassVector& v, const QSeries& f);

struct IdentityReport {
  std::uint64_t m = 0;
  int n = 0;
  ExactRational lhs;
  ExactRational rhs;
  bool equal = false;
};

/// One CSV record "m,n,lhs,rhs,equal" with rationals as p/q and no newline.
std::string to_record(const IdentityReport& report);

/// Weight 1 + n/2 of the Eisenstein series attached to signature (n, 2).
/// Throws std::invalid_argument unless it is even and >= 4.
int weight_from_signature(int n);

/// c_m(E_k) from the q-expansion against 2 sigma_{n/2}(m) / zeta(-n/2).
IdentityReport eisenstein_coefficient_identity(std::uint64_t m, int n);
/// Same, reusing a precomputed E_{1+n/2} of precision > m.
IdentityReport eisenstein_coefficient_identity(std::uint64_t m, int n, const QSeries& eisenstein_series);

/// P_m evaluated on E_k against (2 m^{n/2} / zeta(-n/2)) prod_{p | m} (1 + p^{-n/2}).
IdentityReport primitive_eisenstein_identity(std::uint64_t m, int n);
IdentityReport primitive_eisenstein_identity(std::uint64_t m, int n, const QSeries& eisenstein_series);

/// r! / r'! for 1 <= r <= r'. Throws std::invalid_argument if r > r'.
ExactRational limit_prefactor(unsigned r, unsigned r_prime);

}  // namespace cyclecone
