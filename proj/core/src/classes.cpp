#include "cyclecone/classes.hpp"

#include <algorithm>

#include "cyclecone/numtheory.hpp"

namespace cyclecone {

bool ClassVector::is_zero() const {
  return std::all_of(coordinates.begin(), coordinates.end(), [](const ExactRational& c) { return c == 0; });
}

FunctionalCombo heegner_class(std::uint64_t m, int k) {
  if (m == 0) throw std::invalid_argument("heegner_class: m must be >= 1");
  FunctionalCombo out(k);
  out.add(m, 1);
  return out;
}

FunctionalCombo omega_class(int k) {
  FunctionalCombo out(k);
  out.add(0, -1);
  return out;
}

FunctionalCombo primitive_heegner_class(std::uint64_t m, int k) {
  if (m == 0) throw std::invalid_argument("primitive_heegner_class: m must be >= 1");
  FunctionalCombo out(k);
  for (const auto t : square_divisors(m)) out.add(m / (t * t), moebius(t));
  return out;
}

FunctionalCombo heegner_from_primitive(std::uint64_t m, int k) {
  if (m == 0) throw std::invalid_argument("heegner_from_primitive: m must be >= 1");
  FunctionalCombo out(k);
  for (const auto t : square_divisors(m)) out += primitive_heegner_class(m / (t * t), k);
  return out;
}

PrimitiveCombo to_primitive_indexing(const FunctionalCombo& combo) {
  PrimitiveCombo out(combo.weight());
  for (const auto& [m, a] : combo.terms()) {
    if (m == 0) {
      out.add(0, a);
      continue;
    }
    for (const auto t : square_divisors(m)) out.add(m / (t * t), a);
  }
  return out;
}

FunctionalCombo to_coefficient_indexing(const PrimitiveCombo& combo) {
  FunctionalCombo out(combo.weight());
  for (const auto& [m, a] : combo.terms()) {
    if (m == 0) {
      out.add(0, a);
      continue;
    }
    for (const auto t : square_divisors(m)) out.add(m / (t * t), a * moebius(t));
  }
  return out;
}

ClassVector coordinates(const FunctionalCombo& combo, const MillerBasis& basis) {
  if (combo.weight() != basis.weight) throw std::invalid_argument("coordinates: weight mismatch");
  if (!combo.empty() && basis.precision <= combo.max_index()) {
    throw std::out_of_range("coordinates: basis precision " + std::to_string(basis.precision) +
                            " does not cover index " + std::to_string(combo.max_index()));
  }
  ClassVector out{basis.weight, std::vector<ExactRational>(basis.dimension())};
  for (std::size_t i = 0; i < basis.dimension(); ++i) {
    for (const auto& [m, a] : combo.terms()) out.coordinates[i] += a * basis.basis[i][m];
  }
  return out;
}

ExactRational evaluate(const FunctionalCombo& combo, const QSeries& f) {
  if (combo.weight() != f.weight()) throw std::invalid_argument("evaluate: weight mismatch");
  if (!combo.empty() && f.precision() <= combo.max_index()) {
    throw std::out_of_range("evaluate: series precision " + std::to_string(f.precision()) +
                            " does not cover index " + std::to_string(combo.max_index()));
  }
  ExactRational out = 0;
  for (const auto& [m, a] : combo.terms()) out += a * f[m];
  return out;
}

ExactRational evaluate(const ClassVector& v, const QSeries& f) {
  if (v.weight != f.weight()) throw std::invalid_argument("evaluate: weight mismatch");
  if (f.precision() < v.dimension()) throw std::out_of_range("evaluate: series precision below dimension");
  ExactRational out = 0;
  for (std::size_t i = 0; i < v.dimension(); ++i) out += v.coordinates[i] * f[i];
  return out;
}

std::string to_record(const IdentityReport& report) {
  return std::to_string(report.m) + "," + std::to_string(report.n) + "," + to_string(report.lhs) + "," +
         to_string(report.rhs) + "," + (report.equal ? "true" : "false");
}

int weight_from_signature(int n) {
  if (n % 2 != 0) throw std::invalid_argument("n must be even, got " + std::to_string(n));
  const int k = 1 + n / 2;
  if (k % 2 != 0 || k < 4) {
    throw std::invalid_argument("weight 1 + n/2 = " + std::to_string(k) + " is not even and >= 4");
  }
  return k;
}

namespace {

const QSeries& require_eisenstein(const QSeries& e, int k, std::uint64_t m) {
  if (e.weight() != k) throw std::invalid_argument("Eisenstein series has the wrong weight");
  if (e.precision() <= m) throw std::out_of_range("Eisenstein series precision does not cover index");
  return e;
}

}  // namespace

IdentityReport eisenstein_coefficient_identity(std::uint64_t m, int n) {
  return eisenstein_coefficient_identity(m, n, eisenstein(weight_from_signature(n), m + 1));
}

IdentityReport eisenstein_coefficient_identity(std::uint64_t m, int n, const QSeries& eisenstein_series) {
  const int k = weight_from_signature(n);
  if (m == 0) throw std::invalid_argument("identity index m must be >= 1");
  const auto s = static_cast<unsigned>(n / 2);
  IdentityReport r{m, n, evaluate(heegner_class(m, k), require_eisenstein(eisenstein_series, k, m)),
                   ExactRational(2 * ExactRational(sigma(s, m)) / zeta_negative(s)), false};
  r.equal = r.lhs == r.rhs;
  return r;
}

IdentityReport primitive_eisenstein_identity(std::uint64_t m, int n) {
  return primitive_eisenstein_identity(m, n, eisenstein(weight_from_signature(n), m + 1));
}

IdentityReport primitive_eisenstein_identity(std::uint64_t m, int n, const QSeries& eisenstein_series) {
  const int k = weight_from_signature(n);
  if (m == 0) throw std::invalid_argument("identity index m must be >= 1");
  const auto s = static_cast<unsigned>(n / 2);

  // Closed form: (2 m^s / zeta(-s)) prod_{p | m} (1 + p^{-s}).
  BigInt m_power;
  mpz_ui_pow_ui(m_power.get_mpz_t(), m, s);
  ExactRational rhs = 2 * ExactRational(m_power) / zeta_negative(s);
  for (const auto& [p, e] : factorize(m)) {
    BigInt p_power;
    mpz_ui_pow_ui(p_power.get_mpz_t(), p, s);
    rhs *= 1 + ExactRational(1) / ExactRational(p_power);
  }

  IdentityReport r{m, n, evaluate(primitive_heegner_class(m, k), require_eisenstein(eisenstein_series, k, m)),
                   rhs, false};
  r.equal = r.lhs == r.rhs;
  return r;
}

ExactRational limit_prefactor(unsigned r, unsigned r_prime) {
  if (r > r_prime) throw std::invalid_argument("limit_prefactor: requires r <= r'");
  return make_rational(factorial(r), factorial(r_prime));
}

}  // namespace cyclecone
