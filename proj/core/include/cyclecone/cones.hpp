#pragma once

// Rays and finitely generated rational cones in the coordinates of M_k^*.
// Rays are oriented: they are normalized by a positive scalar only.

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclecone/classes.hpp"
#include "cyclecone/lp.hpp"
#include "cyclecone/qseries.hpp"
#include "cyclecone/rational.hpp"

namespace cyclecone {

/// Canonical representative of R_{>=0} v: v scaled so its largest absolute
/// coordinate is exactly 1.
class Ray {
 public:
  int weight() const { return canonical_.weight; }
  std::size_t dimension() const { return canonical_.dimension(); }
  const ClassVector& canonical() const { return canonical_; }

  friend bool operator==(const Ray&, const Ray&) = default;
  friend auto operator<=>(const Ray& a, const Ray& b) {
    return a.canonical_.coordinates <=> b.canonical_.coordinates;
  }

 private:
  explicit Ray(ClassVector v) : canonical_(std::move(v)) {}
  friend Ray canonicalize(const ClassVector& v);

  ClassVector canonical_;
};

/// Throws std::invalid_argument on the zero vector.
Ray canonicalize(const ClassVector& v);

/// L-infinity distance of canonical representatives.
ExactRational ray_distance(const Ray& a, const Ray& b);

/// Ray of the Kaehler class, canonically -e_0. Requires dim M_k >= 1.
Ray omega_ray(int k);

struct ScanRow {
  std::uint64_t m = 0;
  ExactRational distance;
};

/// Distance from the ray of P_m (or H_m when use_primitive is false) to the
/// omega ray for every m in `indices`. Requires basis.precision > max index.
std::vector<ScanRow> convergence_scan(const MillerBasis& basis, const std::vector<std::uint64_t>& indices,
                                      bool use_primitive);

/// Generators are nonzero and share one dimension.
class Cone {
 public:
  Cone(int weight, std::vector<ClassVector> generators);

  int weight() const { return weight_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<ClassVector>& generators() const { return generators_; }

 private:
  int weight_;
  std::size_t dimension_;
  std::vector<ClassVector> generators_;
};

/// Cone on the omega class and the primitive classes P_1..P_M, in that order.
/// Requires basis.precision > M.
Cone accumulation_cone_model(const MillerBasis& basis, std::uint64_t max_m);
Cone accumulation_cone_model(int k, std::uint64_t max_m);

/// A y with <y, g> >= 1 for every generator, if one exists.
std::optional<std::vector<ExactRational>> pointedness_witness(const Cone& cone);
bool is_pointed(const Cone& cone);

/// v is a nonnegative combination of the generators.
bool member(const ClassVector& v, const Cone& cone);

/// One index per extremal ray (the first generator on that ray), ascending.
/// Throws std::domain_error for a cone that is not pointed.
std::vector<std::size_t> extremal_generators(const Cone& cone);

/// Canonical rays of the extremal generators, sorted.
std::vector<Ray> extremal_rays(const Cone& cone);

std::size_t span_dimension(const Cone& cone);

}  // namespace cyclecone
