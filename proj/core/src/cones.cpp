#include "cyclecone/cones.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "cyclecone/linalg.hpp"

namespace cyclecone {

Ray canonicalize(const ClassVector& v) {
  ExactRational largest = 0;
  for (const auto& c : v.coordinates) largest = std::max(largest, abs_value(c));
  if (largest == 0) throw std::invalid_argument("canonicalize: zero vector has no ray");
  ClassVector out{v.weight, {}};
  out.coordinates.reserve(v.dimension());
  for (const auto& c : v.coordinates) out.coordinates.emplace_back(c / largest);
  return Ray(std::move(out));
}

ExactRational ray_distance(const Ray& a, const Ray& b) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("ray_distance: dimension mismatch");
  ExactRational out = 0;
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    out = std::max(out, abs_value(a.canonical().coordinates[i] - b.canonical().coordinates[i]));
  }
  return out;
}

Ray omega_ray(int k) {
  const int d = dim_mk(k);
  if (d < 1) throw std::domain_error("omega_ray: M_" + std::to_string(k) + " is zero");
  return canonicalize(coordinates(omega_class(k), miller_basis(k, static_cast<std::size_t>(d))));
}

std::vector<ScanRow> convergence_scan(const MillerBasis& basis, const std::vector<std::uint64_t>& indices,
                                      bool use_primitive) {
  if (basis.dimension() == 0) throw std::domain_error("convergence_scan: empty modular form space");
  const std::uint64_t top = indices.empty() ? 0 : *std::max_element(indices.begin(), indices.end());
  if (basis.precision <= top) {
    throw std::out_of_range("convergence_scan: precision " + std::to_string(basis.precision) +
                            " does not cover m = " + std::to_string(top));
  }
  const Ray target = canonicalize(coordinates(omega_class(basis.weight), basis));
  std::vector<ScanRow> out;
  out.reserve(indices.size());
  for (const auto m : indices) {
    const auto combo = use_primitive ? primitive_heegner_class(m, basis.weight) : heegner_class(m, basis.weight);
    out.push_back({m, ray_distance(canonicalize(coordinates(combo, basis)), target)});
  }
  return out;
}

Cone::Cone(int weight, std::vector<ClassVector> generators)
    : weight_(weight), dimension_(generators.empty() ? 0 : generators.front().dimension()),
      generators_(std::move(generators)) {
  for (const auto& g : generators_) {
    if (g.dimension() != dimension_) throw std::invalid_argument("cone generators differ in dimension");
    if (g.is_zero()) throw std::invalid_argument("cone generator is zero");
  }
}

Cone accumulation_cone_model(const MillerBasis& basis, std::uint64_t max_m) {
  if (basis.dimension() == 0) throw std::domain_error("accumulation_cone_model: empty modular form space");
  std::vector<ClassVector> gens;
  gens.reserve(max_m + 1);
  gens.push_back(coordinates(omega_class(basis.weight), basis));
  for (std::uint64_t m = 1; m <= max_m; ++m) {
    gens.push_back(coordinates(primitive_heegner_class(m, basis.weight), basis));
  }
  return Cone(basis.weight, std::move(gens));
}

Cone accumulation_cone_model(int k, std::uint64_t max_m) {
  const auto d = static_cast<std::size_t>(std::max(1, dim_mk(k)));
  return accumulation_cone_model(miller_basis(k, std::max<std::size_t>(d, max_m + 1)), max_m);
}

std::optional<std::vector<ExactRational>> pointedness_witness(const Cone& cone) {
  LinearSystem system;
  system.variables = cone.dimension();
  for (const auto& g : cone.generators()) {
    system.constraints.push_back({g.coordinates, Relation::greater_equal, ExactRational(1)});
  }
  auto result = lp_feasible(system);
  if (!result.feasible) return std::nullopt;
  return std::move(result.witness);
}

bool is_pointed(const Cone& cone) { return pointedness_witness(cone).has_value(); }

namespace {

bool in_cone_of(const ClassVector& v, const std::vector<const ClassVector*>& gens) {
  LinearSystem system;
  system.variables = gens.size();
  system.nonnegative.assign(gens.size(), true);
  for (std::size_t r = 0; r < v.dimension(); ++r) {
    LinearConstraint row{std::vector<ExactRational>(gens.size()), Relation::equal, v.coordinates[r]};
    for (std::size_t j = 0; j < gens.size(); ++j) row.coefficients[j] = gens[j]->coordinates[r];
    system.constraints.push_back(std::move(row));
  }
  return lp_feasible(system).feasible;
}

}  // namespace

bool member(const ClassVector& v, const Cone& cone) {
  if (!cone.generators().empty() && v.dimension() != cone.dimension()) {
    throw std::invalid_argument("member: dimension mismatch");
  }
  std::vector<const ClassVector*> gens;
  for (const auto& g : cone.generators()) gens.push_back(&g);
  return in_cone_of(v, gens);
}

std::vector<std::size_t> extremal_generators(const Cone& cone) {
  if (!is_pointed(cone)) throw std::domain_error("extremal_generators: cone is not pointed");

  // Group generators lying on the same ray; the group keeps its first index.
  std::map<Ray, std::size_t> first_on_ray;
  std::vector<std::size_t> group_of(cone.generators().size());
  for (std::size_t j = 0; j < cone.generators().size(); ++j) {
    const auto [it, inserted] = first_on_ray.try_emplace(canonicalize(cone.generators()[j]), j);
    group_of[j] = it->second;
  }

  std::vector<std::size_t> out;
  for (const auto& [ray, rep] : first_on_ray) {
    std::vector<const ClassVector*> others;
    for (std::size_t j = 0; j < cone.generators().size(); ++j) {
      if (group_of[j] != rep) others.push_back(&cone.generators()[j]);
    }
    if (others.empty() || !in_cone_of(cone.generators()[rep], others)) out.push_back(rep);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Ray> extremal_rays(const Cone& cone) {
  std::vector<Ray> out;
  for (const auto j : extremal_generators(cone)) out.push_back(canonicalize(cone.generators()[j]));
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t span_dimension(const Cone& cone) {
  RationalMatrix rows;
  for (const auto& g : cone.generators()) rows.push_back(g.coordinates);
  return rank(std::move(rows));
}

}  // namespace cyclecone
