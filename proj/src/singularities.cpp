#include "lcsurf/singularities.hpp"

#include <algorithm>

#include "lcsurf/error.hpp"

namespace lcsurf {

RationalVector discrepancies(const NormalSurface& surface, const Boundary& boundary, const Cluster& cluster) {
  const SmoothModel& model = surface.model;
  const auto& members = cluster.members;
  for (std::size_t m : members) {
    if (m >= model.size()) throw Error(ErrorKind::InvalidCluster, "cluster refers to a missing curve");
  }
  const SymMatrix block = model.intersections().principal_submatrix(members);
  if (!is_negative_definite(block)) {
    throw Error(ErrorKind::InvalidCluster, "cluster is not negative definite");
  }
  const RationalVector delta = boundary.as_vector(model.size());
  RationalVector rhs(members.size());
  for (std::size_t j = 0; j < members.size(); ++j) {
    Rational value = model.canonical_degree(members[j]);
    for (const auto& [curve, c] : boundary.coefficients()) value += c * model.dot(curve, members[j]);
    rhs[j] = value;
  }
  return solve_unique(block, rhs);
}

bool is_rational_cycle(const SmoothModel& model, std::span<const std::size_t> members) {
  if (members.size() < 2) return false;
  for (std::size_t a : members) {
    const Curve& c = model.curve(a);
    if (c.arithmetic_genus != 0) return false;
    Rational degree = 0;
    for (std::size_t b : members) {
      if (b != a) degree += model.dot(a, b);
    }
    if (degree != 2) return false;
  }
  return is_connected(model, members);
}

namespace {

bool boundary_meets(const SmoothModel& model, const Boundary& boundary, const Cluster& cluster) {
  for (const auto& [curve, c] : boundary.coefficients()) {
    if (c <= 0) continue;
    for (std::size_t m : cluster.members) {
      if (model.dot(curve, m) > 0) return true;
    }
  }
  return false;
}

}  // namespace

PointRecord classify_point(const NormalSurface& surface, const Boundary& boundary, const Cluster& cluster) {
  PointRecord record;
  record.cluster = cluster;
  record.discrepancies = discrepancies(surface, boundary, cluster);
  const auto& a = record.discrepancies;
  const Rational minus_one(-1);
  record.gorenstein_hint = std::all_of(a.begin(), a.end(), [](const Rational& v) { return is_integer(v); });

  const bool some_below = std::any_of(a.begin(), a.end(), [&](const Rational& v) { return v < minus_one; });
  const bool all_above = std::all_of(a.begin(), a.end(), [&](const Rational& v) { return v > minus_one; });
  const bool all_minus_one = std::all_of(a.begin(), a.end(), [&](const Rational& v) { return v == minus_one; });
  const SmoothModel& model = surface.model;

  if (some_below) {
    record.status = PointStatus::NotLc;
  } else if (all_above) {
    record.status = PointStatus::DltRational;
  } else if (all_minus_one && !boundary_meets(model, boundary, cluster)) {
    const bool single = cluster.members.size() == 1;
    const Curve* only = single ? &model.curve(cluster.members.front()) : nullptr;
    if (only && only->arithmetic_genus == 1 && only->geometric_genus == 1) {
      record.status = PointStatus::LcSimpleElliptic;
    } else if ((only && only->arithmetic_genus == 1 && only->geometric_genus == 0) ||
               is_rational_cycle(model, cluster.members)) {
      record.status = PointStatus::LcCusp;
    } else {
      record.status = PointStatus::LcRationalOther;
    }
  } else {
    record.status = PointStatus::LcRationalOther;
  }
  return record;
}

NormalSurface with_point_records(NormalSurface surface, const Boundary& boundary) {
  surface.point_records.clear();
  for (const Cluster& cluster : surface.clusters) {
    surface.point_records.push_back(classify_point(surface, boundary, cluster));
  }
  return surface;
}

BoundaryCompatibilityReport check_boundary_compatibility(const NormalSurface& surface, const Boundary& boundary) {
  BoundaryCompatibilityReport report;
  const SmoothModel& model = surface.model;
  for (std::size_t k = 0; k < surface.clusters.size(); ++k) {
    const Cluster& cluster = surface.clusters[k];
    const PointStatus intrinsic = classify_point(surface, Boundary{}, cluster).status;
    if (intrinsic != PointStatus::LcSimpleElliptic && intrinsic != PointStatus::LcCusp) continue;
    for (const auto& [curve, c] : boundary.coefficients()) {
      if (c <= 0) continue;
      const bool meets = std::any_of(cluster.members.begin(), cluster.members.end(),
                                     [&](std::size_t m) { return model.dot(curve, m) > 0; });
      if (!meets) continue;
      report.violations.push_back({k, curve, intrinsic, discrepancies(surface, boundary, cluster)});
    }
  }
  return report;
}

}  // namespace lcsurf
