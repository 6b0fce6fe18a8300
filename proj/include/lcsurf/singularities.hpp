#pragma once

#include "lcsurf/surface.hpp"

namespace lcsurf {

// Discrepancies a(E_i, X, Δ) of the members of `cluster`, solving
//   Σ_i a_i (E_i·E_j) = (K_Y + Δ̃)·E_j   for every member E_j.
// Throws Error(InvalidCluster) when the cluster is not negative definite.
RationalVector discrepancies(const NormalSurface& surface, const Boundary& boundary, const Cluster& cluster);

// Classification rules, in order:
//   some a_i < -1                                  -> not_lc
//   all a_i > -1                                   -> dlt_rational
//   all a_i = -1, single smooth elliptic curve     -> lc_simple_elliptic
//   all a_i = -1, cycle of smooth rational curves
//                 or a single nodal rational curve -> lc_cusp
//   otherwise                                      -> lc_rational_other
// The elliptic/cusp cases additionally require that no boundary component
// meets the cluster; otherwise the point lands in lc_rational_other.
PointRecord classify_point(const NormalSurface& surface, const Boundary& boundary, const Cluster& cluster);

// Copy of `surface` with point_records filled for every cluster.
NormalSurface with_point_records(NormalSurface surface, const Boundary& boundary);

// Cycle test on the dual multigraph (C_i·C_j counts edges): at least two
// smooth rational members, each of total degree 2, connected.
bool is_rational_cycle(const SmoothModel& model, std::span<const std::size_t> members);

struct BoundaryConflict {
  std::size_t cluster;
  std::size_t boundary_curve;
  PointStatus intrinsic_status;          // classification with Δ = 0
  RationalVector discrepancies_with_boundary;
};

struct BoundaryCompatibilityReport {
  std::vector<BoundaryConflict> violations;
  bool ok() const { return violations.empty(); }
};

// A boundary component with positive coefficient whose strict transform meets
// a simple elliptic or cusp cluster makes the pair non-lc there.
BoundaryCompatibilityReport check_boundary_compatibility(const NormalSurface& surface, const Boundary& boundary);

}  // namespace lcsurf
