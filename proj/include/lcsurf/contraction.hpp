#pragma once

#include <tuple>

#include "lcsurf/mumford.hpp"

namespace lcsurf {

struct ContractionCertificate {
  std::size_t curve = 0;     // contracted curve (index on the smooth model)
  Rational self_int;         // C² in the sense of Mumford
  Rational kdelta_deg;       // (K + Δ)·C
  PointRecord new_point;     // classification of the point C maps to
  std::vector<std::size_t> absorbed_clusters;  // indices on the source surface
  SurfaceFlags flags_before;
  SurfaceFlags flags_after;
};

// Checks the hypotheses of a single (K+Δ)-negative contraction of C and
// classifies the prospective point. Rejections (all Error):
//   NotNonExceptional          C is already contracted
//   RejectNonNegativeSelfInt   C meets no cluster and C² >= 0
//   RejectClusterDegenerate    C together with the clusters it meets is not
//                              negative definite
//   RejectKDeltaNonNegative    (K+Δ)·C >= 0
//   InconsistentWithTheorem84  hypotheses hold yet C has positive arithmetic
//                              genus, absorbs a non-rational point, or the
//                              new point is not dlt
ContractionCertificate validate_contraction(const NormalSurface& surface, const Boundary& boundary,
                                            std::size_t curve);

struct ContractionResult {
  NormalSurface surface;
  Boundary boundary;
  ContractionCertificate certificate;
};

// Performs the step: merged cluster added (absorbed clusters removed), C's
// boundary coefficient dropped, flags carried over unchanged.
ContractionResult contract(const NormalSurface& surface, const Boundary& boundary, std::size_t curve);

// Pushforward of a class L on X with L·C = 0 to the contracted surface. The
// result is expressed on the contracted surface's curve indices, which are
// those of the smooth model. Throws Error(NotOrthogonal) when L·C != 0.
WeilDivisor descend_class(const NormalSurface& surface, const ContractionCertificate& certificate,
                          const WeilDivisor& cls);

}  // namespace lcsurf
