#include "lcsurf/contraction.hpp"

#include <algorithm>

#include "lcsurf/error.hpp"
#include "lcsurf/singularities.hpp"

namespace lcsurf {

namespace {

struct Prospect {
  Cluster merged;
  std::vector<std::size_t> absorbed;
};

Prospect prospective_cluster(const NormalSurface& surface, std::size_t curve) {
  Prospect p;
  std::vector<std::size_t> members{curve};
  for (std::size_t k = 0; k < surface.clusters.size(); ++k) {
    const auto& cm = surface.clusters[k].members;
    const bool meets = std::any_of(cm.begin(), cm.end(), [&](std::size_t m) { return surface.model.dot(curve, m) > 0; });
    if (!meets) continue;
    p.absorbed.push_back(k);
    members.insert(members.end(), cm.begin(), cm.end());
  }
  p.merged = Cluster(std::move(members));
  return p;
}

NormalSurface contracted_surface(const NormalSurface& surface, const Prospect& prospect) {
  NormalSurface out;
  out.model = surface.model;
  out.flags = surface.flags;
  const bool records = surface.has_point_records() && !surface.clusters.empty();
  for (std::size_t k = 0; k < surface.clusters.size(); ++k) {
    if (std::find(prospect.absorbed.begin(), prospect.absorbed.end(), k) != prospect.absorbed.end()) continue;
    out.clusters.push_back(surface.clusters[k]);
    if (records) out.point_records.push_back(surface.point_records[k]);
  }
  out.clusters.push_back(prospect.merged);
  if (!records) out.point_records.clear();
  return out;
}

}  // namespace

ContractionCertificate validate_contraction(const NormalSurface& surface, const Boundary& boundary,
                                            std::size_t curve) {
  const SmoothModel& model = surface.model;
  if (curve >= model.size()) throw Error(ErrorKind::UnknownName, "curve index out of range");
  const std::string& label = model.curve(curve).label;
  if (surface.is_exceptional(curve)) {
    throw Error(ErrorKind::NotNonExceptional, "curve " + label + " is already contracted");
  }

  ContractionCertificate cert;
  cert.curve = curve;
  const WeilDivisor c = WeilDivisor::curve(curve);
  cert.self_int = mumford_intersection(surface, c, c);

  const Prospect prospect = prospective_cluster(surface, curve);
  cert.absorbed_clusters = prospect.absorbed;
  if (!is_negative_definite(model.intersections().principal_submatrix(prospect.merged.members))) {
    if (prospect.absorbed.empty()) {
      throw Error(ErrorKind::RejectNonNegativeSelfInt,
                  "curve " + label + " has self-intersection " + to_string(cert.self_int) + " >= 0");
    }
    throw Error(ErrorKind::RejectClusterDegenerate,
                "curve " + label + " with the clusters it meets has no negative definite form (C^2 = " +
                    to_string(cert.self_int) + ")");
  }

  cert.kdelta_deg = canonical_intersection(surface, boundary, c);
  if (cert.kdelta_deg >= 0) {
    throw Error(ErrorKind::RejectKDeltaNonNegative,
                "(K+Delta).C = " + to_string(cert.kdelta_deg) + " >= 0 for curve " + label);
  }

  if (model.curve(curve).arithmetic_genus > 0) {
    throw Error(ErrorKind::InconsistentWithTheorem84,
                "curve " + label + " satisfies the contraction hypotheses but has positive arithmetic genus");
  }
  for (std::size_t k : prospect.absorbed) {
    const PointStatus status = surface.has_point_records()
                                   ? surface.point_records[k].status
                                   : classify_point(surface, boundary, surface.clusters[k]).status;
    if (!is_rational_status(status)) {
      throw Error(ErrorKind::InconsistentWithTheorem84,
                  "curve " + label + " passes through a point classified " + std::string(to_string(status)));
    }
  }

  const NormalSurface after = contracted_surface(surface, prospect);
  cert.new_point = classify_point(after, boundary.without(curve), prospect.merged);
  if (cert.new_point.status != PointStatus::DltRational) {
    throw Error(ErrorKind::InconsistentWithTheorem84,
                "contracting " + label + " would create a point classified " +
                    std::string(to_string(cert.new_point.status)));
  }
  cert.flags_before = surface.flags;
  cert.flags_after = surface.flags;
  return cert;
}

ContractionResult contract(const NormalSurface& surface, const Boundary& boundary, std::size_t curve) {
  ContractionCertificate cert = validate_contraction(surface, boundary, curve);
  const Prospect prospect = prospective_cluster(surface, curve);
  NormalSurface after = contracted_surface(surface, prospect);
  if (surface.has_point_records()) {
    after.point_records.push_back(cert.new_point);
  }
  // ℚ-factoriality, rationality of singularities, projectivity and the
  // declared invariants all transfer across a (K+Δ)-negative contraction.
  after.flags = surface.flags;
  cert.flags_after = after.flags;
  return {std::move(after), boundary.without(curve), std::move(cert)};
}

WeilDivisor descend_class(const NormalSurface& surface, const ContractionCertificate& certificate,
                          const WeilDivisor& cls) {
  const WeilDivisor c = WeilDivisor::curve(certificate.curve);
  const Rational pairing = mumford_intersection(surface, cls, c);
  if (pairing != 0) {
    throw Error(ErrorKind::NotOrthogonal, "class pairs to " + to_string(pairing) + " with the contracted curve");
  }
  return cls.without(certificate.curve);
}

}  // namespace lcsurf
