#pragma once

// Data model: a smooth model (curves + intersection matrix), the normal
// surface obtained by contracting disjoint clusters of curves, a boundary
// divisor, and the tri-state global flags with their inference rules.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcsurf/linalg.hpp"

namespace lcsurf {

enum class Tri { Unknown, True, False };

std::string_view to_string(Tri value);
std::optional<Tri> parse_tri(std::string_view text);

enum class KodairaDim { Unknown, NegInf, Zero, One, Two };

std::string_view to_string(KodairaDim value);
std::optional<KodairaDim> parse_kodaira_dim(std::string_view text);

struct SurfaceFlags {
  Tri projective = Tri::Unknown;
  Tri moishezon = Tri::Unknown;
  Tri fujiki = Tri::Unknown;
  Tri q_factorial = Tri::Unknown;
  Tri rational_sings = Tri::Unknown;
  KodairaDim kodaira_dim = KodairaDim::Unknown;

  friend bool operator==(const SurfaceFlags&, const SurfaceFlags&) = default;
};

struct Curve {
  std::string label;
  int arithmetic_genus = 0;
  int geometric_genus = 0;
  // Name of the base curve this curve is identified with (a section of a
  // ruled surface, say); restriction tables attach ledger-valued data to it.
  std::optional<std::string> base_link;

  friend bool operator==(const Curve&, const Curve&) = default;
};

class SmoothModel {
 public:
  SmoothModel() = default;
  SmoothModel(std::vector<Curve> curves, SymMatrix intersections);

  std::size_t size() const noexcept { return curves_.size(); }
  const std::vector<Curve>& curves() const noexcept { return curves_; }
  const Curve& curve(std::size_t i) const { return curves_.at(i); }
  const SymMatrix& intersections() const noexcept { return q_; }
  const Rational& dot(std::size_t i, std::size_t j) const { return q_(i, j); }

  // Throws Error(UnknownName).
  std::size_t index_of(std::string_view label) const;
  std::optional<std::size_t> find(std::string_view label) const;

  // K·C_i = 2 p_a(C_i) - 2 - C_i² by adjunction on the smooth surface.
  Rational canonical_degree(std::size_t i) const;
  // K·v for a formal combination v of the listed curves.
  Rational canonical_degree(std::span<const Rational> v) const;

  // Appends a curve with the given intersection row (the self-intersection
  // is the last entry). Used by the blow-up builder.
  SmoothModel with_curve(Curve curve, std::span<const Rational> row) const;
  SmoothModel with_intersection(std::size_t i, std::size_t j, const Rational& value) const;

  friend bool operator==(const SmoothModel&, const SmoothModel&) = default;

 private:
  std::vector<Curve> curves_;
  SymMatrix q_;
};

struct Cluster {
  std::vector<std::size_t> members;  // sorted, unique

  explicit Cluster(std::vector<std::size_t> indices = {});
  bool contains(std::size_t i) const;

  friend bool operator==(const Cluster&, const Cluster&) = default;
};

enum class PointStatus { DltRational, LcSimpleElliptic, LcCusp, LcRationalOther, NotLc };

std::string_view to_string(PointStatus status);
std::optional<PointStatus> parse_point_status(std::string_view text);
bool is_rational_status(PointStatus status);

struct PointRecord {
  Cluster cluster;
  RationalVector discrepancies;  // aligned with cluster.members
  PointStatus status = PointStatus::NotLc;
  bool gorenstein_hint = false;

  friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

class Boundary {
 public:
  Boundary() = default;
  // Throws Error(ValidationError) for coefficients outside [0, 1].
  explicit Boundary(std::map<std::size_t, Rational> coefficients);

  const std::map<std::size_t, Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t curve) const;
  bool empty() const noexcept { return coeffs_.empty(); }
  // Drops the coefficient of `curve` (pushforward under its contraction).
  Boundary without(std::size_t curve) const;
  // Strict transform as a vector over the curves of a model with n curves.
  RationalVector as_vector(std::size_t n) const;

  friend bool operator==(const Boundary&, const Boundary&) = default;

 private:
  std::map<std::size_t, Rational> coeffs_;
};

struct NormalSurface {
  SmoothModel model;
  std::vector<Cluster> clusters;
  // Either empty (not computed) or aligned with `clusters`.
  std::vector<PointRecord> point_records;
  SurfaceFlags flags;

  bool is_exceptional(std::size_t curve) const;
  std::optional<std::size_t> cluster_of(std::size_t curve) const;
  std::vector<std::size_t> non_exceptional() const;
  bool has_point_records() const { return point_records.size() == clusters.size(); }

  friend bool operator==(const NormalSurface&, const NormalSurface&) = default;
};

enum class ViolationKind {
  DuplicateLabel,
  GenusOrder,
  NegativeGenus,
  NonIntegerEntry,
  NegativeOffDiagonal,
  EmptyCluster,
  IndexOutOfRange,
  OverlappingClusters,
  ClustersMeet,
  DisconnectedCluster,
  NotNegativeDefinite,
  BoundaryOnExceptional,
  BoundaryOutOfRange,
  StaleRecords,
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  std::vector<std::size_t> indices;  // offending curve or cluster indices
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  bool has(ViolationKind kind) const;
};

ValidationReport validate(const SmoothModel& model);
ValidationReport validate(const NormalSurface& surface);
ValidationReport validate(const NormalSurface& surface, const Boundary& boundary);

// Dual graph connectivity of a set of curves (edge when C_i·C_j > 0).
bool is_connected(const SmoothModel& model, std::span<const std::size_t> members);

// Applies the projectivity / ℚ-factoriality inference rules to a fixpoint:
//   all points rational                      => rational_sings
//   some simple elliptic or cusp point       => not rational_sings
//   rational_sings                           => q_factorial
//   q_factorial & moishezon                  => projective
//   q_factorial & fujiki & kappa = -inf      => projective
//   lc & fujiki & kappa = -inf               => projective
//   kappa = 2 & q_factorial                  => projective
//   projective                               => moishezon & fujiki
//   not moishezon or not fujiki              => not projective
// Known values are never changed; a rule that contradicts one throws
// Error(InconsistentFlags). Point-based rules only fire when point_records
// are populated.
SurfaceFlags infer_flags(const NormalSurface& surface, const Boundary& boundary);

}  // namespace lcsurf
