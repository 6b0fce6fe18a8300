#pragma once

// Picard-group bookkeeping through contractions. The Picard group of the base
// curve is modeled by a free abelian "ledger" of named generators with
// degrees; a line-bundle class on the smooth model is a pull-back of a ledger
// element plus an integer combination of designated generator curves.
// Descent through a contraction is decided by restriction homomorphisms to
// the contracted curves (ledger-valued on curves identified with the base,
// degree-valued on rational curves).

#include <optional>
#include <string>

#include "lcsurf/mumford.hpp"

namespace lcsurf {

struct LedgerGenerator {
  std::string name;
  long degree = 0;
  bool free_marker = false;  // declared non-torsion

  friend bool operator==(const LedgerGenerator&, const LedgerGenerator&) = default;
};

class PicLedger {
 public:
  PicLedger() = default;
  explicit PicLedger(std::vector<LedgerGenerator> generators);

  const std::vector<LedgerGenerator>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  std::size_t index_of(std::string_view name) const;  // Error(UnknownName)
  std::optional<std::size_t> find(std::string_view name) const;
  Integer degree(std::span<const Integer> element) const;

  friend bool operator==(const PicLedger&, const PicLedger&) = default;

 private:
  std::vector<LedgerGenerator> gens_;
};

// Generator of the curve part of a PicClass, together with its numerical
// class on the smooth model (integer combination of curves).
struct CurveGenerator {
  std::string name;
  std::map<std::size_t, Integer> numerical_class;

  friend bool operator==(const CurveGenerator&, const CurveGenerator&) = default;
};

struct PicBasis {
  PicLedger ledger;
  std::vector<CurveGenerator> curve_generators;
  // Numerical class of the pull-back of a degree-one point of the base.
  std::map<std::size_t, Integer> fiber;

  std::size_t size() const { return ledger.size() + curve_generators.size(); }
  // Generator names in column order: ledger generators then curve generators.
  std::vector<std::string> names() const;
  std::optional<std::size_t> find(std::string_view name) const;

  friend bool operator==(const PicBasis&, const PicBasis&) = default;
};

struct PicClass {
  IntegerVector base_part;   // over ledger generators
  IntegerVector curve_part;  // over curve generators

  static PicClass zero(const PicBasis& basis);
  // Coordinates in basis column order.
  IntegerVector flat() const;
  static PicClass from_flat(const PicBasis& basis, std::span<const Integer> flat);

  PicClass operator+(const PicClass& other) const;
  PicClass operator-(const PicClass& other) const;
  PicClass operator*(const Integer& scale) const;

  friend bool operator==(const PicClass&, const PicClass&) = default;
};

enum class RestrictionKind { Ledger, Degree };

// Homomorphism PicClass -> ledger (or -> ℤ), given by the images of the basis
// generators in column order. Degree images have length one.
struct Restriction {
  std::size_t curve = 0;
  RestrictionKind kind = RestrictionKind::Degree;
  std::vector<IntegerVector> images;

  friend bool operator==(const Restriction&, const Restriction&) = default;
};

struct RestrictionTable {
  std::vector<Restriction> entries;

  const Restriction* find(std::size_t curve) const;

  friend bool operator==(const RestrictionTable&, const RestrictionTable&) = default;
};

// Shape checks (one entry per curve, images of the right length, ledger-valued
// entries only on base-linked curves) and degree consistency with the
// numerical classes: deg(restriction of g to C) must equal g·C on the model.
// Throws Error(InvalidRestriction).
void validate_table(const SmoothModel& model, const PicBasis& basis, const RestrictionTable& table);

// Restriction of `cls` to the curve of `entry`.
IntegerVector restrict_class(const Restriction& entry, const PicClass& cls);

// True iff every ledger-valued restriction to a contracted curve vanishes and
// every degree-valued restriction is zero. Throws Error(MissingRestriction)
// when a contracted curve has no table entry.
bool descends_through(const PicClass& cls, const RestrictionTable& table,
                      std::span<const std::size_t> contracted_curves);

struct PicardPresentation {
  std::size_t rank = 0;
  std::vector<PicClass> generators;  // Hermite-reduced ℤ-basis of the kernel
};

std::vector<std::size_t> contracted_curves(const NormalSurface& surface);

// Stacked integer matrix of all restriction conditions (rows) against the
// basis generators (columns).
std::vector<IntegerVector> descent_conditions(const PicBasis& basis, const RestrictionTable& table,
                                              std::span<const std::size_t> contracted_curves);

PicardPresentation picard_of_contraction(const PicBasis& basis, const RestrictionTable& table,
                                         std::span<const std::size_t> contracted_curves);

// ℤ-basis of {x ∈ ℤⁿ : Ax = 0}, in Hermite normal form (rows echelon, pivots
// positive, entries above each pivot reduced modulo it).
std::vector<IntegerVector> integer_kernel(const std::vector<IntegerVector>& rows, std::size_t columns);

// Numerical class of a PicClass on the smooth model. Throws
// Error(ValidationError) when a positive-degree ledger generator is used and
// no fiber class is known.
RationalVector numerical_class(const SmoothModel& model, const PicBasis& basis, const PicClass& cls);

// One-directional tests driven by the ledger:
//  - if the Mumford class of some listed curve is not numerically in the
//    ℚ-span of the descending classes, that curve is not ℚ-Cartier and the
//    surface is not ℚ-factorial;
//  - if no nonzero descending class is nef on the listed curves and the
//    witnesses, there is no ample class and the surface is not projective.
struct LedgerVerdict {
  std::size_t picard_rank = 0;
  Tri q_factorial = Tri::Unknown;
  Tri projective = Tri::Unknown;
  std::optional<std::size_t> non_q_cartier_curve;
  bool nef_cone_zero = false;
};

LedgerVerdict ledger_verdict(const NormalSurface& surface, const PicBasis& basis, const RestrictionTable& table,
                             const std::vector<WeilDivisor>& witnesses = {});

// Pushforward to X of a descending class: the non-exceptional part of its
// numerical class.
WeilDivisor class_divisor(const NormalSurface& surface, const PicBasis& basis, const PicClass& cls);

// --- nef cone in a span ----------------------------------------------------

struct ConeDescription {
  std::vector<RationalVector> lineality;  // basis of the lineality space
  std::vector<IntegerVector> rays;        // primitive extreme rays of the pointed part
  bool is_zero = false;
};

// Cone {b ∈ ℚᵏ : Σ_i b_i pairings[j][i] >= 0 for every test j}. `pairings`
// has one row per test curve and k columns.
ConeDescription cone_from_pairings(const std::vector<RationalVector>& pairings, std::size_t span_size);

ConeDescription nef_cone_in_span(const NormalSurface& surface, const std::vector<WeilDivisor>& span,
                                 const std::vector<WeilDivisor>& test_curves);

// --- ruled surface positivity ---------------------------------------------

struct PositiveSectionReport {
  Rational minus_self;
  Rational plus_self;
  Rational plus_dot_minus;
  std::vector<std::pair<std::size_t, Rational>> plus_degrees;  // C₊·C for every other curve
  // C₊·C₋ = 0 and C₊·C > 0 for every other listed curve.
  bool holds = false;
};

PositiveSectionReport check_positive_section(const SmoothModel& model, std::size_t minus, std::size_t plus);

}  // namespace lcsurf
