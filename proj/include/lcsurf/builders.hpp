#pragma once

// Constructors for ruled surfaces over a curve, point blow-ups, and the
// non-projective example surfaces built from P_C(O ⊕ L) with L a non-torsion
// degree-zero class on an elliptic curve C.

#include <map>
#include <string>
#include <variant>

#include "lcsurf/contraction.hpp"
#include "lcsurf/picard.hpp"

namespace lcsurf {

// P_C(O ⊕ L) with curves {C1, C2, F}: C1 the section with C1² = -deg L, C2
// the section with C2² = deg L, F a fiber.
struct RuledSurface {
  SmoothModel model;
  std::size_t minus = 0;  // C1
  std::size_t plus = 1;   // C2
  std::size_t fiber = 2;  // F
  long degree = 0;
  // O(C1)|_{C1} = -L and O(C1)|_{C2} = 0, as ledger elements.
  IntegerVector minus_normal;
  IntegerVector minus_on_plus;
};

// `line_bundle` must name a ledger generator; its degree is deg L.
RuledSurface ruled_over_curve(int genus, const PicLedger& ledger, std::string_view line_bundle,
                              std::string_view base_name = "C");

struct PointOnCurve {
  std::size_t curve;
};
struct CurveIntersection {
  std::size_t first;
  std::size_t second;
};
struct GeneralPoint {};

using BlowUpSite = std::variant<PointOnCurve, CurveIntersection, GeneralPoint>;

struct BlowUp {
  SmoothModel model;
  std::size_t exceptional = 0;
  std::vector<std::size_t> through;  // curves passing through the center
};

// Blows up a point at a smooth point of every curve through it. Throws
// Error(BadSite) for unknown curves or an intersection site where the curves
// do not meet.
BlowUp blow_up(const SmoothModel& model, const BlowUpSite& site, std::string label);

// Blow-up of the resolution of X: the new curve joins the cluster of the
// exceptional curve through the center, or forms its own cluster over a
// smooth point of X. Point records are dropped.
NormalSurface refine(const NormalSurface& surface, const BlowUpSite& site, std::string label);

// Another member of the pencil of `fiber` (same intersection numbers, F·F' = F²).
SmoothModel add_fiber(const SmoothModel& model, std::size_t fiber, std::string label);

SmoothModel relabel(const SmoothModel& model, std::size_t curve, std::string label);

struct Preset {
  std::string name;
  NormalSurface surface;
  Boundary boundary;
  PicBasis basis;
  RestrictionTable table;
  std::vector<WeilDivisor> witnesses;
  std::map<std::string, std::string> expectations;

  friend bool operator==(const Preset&, const Preset&) = default;
};

// W: P_C(O ⊕ L) over an elliptic curve blown up at the two points where the
// fiber over P meets the sections. Smooth; curves C1', C2', l, F, E1, E2.
Preset preset_example_12_3_w();
// S: W with C1', C2' (elliptic) and l (a (-2)-curve) contracted.
Preset preset_example_12_3();
// S̃: W with only C1', C2' contracted.
Preset preset_example_12_4();
// S̄: S̃ blown up at rho - 1 general points, one on each extra fiber F_i.
Preset preset_example_12_5(int rho);

// One contraction step on a whole preset: point records recomputed, flags
// carried over, C dropped from the witnesses, expectations cleared and
// "/label" appended to the name. The certificate is stored when requested.
Preset contract_preset(const Preset& preset, std::size_t curve, ContractionCertificate* certificate = nullptr);

// "ex12_3", "ex12_3_w", "ex12_4", "ex12_5". Throws Error(UnknownName).
Preset preset_by_name(std::string_view name, int rho = 3);
std::vector<std::string> preset_names();

}  // namespace lcsurf
