#pragma once

// Hypothesis checks for the relative Kawamata–Viehweg type vanishing theorems
// on surfaces. Only the numerical hypotheses are evaluated; the vanishing
// R^i f_*(L ⊗ O(D)) = 0 is reported as a consequence of the theorem and is
// never computed.

#include <optional>
#include <string>

#include "lcsurf/mumford.hpp"

namespace lcsurf {

enum class VanishingVariant { Strict = 1, Weak = 2 };

struct VanishingRow {
  std::size_t curve = 0;
  Rational line_bundle_degree;  // L·C
  Rational divisor_degree;      // D·C
  Rational log_canonical_degree;  // (K_X+Δ)·C
  Rational quantity;            // L·C + (D − (K_X+Δ))·C
};

struct VanishingVerdict {
  std::vector<VanishingRow> rows;
  std::optional<Rational> max_boundary_coefficient;
  bool variant1 = false;  // all quantities > 0, Δ-coefficients ≤ 1
  bool variant2 = false;  // all quantities ≥ 0, Δ-coefficients < 1
  // Variant that was requested, if any; `holds` refers to it (or to either).
  std::optional<VanishingVariant> requested;
  bool holds = false;
  std::string conclusion;  // cited consequence, or "no conclusion"
};

// `exceptional` maps each f-exceptional curve C of X (a non-exceptional curve
// of the smooth model) to the degree L·C.
VanishingVerdict check_vanishing_hypotheses(const NormalSurface& surface, const Boundary& boundary,
                                            const std::map<std::size_t, Rational>& exceptional,
                                            const WeilDivisor& d,
                                            std::optional<VanishingVariant> variant = std::nullopt);

// Smooth-model version for φ: V → W contracting the curves E_i to one point:
// E = Σ b_i E_i effective, N a ℚ-divisor on V. Reports N·E_i, the L-degrees
// forced by L·E_i = (K_V+E+N)·E_i, and which of the cases (1), (2), (3) hold.
struct RelativeVanishingCases {
  std::vector<Rational> n_degrees;
  std::vector<Rational> forced_line_bundle_degrees;
  bool n_nef = false;  // N·E_i ≥ 0 for every i
  bool case1 = false;  // 0 ≤ b_i < 1
  bool case2 = false;  // 0 < b_i ≤ 1, some b_j ≠ 1
  bool case3 = false;  // 0 < b_i ≤ 1, some N·E_j > 0
  bool holds() const { return n_nef && (case1 || case2 || case3); }
};

// Throws Error(InvalidCluster) for an empty or out-of-range curve list and
// Error(DimensionMismatch) when b has the wrong length or N the wrong size.
RelativeVanishingCases relative_vanishing_cases(const SmoothModel& model, const std::vector<std::size_t>& curves,
                                                const std::vector<Rational>& b, std::span<const Rational> n);

}  // namespace lcsurf
