#pragma once

// Mumford's intersection theory on a normal surface given by a resolution:
// a divisor on X is represented by its strict transform, and its pull-back
// adds the unique exceptional correction orthogonal to every exceptional
// curve.

#include <map>

#include "lcsurf/surface.hpp"

namespace lcsurf {

// ℚ-divisor on X, stored as strict-transform coefficients on the
// non-exceptional curves of the smooth model.
class WeilDivisor {
 public:
  WeilDivisor() = default;
  explicit WeilDivisor(std::map<std::size_t, Rational> coefficients);
  static WeilDivisor curve(std::size_t index, Rational coefficient = 1);

  const std::map<std::size_t, Rational>& coefficients() const noexcept { return coeffs_; }
  Rational coefficient(std::size_t curve) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  RationalVector as_vector(std::size_t n) const;

  WeilDivisor operator+(const WeilDivisor& other) const;
  WeilDivisor operator-(const WeilDivisor& other) const;
  WeilDivisor operator*(const Rational& scale) const;
  // Pushforward under contraction of `curve`: its coefficient disappears.
  WeilDivisor without(std::size_t curve) const;

  friend bool operator==(const WeilDivisor&, const WeilDivisor&) = default;

 private:
  std::map<std::size_t, Rational> coeffs_;  // zero coefficients are never stored
};

// π*D = D† + Σ α_i E_i. Both parts are full-length vectors over the curves of
// the smooth model; strict_part vanishes on exceptional curves and
// exceptional_part vanishes elsewhere.
struct PullbackResult {
  RationalVector strict_part;
  RationalVector exceptional_part;

  RationalVector total() const;
};

// Throws Error(InvalidSurface) if a cluster is not negative definite and
// Error(NotNonExceptional) if D has a coefficient on an exceptional curve.
PullbackResult mumford_pullback(const NormalSurface& surface, const WeilDivisor& d);

// Pull-back of an arbitrary formal combination of curves whose exceptional
// coordinates are ignored (replaced by the orthogonal correction).
RationalVector mumford_pullback_vector(const NormalSurface& surface, std::span<const Rational> strict);

Rational mumford_intersection(const NormalSurface& surface, const WeilDivisor& d1, const WeilDivisor& d2);

// (K_X + Δ)·D, pairing f*(K_X+Δ) = K_Y + Δ̃ - Σ a_i E_i against π*D.
Rational canonical_intersection(const NormalSurface& surface, const Boundary& boundary, const WeilDivisor& d);

}  // namespace lcsurf
