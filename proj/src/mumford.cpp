#include "lcsurf/mumford.hpp"

#include "lcsurf/error.hpp"
#include "lcsurf/singularities.hpp"

namespace lcsurf {

WeilDivisor::WeilDivisor(std::map<std::size_t, Rational> coefficients) {
  for (auto& [curve, c] : coefficients) {
    if (c != 0) coeffs_.emplace(curve, c);
  }
}

WeilDivisor WeilDivisor::curve(std::size_t index, Rational coefficient) {
  return WeilDivisor({{index, std::move(coefficient)}});
}

Rational WeilDivisor::coefficient(std::size_t curve) const {
  auto it = coeffs_.find(curve);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

RationalVector WeilDivisor::as_vector(std::size_t n) const {
  RationalVector v(n);
  for (const auto& [curve, c] : coeffs_) {
    if (curve >= n) throw Error(ErrorKind::DimensionMismatch, "divisor refers to a missing curve");
    v[curve] = c;
  }
  return v;
}

WeilDivisor WeilDivisor::operator+(const WeilDivisor& other) const {
  auto sum = coeffs_;
  for (const auto& [curve, c] : other.coeffs_) sum[curve] += c;
  return WeilDivisor(std::move(sum));
}

WeilDivisor WeilDivisor::operator-(const WeilDivisor& other) const { return *this + other * Rational(-1); }

WeilDivisor WeilDivisor::operator*(const Rational& scale) const {
  auto scaled = coeffs_;
  for (auto& [curve, c] : scaled) c *= scale;
  return WeilDivisor(std::move(scaled));
}

WeilDivisor WeilDivisor::without(std::size_t curve) const {
  WeilDivisor out = *this;
  out.coeffs_.erase(curve);
  return out;
}

RationalVector PullbackResult::total() const {
  RationalVector v = strict_part;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += exceptional_part[i];
  return v;
}

namespace {

// Exceptional correction α for each cluster: Σ_i α_i E_i·E_j = -D†·E_j.
RationalVector exceptional_correction(const NormalSurface& surface, std::span<const Rational> strict) {
  const SmoothModel& model = surface.model;
  RationalVector alpha(model.size());
  for (std::size_t k = 0; k < surface.clusters.size(); ++k) {
    const auto& members = surface.clusters[k].members;
    const SymMatrix block = model.intersections().principal_submatrix(members);
    if (!is_negative_definite(block)) {
      throw Error(ErrorKind::InvalidSurface, "cluster " + std::to_string(k) + " is not negative definite");
    }
    RationalVector rhs(members.size());
    bool touches = false;
    for (std::size_t j = 0; j < members.size(); ++j) {
      Rational acc = 0;
      for (std::size_t c = 0; c < strict.size(); ++c) {
        if (strict[c] != 0) acc += strict[c] * model.dot(c, members[j]);
      }
      rhs[j] = -acc;
      touches |= acc != 0;
    }
    if (!touches) continue;
    const RationalVector solution = solve_unique(block, rhs);
    for (std::size_t j = 0; j < members.size(); ++j) alpha[members[j]] = solution[j];
  }
  return alpha;
}

}  // namespace

PullbackResult mumford_pullback(const NormalSurface& surface, const WeilDivisor& d) {
  const std::size_t n = surface.model.size();
  for (const auto& [curve, c] : d.coefficients()) {
    if (curve >= n) throw Error(ErrorKind::DimensionMismatch, "divisor refers to a missing curve");
    if (surface.is_exceptional(curve)) {
      throw Error(ErrorKind::NotNonExceptional,
                  "divisor has a coefficient on exceptional curve " + surface.model.curve(curve).label);
    }
  }
  PullbackResult result;
  result.strict_part = d.as_vector(n);
  result.exceptional_part = exceptional_correction(surface, result.strict_part);
  return result;
}

RationalVector mumford_pullback_vector(const NormalSurface& surface, std::span<const Rational> strict) {
  RationalVector v(strict.begin(), strict.end());
  for (const auto& cluster : surface.clusters)
    for (std::size_t m : cluster.members) v[m] = 0;
  const RationalVector alpha = exceptional_correction(surface, v);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += alpha[i];
  return v;
}

Rational mumford_intersection(const NormalSurface& surface, const WeilDivisor& d1, const WeilDivisor& d2) {
  const RationalVector a = mumford_pullback(surface, d1).total();
  const RationalVector b = mumford_pullback(surface, d2).total();
  return surface.model.intersections().bilinear(a, b);
}

Rational canonical_intersection(const NormalSurface& surface, const Boundary& boundary, const WeilDivisor& d) {
  const SmoothModel& model = surface.model;
  const std::size_t n = model.size();
  // f*(K+Δ) paired with π*D: since f*(K+Δ) is orthogonal to every exceptional
  // curve only the strict part of π*D contributes.
  const RationalVector strict = mumford_pullback(surface, d).strict_part;
  const RationalVector delta = boundary.as_vector(n);
  RationalVector correction(n);  // -Σ a_i E_i
  for (const Cluster& cluster : surface.clusters) {
    const RationalVector a = discrepancies(surface, boundary, cluster);
    for (std::size_t j = 0; j < cluster.members.size(); ++j) correction[cluster.members[j]] = -a[j];
  }
  Rational total = model.canonical_degree(strict);
  total += model.intersections().bilinear(delta, strict);
  total += model.intersections().bilinear(correction, strict);
  return total;
}

}  // namespace lcsurf
