#include "lcsurf/vanishing.hpp"

#include "lcsurf/error.hpp"

namespace lcsurf {

VanishingVerdict check_vanishing_hypotheses(const NormalSurface& surface, const Boundary& boundary,
                                            const std::map<std::size_t, Rational>& exceptional,
                                            const WeilDivisor& d, std::optional<VanishingVariant> variant) {
  VanishingVerdict verdict;
  verdict.requested = variant;
  bool all_positive = true;
  bool all_nonnegative = true;
  for (const auto& [curve, l_degree] : exceptional) {
    if (curve >= surface.model.size() || surface.is_exceptional(curve)) {
      throw Error(ErrorKind::NotNonExceptional, "curve " + std::to_string(curve) + " is not a curve of X");
    }
    const WeilDivisor c = WeilDivisor::curve(curve);
    VanishingRow row{curve, l_degree, mumford_intersection(surface, d, c), canonical_intersection(surface, boundary, c),
                     0};
    row.quantity = row.line_bundle_degree + row.divisor_degree - row.log_canonical_degree;
    if (row.quantity <= 0) all_positive = false;
    if (row.quantity < 0) all_nonnegative = false;
    verdict.rows.push_back(std::move(row));
  }
  for (const auto& [curve, coeff] : boundary.coefficients()) {
    (void)curve;
    if (!verdict.max_boundary_coefficient || coeff > *verdict.max_boundary_coefficient) {
      verdict.max_boundary_coefficient = coeff;
    }
  }
  const Rational max_coeff = verdict.max_boundary_coefficient.value_or(Rational(0));
  verdict.variant1 = all_positive && max_coeff <= 1;
  verdict.variant2 = all_nonnegative && max_coeff < 1;
  if (!variant) verdict.holds = verdict.variant1 || verdict.variant2;
  else if (*variant == VanishingVariant::Strict) verdict.holds = verdict.variant1;
  else verdict.holds = verdict.variant2;
  verdict.conclusion = verdict.holds ? "R^i f_*(L(D)) = 0 for i > 0 (relative vanishing theorem, cited)"
                                     : "no conclusion";
  return verdict;
}

RelativeVanishingCases relative_vanishing_cases(const SmoothModel& model, const std::vector<std::size_t>& curves,
                                                const std::vector<Rational>& b, std::span<const Rational> n) {
  if (curves.empty()) throw Error(ErrorKind::InvalidCluster, "no exceptional curves given");
  for (std::size_t c : curves) {
    if (c >= model.size()) throw Error(ErrorKind::InvalidCluster, "curve index out of range");
  }
  if (b.size() != curves.size() || n.size() != model.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient vector sizes do not match the curves");
  }
  RationalVector e(model.size());
  for (std::size_t k = 0; k < curves.size(); ++k) e[curves[k]] += b[k];

  RelativeVanishingCases out;
  out.n_nef = true;
  bool some_n_positive = false;
  for (std::size_t c : curves) {
    Rational n_deg = 0;
    Rational e_deg = 0;
    for (std::size_t j = 0; j < model.size(); ++j) {
      n_deg += n[j] * model.dot(j, c);
      e_deg += e[j] * model.dot(j, c);
    }
    if (n_deg < 0) out.n_nef = false;
    if (n_deg > 0) some_n_positive = true;
    out.forced_line_bundle_degrees.push_back(model.canonical_degree(c) + e_deg + n_deg);
    out.n_degrees.push_back(std::move(n_deg));
  }
  bool in_half_open = true;  // 0 ≤ b < 1
  bool in_upper = true;      // 0 < b ≤ 1
  bool some_not_one = false;
  for (const Rational& bi : b) {
    if (bi < 0 || bi >= 1) in_half_open = false;
    if (bi <= 0 || bi > 1) in_upper = false;
    if (bi != 1) some_not_one = true;
  }
  out.case1 = in_half_open;
  out.case2 = in_upper && some_not_one;
  out.case3 = in_upper && some_n_positive;
  return out;
}

}  // namespace lcsurf
