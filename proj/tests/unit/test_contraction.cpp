#include <doctest.h>

#include "fixtures.hpp"
#include "lcsurf/contraction.hpp"
#include "lcsurf/error.hpp"
#include "lcsurf/singularities.hpp"
#include "property_suites.hpp"

using namespace lcsurf;
using namespace lcsurf::fixtures;

namespace {

ErrorKind rejection(const NormalSurface& s, const Boundary& b, std::size_t curve) {
  try {
    validate_contraction(s, b, curve);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("contraction was accepted");
  return ErrorKind::ValidationError;
}

}  // namespace

TEST_CASE("contracting B_i on Example 12.5") {
  const Preset p = preset_example_12_5(3);
  const std::size_t b1 = p.surface.model.index_of("B1");
  const ContractionCertificate c = validate_contraction(p.surface, p.boundary, b1);
  CHECK(c.self_int == -1);
  CHECK(c.kdelta_deg == -1);
  CHECK(c.new_point.status == PointStatus::DltRational);
  CHECK(c.new_point.discrepancies == RationalVector{Rational(1)});
  CHECK(c.absorbed_clusters.empty());

  const ContractionResult r = contract(p.surface, p.boundary, b1);
  CHECK(r.surface.clusters.size() == p.surface.clusters.size() + 1);
  CHECK(r.surface.non_exceptional().size() + 1 == p.surface.non_exceptional().size());
  CHECK(validate(r.surface, r.boundary).ok());
  CHECK(r.surface.flags == p.surface.flags);
  CHECK(rejection(r.surface, r.boundary, b1) == ErrorKind::NotNonExceptional);
}

TEST_CASE("contracting E1 then E2 on W") {
  const Preset w = preset_example_12_3_w();
  const SmoothModel& m = w.surface.model;
  const ContractionResult one = contract(w.surface, Boundary(), m.index_of("E1"));
  const ContractionResult two = contract(one.surface, one.boundary, m.index_of("E2"));
  CHECK(validate(two.surface).ok());
  const std::size_t c1 = m.index_of("C1'"), c2 = m.index_of("C2'"), f = m.index_of("F"), l = m.index_of("l");
  // The model of V: both sections of self-intersection 0, fibers of square 0.
  auto dot = [&](std::size_t i, std::size_t j) {
    return mumford_intersection(two.surface, WeilDivisor::curve(i), WeilDivisor::curve(j));
  };
  CHECK(dot(c1, c1) == 0);
  CHECK(dot(c2, c2) == 0);
  CHECK(dot(l, l) == 0);
  CHECK(dot(f, f) == 0);
  CHECK(dot(c1, f) == 1);
  CHECK(dot(l, f) == 0);
}

TEST_CASE("rejections") {
  SUBCASE("non-negative self-intersection") {
    const Preset w = preset_example_12_3_w();
    CHECK(rejection(w.surface, Boundary(), w.surface.model.index_of("F")) == ErrorKind::RejectNonNegativeSelfInt);
  }
  SUBCASE("(K+Delta)-trivial curve") {
    const Preset w = preset_example_12_3_w();
    CHECK(rejection(w.surface, Boundary(), w.surface.model.index_of("l")) == ErrorKind::RejectKDeltaNonNegative);
  }
  SUBCASE("absorbing clusters into a degenerate form") {
    // A(-2)-B(-2) cluster and a (-1)-curve C meeting both closes a cycle
    // whose form is degenerate.
    const NormalSurface s = surface(model({rational("A"), rational("B"), rational("C")},
                                          {{-2, 1, 1}, {1, -2, 1}, {1, 1, -1}}),
                                    {{0, 1}});
    CHECK(validate(s).ok());
    CHECK(rejection(s, Boundary(), 2) == ErrorKind::RejectClusterDegenerate);
  }
  SUBCASE("absorbing a non-rational point") {
    // C0 meets a non-lc point (elliptic (-2)-curve chained to a (-3)-curve);
    // the numerical hypotheses hold but the absorbed point is not rational.
    const NormalSurface s = surface(model({rational("C0"), elliptic("C1"), rational("C2")},
                                          {{-1, 0, 1}, {0, -2, 1}, {1, 1, -3}}),
                                    {{1, 2}});
    CHECK(validate(s).ok());
    CHECK(rejection(s, Boundary(), 0) == ErrorKind::InconsistentWithTheorem84);
  }
}

TEST_CASE("descend_class") {
  const Preset p = preset_example_12_5(3);
  const SmoothModel& m = p.surface.model;
  const std::size_t b1 = m.index_of("B1"), f1 = m.index_of("F1");
  const ContractionResult r = contract(p.surface, p.boundary, b1);
  const WeilDivisor c = WeilDivisor::curve(b1);
  try {
    descend_class(p.surface, r.certificate, c);
    FAIL("expected NotOrthogonal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotOrthogonal);
  }
  CHECK(descend_class(p.surface, r.certificate, WeilDivisor()).is_zero());
  // F1·B1 = 1, B1² = -1: F1 + B1 is orthogonal to B1 and descends to F1.
  const WeilDivisor orth = WeilDivisor::curve(f1) + c;
  CHECK(descend_class(p.surface, r.certificate, orth) == WeilDivisor::curve(f1));
}

TEST_CASE("descend / pull-back round trip") {
  const auto res = properties::descend_round_trip(100, 8u);
  CHECK_MESSAGE(res.passed, res.detail);
  CHECK(res.cases == 100);
}

TEST_CASE("canonical degrees of untouched curves change by the exceptional correction") {
  const Preset p = preset_example_12_5(3);
  const SmoothModel& m = p.surface.model;
  const std::size_t b1 = m.index_of("B1");
  const ContractionResult r = contract(p.surface, Boundary(), b1);
  for (std::size_t c : r.surface.non_exceptional()) {
    const WeilDivisor d = WeilDivisor::curve(c);
    // Pulled back to the old surface, D' becomes D + alpha·B1, and
    // (K+Δ)·(D + alpha·B1) = (K'+Δ')·D' because B1 is orthogonal to g*D'.
    const Rational alpha = mumford_pullback(r.surface, d).exceptional_part[b1];
    CHECK(canonical_intersection(r.surface, Boundary(), d) ==
          canonical_intersection(p.surface, Boundary(), d) + alpha * r.certificate.kdelta_deg);
  }
}
