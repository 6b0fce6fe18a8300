#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "lcsurf/error.hpp"
#include "lcsurf/singularities.hpp"
#include "property_suites.hpp"

using namespace lcsurf;
using namespace lcsurf::fixtures;

namespace {

RationalVector rv(std::initializer_list<Rational> values) { return RationalVector(values); }

}  // namespace

TEST_CASE("discrepancy examples") {
  const NormalSurface e = elliptic_cone(1);
  CHECK(discrepancies(e, Boundary(), e.clusters[0]) == rv({-1}));
  const NormalSurface a1 = surface(model({rational("l"), rational("D")}, {{-2, 1}, {1, -1}}), {{0}});
  CHECK(discrepancies(a1, Boundary(), a1.clusters[0]) == rv({0}));
  const NormalSurface cusp = three_cycle(-3, -2, -2);
  CHECK(discrepancies(cusp, Boundary(), cusp.clusters[0]) == rv({-1, -1, -1}));
}

TEST_CASE("discrepancies of quotient singularities (oracle)") {
  const NormalSurface chain = chain_2_3();
  const PointRecord r = classify_point(chain, Boundary(), chain.clusters[0]);
  CHECK(r.discrepancies == rv({make_rational(-1, 5), make_rational(-2, 5)}));
  CHECK(r.status == PointStatus::DltRational);
  CHECK_FALSE(r.gorenstein_hint);

  const NormalSurface four = surface(model({rational("E"), rational("C")}, {{-4, 1}, {1, -1}}), {{0}});
  CHECK(discrepancies(four, Boundary(), four.clusters[0]) == rv({make_rational(-1, 2)}));

  const NormalSurface three3 =
      surface(model({rational("A"), rational("B"), rational("C")}, {{-3, 1, 0}, {1, -3, 1}, {0, 1, -1}}), {{0, 1}});
  CHECK(discrepancies(three3, Boundary(), three3.clusters[0]) == rv({make_rational(-1, 2), make_rational(-1, 2)}));
}

TEST_CASE("classification of Example 12.3") {
  const Preset p = preset_example_12_3();
  const NormalSurface s = with_point_records(p.surface, p.boundary);
  REQUIRE(s.point_records.size() == 3);
  CHECK(s.point_records[0].status == PointStatus::LcSimpleElliptic);
  CHECK(s.point_records[0].discrepancies == rv({-1}));
  CHECK(s.point_records[0].gorenstein_hint);
  CHECK(s.point_records[1].status == PointStatus::LcSimpleElliptic);
  CHECK(s.point_records[2].status == PointStatus::DltRational);
  CHECK(s.point_records[2].discrepancies == rv({0}));
}

TEST_CASE("cusps: cycles and nodal curves") {
  const NormalSurface cusp = three_cycle(-3, -2, -2);
  const PointRecord r = classify_point(cusp, Boundary(), cusp.clusters[0]);
  CHECK(r.status == PointStatus::LcCusp);
  CHECK(r.gorenstein_hint);
  CHECK(is_rational_cycle(cusp.model, cusp.clusters[0].members));

  const NormalSurface nodal_pt = surface(model({nodal("N"), rational("C")}, {{-1, 1}, {1, -1}}), {{0}});
  const PointRecord n = classify_point(nodal_pt, Boundary(), nodal_pt.clusters[0]);
  CHECK(n.discrepancies == rv({-1}));
  CHECK(n.status == PointStatus::LcCusp);
}

TEST_CASE("not lc and the lc catch-all") {
  // A (-1) elliptic curve with a boundary curve through it: a = -2.
  const NormalSurface e = elliptic_cone(1);
  const PointRecord bad = classify_point(e, Boundary({{1, Rational(1)}}), e.clusters[0]);
  CHECK(bad.discrepancies == rv({-2}));
  CHECK(bad.status == PointStatus::NotLc);
  // A (-2)-curve met twice by a reduced boundary curve: a = -1, not a cusp.
  const NormalSurface s = surface(model({rational("E"), rational("C")}, {{-2, 2}, {2, -1}}), {{0}});
  const PointRecord other = classify_point(s, Boundary({{1, Rational(1)}}), s.clusters[0]);
  CHECK(other.discrepancies == rv({-1}));
  CHECK(other.status == PointStatus::LcRationalOther);
  CHECK(is_rational_status(PointStatus::LcRationalOther));
  CHECK_FALSE(is_rational_status(PointStatus::LcCusp));
}

TEST_CASE("degenerate cluster raises InvalidCluster") {
  const NormalSurface s = three_cycle(-2, -2, -2);
  try {
    discrepancies(s, Boundary(), s.clusters[0]);
    FAIL("expected InvalidCluster");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCluster);
  }
}

TEST_CASE("boundary compatibility") {
  const Preset p = preset_example_12_3();
  CHECK(check_boundary_compatibility(p.surface, Boundary()).ok());
  const SmoothModel& m = p.surface.model;
  const std::size_t e1 = m.index_of("E1");
  const auto report = check_boundary_compatibility(p.surface, Boundary({{e1, Rational(1)}}));
  REQUIRE(report.violations.size() == 1);
  CHECK(report.violations[0].cluster == 0);
  CHECK(report.violations[0].boundary_curve == e1);
  CHECK(report.violations[0].intrinsic_status == PointStatus::LcSimpleElliptic);
  CHECK(report.violations[0].discrepancies_with_boundary == rv({-2}));
  const Preset q = preset_example_12_5(3);
  CHECK(check_boundary_compatibility(q.surface, Boundary({{q.surface.model.index_of("B1"), Rational(1)}})).ok());
}

TEST_CASE("simple elliptic sweep") {
  const auto r = properties::elliptic_sweep(10);
  CHECK_MESSAGE(r.passed, r.detail);
  CHECK(r.cases == 10);
}

TEST_CASE("defining identity and boundary monotonicity") {
  std::mt19937 rng(17);
  const NormalSurface s = surface(model({rational("E1"), rational("E2"), rational("C"), rational("D")},
                                        {{-2, 1, 1, 0}, {1, -3, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}),
                                  {{0, 1}});
  for (int t = 0; t < 50; ++t) {
    const Rational bc = make_rational(static_cast<long>(rng() % 5), 4);
    const Rational bd = make_rational(static_cast<long>(rng() % 5), 4);
    const Boundary small({{2, bc}, {3, bd}});
    const Boundary large({{2, bc + (1 - bc) / 2}, {3, bd}});
    const RationalVector a = discrepancies(s, small, s.clusters[0]);
    const RationalVector b = discrepancies(s, large, s.clusters[0]);
    for (std::size_t j = 0; j < 2; ++j) {
      Rational lhs = s.model.canonical_degree(j) + bc * s.model.dot(2, j) + bd * s.model.dot(3, j);
      for (std::size_t i = 0; i < 2; ++i) lhs -= a[i] * s.model.dot(i, j);
      CHECK(lhs == 0);
      CHECK(b[j] <= a[j]);
    }
  }
}

TEST_CASE("discrepancies survive refinement of the exceptional set") {
  const NormalSurface chain = chain_2_3();
  const NormalSurface refined = refine(chain, CurveIntersection{0, 1}, "X");
  const RationalVector before = discrepancies(chain, Boundary(), chain.clusters[0]);
  const RationalVector after = discrepancies(refined, Boundary(), refined.clusters[0]);
  REQUIRE(refined.clusters[0].members.size() == 3);
  CHECK(after[0] == before[0]);
  CHECK(after[1] == before[1]);
  CHECK(classify_point(refined, Boundary(), refined.clusters[0]).status == PointStatus::DltRational);
}
