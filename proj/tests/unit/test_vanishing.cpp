#include <doctest.h>

#include "fixtures.hpp"
#include "lcsurf/error.hpp"
#include "lcsurf/vanishing.hpp"

using namespace lcsurf;
using namespace lcsurf::fixtures;

TEST_CASE("vanishing hypotheses on W") {
  const Preset w = preset_example_12_3_w();
  const NormalSurface& s = w.surface;
  const SmoothModel& m = s.model;
  const std::size_t e1 = m.index_of("E1"), e2 = m.index_of("E2"), l = m.index_of("l"), c1 = m.index_of("C1'");

  SUBCASE("contracting a (-1)-curve") {
    const auto v = check_vanishing_hypotheses(s, Boundary(), {{e1, 0}}, WeilDivisor());
    REQUIRE(v.rows.size() == 1);
    CHECK(v.rows[0].log_canonical_degree == -1);
    CHECK(v.rows[0].quantity == 1);
    CHECK(v.variant1);
    CHECK(v.variant2);
    CHECK(v.holds);
    CHECK(v.conclusion.starts_with("R^i f_*"));
    CHECK_FALSE(v.max_boundary_coefficient);
  }
  SUBCASE("quantity zero") {
    auto v = check_vanishing_hypotheses(s, Boundary(), {{l, 0}}, WeilDivisor());
    CHECK_FALSE(v.variant1);
    CHECK(v.variant2);
    CHECK(v.holds);
    v = check_vanishing_hypotheses(s, Boundary(), {{l, 0}}, WeilDivisor(), VanishingVariant::Strict);
    CHECK(v.requested == VanishingVariant::Strict);
    CHECK_FALSE(v.holds);
    CHECK(v.conclusion == "no conclusion");
    v = check_vanishing_hypotheses(s, Boundary(), {{l, 0}}, WeilDivisor(), VanishingVariant::Weak);
    CHECK(v.holds);
  }
  SUBCASE("reduced boundary") {
    const Boundary reduced({{c1, Rational(1)}});
    auto v = check_vanishing_hypotheses(s, reduced, {{l, 0}}, WeilDivisor());
    CHECK(v.max_boundary_coefficient == Rational(1));
    CHECK_FALSE(v.variant1);
    CHECK_FALSE(v.variant2);
    CHECK(v.conclusion == "no conclusion");
    v = check_vanishing_hypotheses(s, reduced, {{e2, 0}}, WeilDivisor());
    CHECK(v.variant1);
    CHECK_FALSE(v.variant2);
  }
  SUBCASE("fractional boundary and a divisor") {
    const Boundary half({{c1, Rational(1, 2)}});
    // (K + C1'/2)·E1 = -1 + 1/2; D = l adds l·E1 = 1.
    const auto v = check_vanishing_hypotheses(s, half, {{e1, 0}}, WeilDivisor::curve(m.index_of("l")));
    CHECK(v.rows[0].log_canonical_degree == Rational(-1, 2));
    CHECK(v.rows[0].divisor_degree == 1);
    CHECK(v.rows[0].quantity == Rational(3, 2));
    CHECK(v.variant1);
    CHECK(v.variant2);
  }
  SUBCASE("negative quantity") {
    const auto v = check_vanishing_hypotheses(s, Boundary(), {{e1, -2}}, WeilDivisor());
    CHECK(v.rows[0].quantity == -1);
    CHECK_FALSE(v.holds);
    CHECK(v.conclusion == "no conclusion");
  }
  SUBCASE("every curve must satisfy the inequality") {
    const auto v = check_vanishing_hypotheses(s, Boundary(), {{e1, 0}, {e2, -2}}, WeilDivisor());
    CHECK(v.rows.size() == 2);
    CHECK_FALSE(v.holds);
  }
}

TEST_CASE("vanishing rejects exceptional curves") {
  const Preset p = preset_example_12_3();
  try {
    check_vanishing_hypotheses(p.surface, Boundary(), {{p.surface.model.index_of("l"), 0}}, WeilDivisor());
    FAIL("expected NotNonExceptional");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotNonExceptional);
  }
}

TEST_CASE("relative vanishing cases on the smooth model") {
  const Preset w = preset_example_12_3_w();
  const SmoothModel& m = w.surface.model;
  const std::size_t l = m.index_of("l"), e1 = m.index_of("E1");
  RationalVector n(m.size());

  // A (-2)-curve with E = b·l and N = 0: L·l = (K + b l)·l = -2b.
  auto r = relative_vanishing_cases(m, {l}, {Rational(1, 2)}, n);
  CHECK(r.n_degrees == std::vector<Rational>{Rational(0)});
  CHECK(r.forced_line_bundle_degrees == std::vector<Rational>{Rational(-1)});
  CHECK(r.n_nef);
  CHECK(r.case1);
  CHECK(r.case2);
  CHECK_FALSE(r.case3);
  CHECK(r.holds());

  r = relative_vanishing_cases(m, {l}, {Rational(1)}, n);
  CHECK_FALSE(r.case1);
  CHECK_FALSE(r.case2);
  CHECK_FALSE(r.holds());

  n[e1] = 1;  // N·l = 1 > 0
  r = relative_vanishing_cases(m, {l}, {Rational(1)}, n);
  CHECK(r.case3);
  CHECK(r.holds());

  n[e1] = -1;
  r = relative_vanishing_cases(m, {l}, {Rational(0)}, n);
  CHECK_FALSE(r.n_nef);
  CHECK(r.case1);
  CHECK_FALSE(r.holds());

  RationalVector zero(m.size());
  r = relative_vanishing_cases(m, {l, e1}, {Rational(1, 3), Rational(1, 3)}, zero);
  CHECK(r.n_degrees.size() == 2);

  CHECK_THROWS_AS(relative_vanishing_cases(m, {}, {}, zero), Error);
  try {
    relative_vanishing_cases(m, {l}, {Rational(1), Rational(1)}, zero);
    FAIL("expected DimensionMismatch");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DimensionMismatch);
  }
  try {
    relative_vanishing_cases(m, {99}, {Rational(1)}, zero);
    FAIL("expected InvalidCluster");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidCluster);
  }
}
