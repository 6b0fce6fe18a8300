#include <doctest.h>

#include "fixtures.hpp"
#include "lcsurf/error.hpp"
#include "lcsurf/singularities.hpp"
#include "property_suites.hpp"

using namespace lcsurf;
using namespace lcsurf::fixtures;

TEST_CASE("validate: Example 12.3 clusters are valid") {
  const Preset p = preset_example_12_3();
  CHECK(validate(p.surface).ok());
  CHECK(validate(p.surface, p.boundary).ok());
  const SmoothModel& m = p.surface.model;
  CHECK(m.dot(m.index_of("l"), m.index_of("l")) == -2);
  CHECK(m.dot(m.index_of("C1'"), m.index_of("C1'")) == -1);
  CHECK(m.dot(m.index_of("C2'"), m.index_of("C2'")) == -1);
}

TEST_CASE("validate: degenerate and disconnected clusters") {
  CHECK(validate(three_cycle(-2, -2, -2)).has(ViolationKind::NotNegativeDefinite));
  const NormalSurface apart = surface(model({rational("A"), rational("B")}, {{-2, 0}, {0, -2}}), {{0, 1}});
  CHECK(validate(apart).has(ViolationKind::DisconnectedCluster));
  CHECK(validate(three_cycle(-3, -2, -2)).ok());
}

TEST_CASE("validate: model-level violations") {
  CHECK(validate(model({rational("A"), rational("A")}, {{-1, 0}, {0, -1}})).has(ViolationKind::DuplicateLabel));
  CHECK(validate(model({rational("A"), rational("B")}, {{-1, -1}, {-1, -1}})).has(ViolationKind::NegativeOffDiagonal));
  const SmoothModel bad_genus(std::vector<Curve>{Curve{"A", 0, 1, std::nullopt}}, SymMatrix{{-1}});
  CHECK(validate(bad_genus).has(ViolationKind::GenusOrder));
  SymMatrix half(1);
  half.set(0, 0, make_rational(1, 2));
  CHECK(validate(SmoothModel({rational("A")}, half)).has(ViolationKind::NonIntegerEntry));
}

TEST_CASE("validate: cluster bookkeeping") {
  const SmoothModel m = model({rational("A"), rational("B"), rational("C")}, {{-2, 1, 0}, {1, -2, 0}, {0, 0, -2}});
  CHECK(validate(surface(m, {{0}, {0, 1}})).has(ViolationKind::OverlappingClusters));
  CHECK(validate(surface(m, {{0}, {1}})).has(ViolationKind::ClustersMeet));
  CHECK(validate(surface(m, {{}})).has(ViolationKind::EmptyCluster));
  CHECK(validate(surface(m, {{7}})).has(ViolationKind::IndexOutOfRange));
  const NormalSurface s = surface(m, {{0, 1}});
  CHECK(validate(s, Boundary({{0, Rational(1)}})).has(ViolationKind::BoundaryOnExceptional));
  CHECK_THROWS_AS(Boundary({{2, Rational(2)}}), Error);
  CHECK(Boundary({{2, Rational(0)}}).empty());
}

TEST_CASE("every preset validates") {
  for (const auto& name : preset_names()) {
    const Preset p = preset_by_name(name, 4);
    CHECK_MESSAGE(validate(p.surface, p.boundary).ok(), name);
  }
}

TEST_CASE("infer_flags examples") {
  SUBCASE("rational points and Moishezon give projective") {
    NormalSurface s = with_point_records(chain_2_3(), Boundary());
    s.flags.moishezon = Tri::True;
    const SurfaceFlags f = infer_flags(s, Boundary());
    CHECK(f.rational_sings == Tri::True);
    CHECK(f.q_factorial == Tri::True);
    CHECK(f.projective == Tri::True);
    CHECK(f.fujiki == Tri::True);
  }
  SUBCASE("lc, Fujiki and kappa = -inf give projective") {
    NormalSurface s = with_point_records(elliptic_cone(2), Boundary());
    s.flags.fujiki = Tri::True;
    s.flags.kodaira_dim = KodairaDim::NegInf;
    const SurfaceFlags f = infer_flags(s, Boundary());
    CHECK(f.q_factorial == Tri::Unknown);
    CHECK(f.rational_sings == Tri::False);
    CHECK(f.projective == Tri::True);
    CHECK(f.moishezon == Tri::True);
  }
  SUBCASE("nothing known, no records") {
    const NormalSurface s = chain_2_3();
    CHECK(infer_flags(s, Boundary()) == SurfaceFlags{});
  }
  SUBCASE("kappa = 2 and Q-factorial give projective") {
    NormalSurface s = elliptic_cone(2);
    s.flags.q_factorial = Tri::True;
    s.flags.kodaira_dim = KodairaDim::Two;
    CHECK(infer_flags(s, Boundary()).projective == Tri::True);
  }
  SUBCASE("contradiction is reported") {
    NormalSurface s = with_point_records(chain_2_3(), Boundary());
    s.flags.moishezon = Tri::True;
    s.flags.projective = Tri::False;
    try {
      infer_flags(s, Boundary());
      FAIL("expected InconsistentFlags");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::InconsistentFlags);
    }
  }
  SUBCASE("not Moishezon forces not projective") {
    NormalSurface s = chain_2_3();
    s.flags.moishezon = Tri::False;
    CHECK(infer_flags(s, Boundary()).projective == Tri::False);
  }
}

TEST_CASE("infer_flags idempotence and monotonicity") {
  const auto r = properties::infer_flags_laws(300, 99u);
  CHECK_MESSAGE(r.passed, r.detail);
  CHECK(r.cases == 300);
}

TEST_CASE("tri-state and kodaira text forms") {
  for (Tri t : {Tri::True, Tri::False, Tri::Unknown}) CHECK(parse_tri(to_string(t)) == t);
  for (KodairaDim k : {KodairaDim::Unknown, KodairaDim::NegInf, KodairaDim::Zero, KodairaDim::One, KodairaDim::Two})
    CHECK(parse_kodaira_dim(to_string(k)) == k);
  CHECK_FALSE(parse_tri("maybe"));
}

TEST_CASE("adjunction degrees") {
  const SmoothModel m = preset_example_12_3_w().surface.model;
  CHECK(m.canonical_degree(m.index_of("C1'")) == 1);
  CHECK(m.canonical_degree(m.index_of("F")) == -2);
  CHECK(m.canonical_degree(m.index_of("l")) == 0);
  CHECK(m.canonical_degree(m.index_of("E1")) == -1);
}
