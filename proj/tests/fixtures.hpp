#pragma once

// Small hand-built surfaces shared by the unit tests and the acceptance
// binary. Values that tests compare against are reproduced independently by
// tests/oracles/oracles.py.

#include <string>
#include <vector>

#include "lcsurf/builders.hpp"

namespace lcsurf::fixtures {

inline Curve rational(std::string label) { return Curve{std::move(label), 0, 0, std::nullopt}; }
inline Curve elliptic(std::string label) { return Curve{std::move(label), 1, 1, std::nullopt}; }
inline Curve nodal(std::string label) { return Curve{std::move(label), 1, 0, std::nullopt}; }

inline SmoothModel model(std::vector<Curve> curves, std::initializer_list<std::initializer_list<long>> rows) {
  return SmoothModel(std::move(curves), SymMatrix(rows));
}

inline NormalSurface surface(SmoothModel m, std::vector<std::vector<std::size_t>> clusters) {
  NormalSurface s;
  s.model = std::move(m);
  for (auto& c : clusters) s.clusters.emplace_back(std::move(c));
  return s;
}

// Cycle of three rational curves with the given self-intersections plus one
// transversal curve C meeting the first member once.
inline NormalSurface three_cycle(long a, long b, long c) {
  return surface(model({rational("E1"), rational("E2"), rational("E3"), rational("C")},
                       {{a, 1, 1, 1}, {1, b, 1, 0}, {1, 1, c, 0}, {1, 0, 0, -1}}),
                 {{0, 1, 2}});
}

// Chain E1(-2) - E2(-3) with C meeting E1 once; C² = -1 on the smooth model.
inline NormalSurface chain_2_3() {
  return surface(model({rational("E1"), rational("E2"), rational("C"), rational("D")},
                       {{-2, 1, 1, 0}, {1, -3, 0, 1}, {1, 0, -1, 0}, {0, 1, 0, -1}}),
                 {{0, 1}});
}

// A single elliptic curve of self-intersection -d meeting a (-1)-curve C.
inline NormalSurface elliptic_cone(long d) {
  return surface(model({elliptic("E"), rational("C")}, {{-d, 1}, {1, -1}}), {{0}});
}

}  // namespace lcsurf::fixtures
