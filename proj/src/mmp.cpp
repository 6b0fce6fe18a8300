#include "lcsurf/mmp.hpp"

#include "lcsurf/error.hpp"

namespace lcsurf {

std::string_view to_string(Endpoint endpoint) {
  switch (endpoint) {
    case Endpoint::MinimalNefOnList: return "minimal_nef_on_list";
    case Endpoint::MoriFiberIndicated: return "mori_fiber_indicated";
    case Endpoint::ExhaustedCandidates: return "exhausted_candidates";
  }
  return "unknown";
}

NefReport nef_report(const NormalSurface& surface, const Boundary& boundary) {
  NefReport report;
  for (std::size_t i : surface.non_exceptional()) {
    const WeilDivisor c = WeilDivisor::curve(i);
    NefEntry entry{i, canonical_intersection(surface, boundary, c), mumford_intersection(surface, c, c)};
    if (!report.min_degree || entry.degree < *report.min_degree) {
      report.min_degree = entry.degree;
      report.argmin = i;
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

void check_ledger(const SmoothModel& model, const std::vector<RationalVector>& ledger) {
  SymMatrix gram(ledger.size());
  for (std::size_t i = 0; i < ledger.size(); ++i)
    for (std::size_t j = i; j < ledger.size(); ++j)
      gram.set(i, j, model.intersections().bilinear(ledger[i], ledger[j]));
  if (determinant(gram) == 0) {
    throw Error(ErrorKind::LedgerDependence, "contracted classes became numerically dependent after " +
                                                 std::to_string(ledger.size()) + " steps");
  }
}

}  // namespace

MMPTrace run_mmp(const NormalSurface& surface, const Boundary& boundary,
                 const std::optional<std::set<std::size_t>>& candidate_support) {
  MMPTrace trace;
  trace.strategy = std::string(kMmpStrategy);
  NormalSurface current = surface;
  Boundary delta = boundary;
  const std::size_t bound = surface.non_exceptional().size();

  for (;;) {
    const NefReport report = nef_report(current, delta);
    const NefEntry* pick = nullptr;
    for (const NefEntry& e : report.entries) {
      if (candidate_support && !candidate_support->contains(e.curve)) continue;
      if (e.degree >= 0 || e.self_int >= 0) continue;
      if (!pick || e.degree < pick->degree ||
          (e.degree == pick->degree && current.model.curve(e.curve).label < current.model.curve(pick->curve).label)) {
        pick = &e;
      }
    }
    if (!pick) {
      bool negative_elsewhere = false;
      for (const NefEntry& e : report.entries) {
        if (e.degree < 0 && e.self_int < 0) negative_elsewhere = true;
      }
      // Without a support restriction a negative curve left over must have
      // C² >= 0; with one, a negative curve outside the support may remain.
      if (report.nef_on_list()) trace.endpoint = Endpoint::MinimalNefOnList;
      else if (negative_elsewhere) trace.endpoint = Endpoint::ExhaustedCandidates;
      else trace.endpoint = Endpoint::MoriFiberIndicated;
      break;
    }
    if (trace.steps.size() >= bound) {
      throw Error(ErrorKind::LedgerDependence, "step count exceeded the number of listed curves");
    }
    const std::size_t curve = pick->curve;
    RationalVector pulled = mumford_pullback(current, WeilDivisor::curve(curve)).total();
    ContractionResult step = contract(current, delta, curve);
    trace.ledger.push_back(std::move(pulled));
    check_ledger(current.model, trace.ledger);
    trace.steps.push_back(std::move(step.certificate));
    current = std::move(step.surface);
    delta = std::move(step.boundary);
  }
  trace.final_surface = std::move(current);
  trace.final_boundary = std::move(delta);
  return trace;
}

}  // namespace lcsurf
