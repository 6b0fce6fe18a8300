#pragma once

#include <optional>
#include <set>

#include "lcsurf/contraction.hpp"

namespace lcsurf {

enum class Endpoint { MinimalNefOnList, MoriFiberIndicated, ExhaustedCandidates };

std::string_view to_string(Endpoint endpoint);

struct NefEntry {
  std::size_t curve;
  Rational degree;     // (K + Δ)·C
  Rational self_int;   // C² (Mumford)
};

struct NefReport {
  std::vector<NefEntry> entries;  // one per non-exceptional curve, model order
  std::optional<Rational> min_degree;
  std::optional<std::size_t> argmin;  // curve index of the first minimum
  bool nef_on_list() const { return !min_degree || *min_degree >= 0; }
};

NefReport nef_report(const NormalSurface& surface, const Boundary& boundary);

struct MMPTrace {
  std::vector<ContractionCertificate> steps;
  Endpoint endpoint = Endpoint::MinimalNefOnList;
  // π*C for every contracted curve, as vectors over the smooth model.
  std::vector<RationalVector> ledger;
  NormalSurface final_surface;
  Boundary final_boundary;
  std::string strategy;
};

inline constexpr std::string_view kMmpStrategy =
    "most negative (K+Delta)-degree among curves with negative Mumford self-intersection; ties by label (byte order)";

// Runs the (K+Δ)-MMP on the listed curves. When `candidate_support` is given
// only those curves are considered for contraction (they play the role of
// Supp D for an effective D in |m(K+Δ)|). Contraction errors propagate;
// a ledger whose Gram matrix is singular raises Error(LedgerDependence).
MMPTrace run_mmp(const NormalSurface& surface, const Boundary& boundary,
                 const std::optional<std::set<std::size_t>>& candidate_support = std::nullopt);

}  // namespace lcsurf
