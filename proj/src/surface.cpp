#include "lcsurf/surface.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lcsurf/error.hpp"

namespace lcsurf {

std::string_view to_string(Tri value) {
  switch (value) {
    case Tri::True: return "true";
    case Tri::False: return "false";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<Tri> parse_tri(std::string_view text) {
  if (text == "true") return Tri::True;
  if (text == "false") return Tri::False;
  if (text == "unknown") return Tri::Unknown;
  return std::nullopt;
}

std::string_view to_string(KodairaDim value) {
  switch (value) {
    case KodairaDim::NegInf: return "-inf";
    case KodairaDim::Zero: return "0";
    case KodairaDim::One: return "1";
    case KodairaDim::Two: return "2";
    case KodairaDim::Unknown: return "unknown";
  }
  return "unknown";
}

std::optional<KodairaDim> parse_kodaira_dim(std::string_view text) {
  if (text == "-inf") return KodairaDim::NegInf;
  if (text == "0") return KodairaDim::Zero;
  if (text == "1") return KodairaDim::One;
  if (text == "2") return KodairaDim::Two;
  if (text == "unknown") return KodairaDim::Unknown;
  return std::nullopt;
}

std::string_view to_string(PointStatus status) {
  switch (status) {
    case PointStatus::DltRational: return "dlt_rational";
    case PointStatus::LcSimpleElliptic: return "lc_simple_elliptic";
    case PointStatus::LcCusp: return "lc_cusp";
    case PointStatus::LcRationalOther: return "lc_rational_other";
    case PointStatus::NotLc: return "not_lc";
  }
  return "not_lc";
}

std::optional<PointStatus> parse_point_status(std::string_view text) {
  for (auto s : {PointStatus::DltRational, PointStatus::LcSimpleElliptic, PointStatus::LcCusp,
                 PointStatus::LcRationalOther, PointStatus::NotLc}) {
    if (to_string(s) == text) return s;
  }
  return std::nullopt;
}

bool is_rational_status(PointStatus status) {
  return status == PointStatus::DltRational || status == PointStatus::LcRationalOther;
}

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DuplicateLabel: return "duplicate_label";
    case ViolationKind::GenusOrder: return "genus_order";
    case ViolationKind::NegativeGenus: return "negative_genus";
    case ViolationKind::NonIntegerEntry: return "non_integer_entry";
    case ViolationKind::NegativeOffDiagonal: return "negative_off_diagonal";
    case ViolationKind::EmptyCluster: return "empty_cluster";
    case ViolationKind::IndexOutOfRange: return "index_out_of_range";
    case ViolationKind::OverlappingClusters: return "overlapping_clusters";
    case ViolationKind::ClustersMeet: return "clusters_meet";
    case ViolationKind::DisconnectedCluster: return "disconnected_cluster";
    case ViolationKind::NotNegativeDefinite: return "not_negative_definite";
    case ViolationKind::BoundaryOnExceptional: return "boundary_on_exceptional";
    case ViolationKind::BoundaryOutOfRange: return "boundary_out_of_range";
    case ViolationKind::StaleRecords: return "stale_records";
  }
  return "unknown";
}

// --- SmoothModel -----------------------------------------------------------

SmoothModel::SmoothModel(std::vector<Curve> curves, SymMatrix intersections)
    : curves_(std::move(curves)), q_(std::move(intersections)) {
  if (q_.dimension() != curves_.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                "intersection matrix has dimension " + std::to_string(q_.dimension()) + " for " +
                    std::to_string(curves_.size()) + " curves");
  }
}

std::optional<std::size_t> SmoothModel::find(std::string_view label) const {
  for (std::size_t i = 0; i < curves_.size(); ++i) {
    if (curves_[i].label == label) return i;
  }
  return std::nullopt;
}

std::size_t SmoothModel::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorKind::UnknownName, "unknown curve '" + std::string(label) + "'");
}

Rational SmoothModel::canonical_degree(std::size_t i) const {
  return Rational(2 * curves_.at(i).arithmetic_genus - 2) - q_(i, i);
}

Rational SmoothModel::canonical_degree(std::span<const Rational> v) const {
  Rational acc = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) acc += v[i] * canonical_degree(i);
  }
  return acc;
}

SmoothModel SmoothModel::with_curve(Curve curve, std::span<const Rational> row) const {
  if (row.size() != curves_.size() + 1) {
    throw Error(ErrorKind::DimensionMismatch, "intersection row for new curve has wrong length");
  }
  SymMatrix q = q_.extended();
  const std::size_t n = curves_.size();
  for (std::size_t j = 0; j <= n; ++j) q.set(n, j, row[j]);
  auto curves = curves_;
  curves.push_back(std::move(curve));
  return SmoothModel(std::move(curves), std::move(q));
}

SmoothModel SmoothModel::with_intersection(std::size_t i, std::size_t j, const Rational& value) const {
  SymMatrix q = q_;
  q.set(i, j, value);
  return SmoothModel(curves_, std::move(q));
}

// --- Cluster / Boundary / NormalSurface ------------------------------------

Cluster::Cluster(std::vector<std::size_t> indices) : members(std::move(indices)) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool Cluster::contains(std::size_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

Boundary::Boundary(std::map<std::size_t, Rational> coefficients) {
  for (auto& [curve, c] : coefficients) {
    if (c < 0 || c > 1) {
      throw Error(ErrorKind::ValidationError, "boundary coefficient " + to_string(c) +
                                                  " on curve " + std::to_string(curve) +
                                                  " is outside [0,1]");
    }
    if (c != 0) coeffs_.emplace(curve, c);
  }
}

Rational Boundary::coefficient(std::size_t curve) const {
  auto it = coeffs_.find(curve);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

Boundary Boundary::without(std::size_t curve) const {
  Boundary out = *this;
  out.coeffs_.erase(curve);
  return out;
}

RationalVector Boundary::as_vector(std::size_t n) const {
  RationalVector v(n);
  for (const auto& [curve, c] : coeffs_) {
    if (curve >= n) throw Error(ErrorKind::DimensionMismatch, "boundary refers to a missing curve");
    v[curve] = c;
  }
  return v;
}

bool NormalSurface::is_exceptional(std::size_t curve) const { return cluster_of(curve).has_value(); }

std::optional<std::size_t> NormalSurface::cluster_of(std::size_t curve) const {
  for (std::size_t k = 0; k < clusters.size(); ++k) {
    if (clusters[k].contains(curve)) return k;
  }
  return std::nullopt;
}

std::vector<std::size_t> NormalSurface::non_exceptional() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (!is_exceptional(i)) out.push_back(i);
  }
  return out;
}

// --- validation ------------------------------------------------------------

bool ValidationReport::has(ViolationKind kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [kind](const Violation& v) { return v.kind == kind; });
}

bool is_connected(const SmoothModel& model, std::span<const std::size_t> members) {
  if (members.empty()) return true;
  std::vector<bool> seen(members.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < members.size(); ++b) {
      if (!seen[b] && model.dot(members[a], members[b]) > 0) {
        seen[b] = true;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == members.size();
}

ValidationReport validate(const SmoothModel& model) {
  ValidationReport report;
  auto add = [&](ViolationKind kind, std::vector<std::size_t> idx, std::string msg) {
    report.violations.push_back({kind, std::move(idx), std::move(msg)});
  };
  std::set<std::string> labels;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const Curve& c = model.curve(i);
    if (!labels.insert(c.label).second) add(ViolationKind::DuplicateLabel, {i}, "duplicate label " + c.label);
    if (c.arithmetic_genus < 0 || c.geometric_genus < 0) {
      add(ViolationKind::NegativeGenus, {i}, "negative genus on " + c.label);
    }
    if (c.geometric_genus > c.arithmetic_genus) {
      add(ViolationKind::GenusOrder, {i}, "geometric genus exceeds arithmetic genus on " + c.label);
    }
  }
  for (std::size_t i = 0; i < model.size(); ++i) {
    for (std::size_t j = i; j < model.size(); ++j) {
      const Rational& v = model.dot(i, j);
      if (!is_integer(v)) {
        add(ViolationKind::NonIntegerEntry, {i, j}, "non-integer intersection " + to_string(v));
      } else if (i != j && v < 0) {
        add(ViolationKind::NegativeOffDiagonal, {i, j},
            "distinct curves " + model.curve(i).label + ", " + model.curve(j).label +
                " meet negatively");
      }
    }
  }
  return report;
}

ValidationReport validate(const NormalSurface& surface) {
  ValidationReport report = validate(surface.model);
  auto add = [&](ViolationKind kind, std::vector<std::size_t> idx, std::string msg) {
    report.violations.push_back({kind, std::move(idx), std::move(msg)});
  };
  const std::size_t n = surface.model.size();
  std::vector<int> owner(n, -1);
  for (std::size_t k = 0; k < surface.clusters.size(); ++k) {
    const Cluster& cluster = surface.clusters[k];
    const std::string name = "cluster " + std::to_string(k);
    if (cluster.members.empty()) {
      add(ViolationKind::EmptyCluster, {k}, name + " is empty");
      continue;
    }
    bool in_range = true;
    for (std::size_t m : cluster.members) {
      if (m >= n) {
        add(ViolationKind::IndexOutOfRange, {k, m}, name + " refers to curve index " + std::to_string(m));
        in_range = false;
        continue;
      }
      if (owner[m] >= 0) {
        add(ViolationKind::OverlappingClusters, {static_cast<std::size_t>(owner[m]), k, m},
            "curve " + surface.model.curve(m).label + " appears in two clusters");
      } else {
        owner[m] = static_cast<int>(k);
      }
    }
    if (!in_range) continue;
    if (!is_connected(surface.model, cluster.members)) {
      add(ViolationKind::DisconnectedCluster, {k}, name + " has a disconnected dual graph");
    }
    if (!is_negative_definite(surface.model.intersections().principal_submatrix(cluster.members))) {
      add(ViolationKind::NotNegativeDefinite, {k}, name + " is not negative definite");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (owner[i] >= 0 && owner[j] >= 0 && owner[i] != owner[j] && surface.model.dot(i, j) != 0) {
        add(ViolationKind::ClustersMeet, {i, j},
            "curves " + surface.model.curve(i).label + " and " + surface.model.curve(j).label +
                " lie in different clusters but meet");
      }
    }
  }
  if (!surface.point_records.empty() && !surface.has_point_records()) {
    add(ViolationKind::StaleRecords, {}, "point records are not aligned with clusters");
  } else {
    for (std::size_t k = 0; k < surface.point_records.size(); ++k) {
      if (!(surface.point_records[k].cluster == surface.clusters[k])) {
        add(ViolationKind::StaleRecords, {k}, "point record " + std::to_string(k) + " describes another cluster");
      }
    }
  }
  return report;
}

ValidationReport validate(const NormalSurface& surface, const Boundary& boundary) {
  ValidationReport report = validate(surface);
  for (const auto& [curve, c] : boundary.coefficients()) {
    if (curve >= surface.model.size()) {
      report.violations.push_back(
          {ViolationKind::IndexOutOfRange, {curve}, "boundary refers to curve index " + std::to_string(curve)});
      continue;
    }
    if (surface.is_exceptional(curve)) {
      report.violations.push_back({ViolationKind::BoundaryOnExceptional, {curve},
                                   "boundary coefficient on exceptional curve " +
                                       surface.model.curve(curve).label});
    }
    if (c < 0 || c > 1) {
      report.violations.push_back(
          {ViolationKind::BoundaryOutOfRange, {curve}, "boundary coefficient outside [0,1]"});
    }
  }
  return report;
}

// --- flag inference --------------------------------------------------------

namespace {

// Sets `slot` to `value`, reporting whether anything changed. Contradicting a
// known value is an error.
bool derive(Tri& slot, Tri value, std::string_view flag, std::string_view rule) {
  if (slot == value) return false;
  if (slot != Tri::Unknown) {
    throw Error(ErrorKind::InconsistentFlags, "rule '" + std::string(rule) + "' derives " + std::string(flag) +
                                                  "=" + std::string(to_string(value)) + " but it is " +
                                                  std::string(to_string(slot)));
  }
  slot = value;
  return true;
}

}  // namespace

SurfaceFlags infer_flags(const NormalSurface& surface, const Boundary& boundary) {
  SurfaceFlags f = surface.flags;
  const bool records = surface.has_point_records();
  bool all_rational = records;
  bool some_nonrational = false;
  bool lc = records && std::all_of(boundary.coefficients().begin(), boundary.coefficients().end(),
                                   [](const auto& kv) { return kv.second >= 0; });
  if (records) {
    for (const PointRecord& r : surface.point_records) {
      if (!is_rational_status(r.status)) all_rational = false;
      if (r.status == PointStatus::LcSimpleElliptic || r.status == PointStatus::LcCusp) some_nonrational = true;
      if (r.status == PointStatus::NotLc) lc = false;
    }
  }

  bool changed = true;
  while (changed) {
    changed = false;
    if (all_rational) changed |= derive(f.rational_sings, Tri::True, "rational_sings", "all points rational");
    if (some_nonrational) {
      changed |= derive(f.rational_sings, Tri::False, "rational_sings", "elliptic or cusp point");
    }
    if (f.rational_sings == Tri::True) changed |= derive(f.q_factorial, Tri::True, "q_factorial", "rational => Q-factorial");
    const bool qf = f.q_factorial == Tri::True;
    const bool neg_inf = f.kodaira_dim == KodairaDim::NegInf;
    if (qf && f.moishezon == Tri::True) {
      changed |= derive(f.projective, Tri::True, "projective", "Q-factorial Moishezon");
    }
    if (qf && f.fujiki == Tri::True && neg_inf) {
      changed |= derive(f.projective, Tri::True, "projective", "Q-factorial Fujiki kappa=-inf");
    }
    if (lc && f.fujiki == Tri::True && neg_inf) {
      changed |= derive(f.projective, Tri::True, "projective", "lc Fujiki kappa=-inf");
    }
    if (f.kodaira_dim == KodairaDim::Two && qf) {
      changed |= derive(f.projective, Tri::True, "projective", "Q-factorial kappa=2");
    }
    if (f.projective == Tri::True) {
      changed |= derive(f.moishezon, Tri::True, "moishezon", "projective => Moishezon");
      changed |= derive(f.fujiki, Tri::True, "fujiki", "projective => Fujiki");
    }
    if (f.moishezon == Tri::False || f.fujiki == Tri::False) {
      changed |= derive(f.projective, Tri::False, "projective", "non-Moishezon or non-Fujiki");
    }
  }
  return f;
}

}  // namespace lcsurf
