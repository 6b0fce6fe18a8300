#include "lcsurf/builders.hpp"

#include <algorithm>

#include "lcsurf/error.hpp"
#include "lcsurf/singularities.hpp"

namespace lcsurf {

RuledSurface ruled_over_curve(int genus, const PicLedger& ledger, std::string_view line_bundle,
                              std::string_view base_name) {
  if (genus < 0) throw Error(ErrorKind::ValidationError, "negative genus");
  const std::size_t l = ledger.index_of(line_bundle);
  const long d = ledger.generators()[l].degree;
  const std::string base(base_name);
  std::vector<Curve> curves{{"C1", genus, genus, base}, {"C2", genus, genus, base}, {"F", 0, 0, std::nullopt}};
  SymMatrix q(3);
  q.set(0, 0, Rational(-d));
  q.set(1, 1, Rational(d));
  q.set(0, 1, Rational(0));
  q.set(2, 2, Rational(0));
  q.set(0, 2, Rational(1));
  q.set(1, 2, Rational(1));
  RuledSurface out;
  out.model = SmoothModel(std::move(curves), std::move(q));
  out.degree = d;
  out.minus_normal = IntegerVector(ledger.size());
  out.minus_normal[l] = -1;
  out.minus_on_plus = IntegerVector(ledger.size());
  return out;
}

BlowUp blow_up(const SmoothModel& model, const BlowUpSite& site, std::string label) {
  if (model.find(label)) throw Error(ErrorKind::BadSite, "label " + label + " is already in use");
  BlowUp out;
  SmoothModel m = model;
  if (const auto* on = std::get_if<PointOnCurve>(&site)) {
    if (on->curve >= model.size()) throw Error(ErrorKind::BadSite, "blow-up center on a missing curve");
    out.through = {on->curve};
  } else if (const auto* x = std::get_if<CurveIntersection>(&site)) {
    if (x->first >= model.size() || x->second >= model.size() || x->first == x->second) {
      throw Error(ErrorKind::BadSite, "intersection site needs two distinct listed curves");
    }
    if (model.dot(x->first, x->second) <= 0) {
      throw Error(ErrorKind::BadSite, "curves " + model.curve(x->first).label + " and " +
                                          model.curve(x->second).label + " do not meet");
    }
    out.through = {x->first, x->second};
    m = m.with_intersection(x->first, x->second, model.dot(x->first, x->second) - 1);
  }
  for (std::size_t c : out.through) m = m.with_intersection(c, c, m.dot(c, c) - 1);
  RationalVector row(model.size() + 1);
  for (std::size_t c : out.through) row[c] = 1;
  row.back() = -1;
  out.exceptional = model.size();
  out.model = m.with_curve(Curve{std::move(label), 0, 0, std::nullopt}, row);
  return out;
}

NormalSurface refine(const NormalSurface& surface, const BlowUpSite& site, std::string label) {
  BlowUp b = blow_up(surface.model, site, std::move(label));
  NormalSurface out;
  out.model = std::move(b.model);
  out.flags = surface.flags;
  out.clusters = surface.clusters;
  std::optional<std::size_t> home;
  for (std::size_t c : b.through) {
    if (auto k = surface.cluster_of(c)) home = k;
  }
  if (home) {
    auto members = out.clusters[*home].members;
    members.push_back(b.exceptional);
    out.clusters[*home] = Cluster(std::move(members));
  } else {
    out.clusters.push_back(Cluster({b.exceptional}));
  }
  return out;
}

SmoothModel add_fiber(const SmoothModel& model, std::size_t fiber, std::string label) {
  RationalVector row(model.size() + 1);
  for (std::size_t i = 0; i < model.size(); ++i) row[i] = model.dot(fiber, i);
  row.back() = model.dot(fiber, fiber);
  const Curve& f = model.curve(fiber);
  return model.with_curve(Curve{std::move(label), f.arithmetic_genus, f.geometric_genus, f.base_link}, row);
}

SmoothModel relabel(const SmoothModel& model, std::size_t curve, std::string label) {
  auto curves = model.curves();
  curves.at(curve).label = std::move(label);
  return SmoothModel(std::move(curves), model.intersections());
}

namespace {

// Base ledger of the examples: a point P of degree one and the non-torsion
// degree-zero class L.
PicLedger example_ledger() {
  return PicLedger({{"P", 1, false}, {"L", 0, true}});
}

struct WData {
  SmoothModel model;
  std::size_t c1, c2, l, f, e1, e2;
  std::vector<std::size_t> through_e1, through_e2;
  RuledSurface ruled;
};

WData build_w() {
  const PicLedger ledger = example_ledger();
  WData w;
  w.ruled = ruled_over_curve(1, ledger, "L");
  SmoothModel m = add_fiber(w.ruled.model, w.ruled.fiber, "Fgen");
  // P1 = C1 ∩ π⁻¹(P), then P2 = C2 ∩ (strict transform of the fiber).
  BlowUp b1 = blow_up(m, CurveIntersection{w.ruled.minus, w.ruled.fiber}, "E1");
  BlowUp b2 = blow_up(b1.model, CurveIntersection{w.ruled.plus, w.ruled.fiber}, "E2");
  m = b2.model;
  m = relabel(m, w.ruled.minus, "C1'");
  m = relabel(m, w.ruled.plus, "C2'");
  m = relabel(m, w.ruled.fiber, "l");
  m = relabel(m, m.index_of("Fgen"), "F");
  w.model = m;
  w.c1 = m.index_of("C1'");
  w.c2 = m.index_of("C2'");
  w.l = m.index_of("l");
  w.f = m.index_of("F");
  w.e1 = b1.exceptional;
  w.e2 = b2.exceptional;
  w.through_e1 = b1.through;
  w.through_e2 = b2.through;
  return w;
}

std::map<std::size_t, Integer> one(std::size_t i) { return {{i, Integer(1)}}; }

// Pic(W) = π*Pic(C) ⊕ ℤ p*C1 ⊕ ℤ E1 ⊕ ℤ E2 (plus any extra exceptional
// curves), with restrictions to C1', C2' and l.
void attach_picard(Preset& preset, const WData& w, const std::vector<std::size_t>& extra_exceptional) {
  const SmoothModel& m = preset.surface.model;
  PicBasis basis;
  basis.ledger = example_ledger();
  basis.fiber = one(w.f);
  basis.curve_generators.push_back({"pC1", {{w.c1, Integer(1)}, {w.e1, Integer(1)}}});
  basis.curve_generators.push_back({"E1", one(w.e1)});
  basis.curve_generators.push_back({"E2", one(w.e2)});
  for (std::size_t b : extra_exceptional) basis.curve_generators.push_back({m.curve(b).label, one(b)});

  const std::size_t p = basis.ledger.index_of("P");
  const std::size_t nl = basis.ledger.size();
  auto point = [&] {
    IntegerVector v(nl);
    v[p] = 1;
    return v;
  };
  auto ledger_entry = [&](std::size_t section, const IntegerVector& pc1_image) {
    Restriction r{section, RestrictionKind::Ledger, {}};
    // π*M restricts to M on a section.
    for (std::size_t g = 0; g < nl; ++g) {
      IntegerVector v(nl);
      v[g] = 1;
      r.images.push_back(v);
    }
    r.images.push_back(pc1_image);
    const bool on_e1 = std::find(w.through_e1.begin(), w.through_e1.end(), section) != w.through_e1.end();
    const bool on_e2 = std::find(w.through_e2.begin(), w.through_e2.end(), section) != w.through_e2.end();
    r.images.push_back(on_e1 ? point() : IntegerVector(nl));
    r.images.push_back(on_e2 ? point() : IntegerVector(nl));
    for (std::size_t i = 0; i < extra_exceptional.size(); ++i) r.images.push_back(IntegerVector(nl));
    return r;
  };
  preset.table.entries.push_back(ledger_entry(w.c1, w.ruled.minus_normal));
  preset.table.entries.push_back(ledger_entry(w.c2, w.ruled.minus_on_plus));

  // Degrees on the rational curve l: π*M·l = 0, p*C1·l = 1, E_i·l = 1.
  Restriction on_l{w.l, RestrictionKind::Degree, {}};
  for (std::size_t g = 0; g < basis.size(); ++g) {
    const RationalVector cls = numerical_class(m, basis, PicClass::from_flat(basis, [&] {
      IntegerVector e(basis.size());
      e[g] = 1;
      return e;
    }()));
    on_l.images.push_back({m.intersections().multiply(cls)[w.l].get_num()});
  }
  preset.table.entries.push_back(std::move(on_l));
  preset.basis = std::move(basis);
  validate_table(m, preset.basis, preset.table);
}

void finish_flags(Preset& preset) {
  NormalSurface& s = preset.surface;
  s = with_point_records(std::move(s), preset.boundary);
  std::vector<WeilDivisor> witnesses = preset.witnesses;
  const LedgerVerdict verdict = ledger_verdict(s, preset.basis, preset.table, witnesses);
  if (verdict.q_factorial != Tri::Unknown) s.flags.q_factorial = verdict.q_factorial;
  if (verdict.projective != Tri::Unknown) s.flags.projective = verdict.projective;
  s.flags = infer_flags(s, preset.boundary);
}

SurfaceFlags algebraic(KodairaDim kappa) {
  SurfaceFlags f;
  f.moishezon = Tri::True;
  f.fujiki = Tri::True;
  f.kodaira_dim = kappa;
  return f;
}

}  // namespace

Preset preset_example_12_3_w() {
  const WData w = build_w();
  Preset preset;
  preset.name = "ex12_3_w";
  preset.surface.model = w.model;
  preset.surface.flags = algebraic(KodairaDim::NegInf);
  attach_picard(preset, w, {});
  preset.expectations = {{"mmp_steps", "2"},
                         {"mmp_endpoint", "mori_fiber_indicated"},
                         {"mmp_contracted", "E1,E2"},
                         {"k_degree.F", "-2"},
                         {"self_int.F", "0"}};
  finish_flags(preset);
  return preset;
}

Preset preset_example_12_3() {
  const WData w = build_w();
  Preset preset;
  preset.name = "ex12_3";
  preset.surface.model = w.model;
  preset.surface.clusters = {Cluster({w.c1}), Cluster({w.c2}), Cluster({w.l})};
  preset.surface.flags = algebraic(KodairaDim::Zero);
  attach_picard(preset, w, {});
  preset.witnesses = {WeilDivisor::curve(w.e1), WeilDivisor::curve(w.e2)};
  preset.expectations = {{"status.C1'", "lc_simple_elliptic"}, {"status.C2'", "lc_simple_elliptic"},
                         {"status.l", "dlt_rational"},         {"discrepancy.C1'", "-1"},
                         {"discrepancy.C2'", "-1"},            {"discrepancy.l", "0"},
                         {"pic_rank", "0"},                    {"k_numerically_trivial", "true"},
                         {"mmp_steps", "0"},                   {"mmp_endpoint", "minimal_nef_on_list"}};
  finish_flags(preset);
  return preset;
}

Preset preset_example_12_4() {
  const WData w = build_w();
  Preset preset;
  preset.name = "ex12_4";
  preset.surface.model = w.model;
  preset.surface.clusters = {Cluster({w.c1}), Cluster({w.c2})};
  preset.surface.flags = algebraic(KodairaDim::Zero);
  attach_picard(preset, w, {});
  preset.witnesses = {WeilDivisor::curve(w.e1)};
  preset.expectations = {{"status.C1'", "lc_simple_elliptic"},
                         {"status.C2'", "lc_simple_elliptic"},
                         {"pic_rank", "1"},
                         {"pic_generator", "l"},
                         {"self_int.l", "-2"},
                         {"nef_cone_zero", "true"},
                         {"mmp_steps", "0"},
                         {"mmp_endpoint", "minimal_nef_on_list"}};
  finish_flags(preset);
  return preset;
}

Preset preset_example_12_5(int rho) {
  if (rho < 2) throw Error(ErrorKind::ValidationError, "example 12.5 needs rho >= 2");
  const WData w = build_w();
  SmoothModel m = w.model;
  std::vector<std::size_t> fibers;
  std::vector<std::size_t> blown;
  for (int i = 1; i < rho; ++i) {
    m = add_fiber(m, w.f, "F" + std::to_string(i));
    fibers.push_back(m.size() - 1);
  }
  for (int i = 1; i < rho; ++i) {
    BlowUp b = blow_up(m, PointOnCurve{fibers[static_cast<std::size_t>(i - 1)]}, "B" + std::to_string(i));
    m = std::move(b.model);
    blown.push_back(b.exceptional);
  }
  Preset preset;
  preset.name = "ex12_5";
  preset.surface.model = m;
  preset.surface.clusters = {Cluster({w.c1}), Cluster({w.c2})};
  preset.surface.flags = algebraic(KodairaDim::Zero);
  attach_picard(preset, w, blown);
  preset.witnesses.push_back(WeilDivisor::curve(w.e1));
  for (std::size_t f : fibers) preset.witnesses.push_back(WeilDivisor::curve(f));
  std::string contracted;
  for (std::size_t b : blown) contracted += (contracted.empty() ? "" : ",") + m.curve(b).label;
  preset.expectations = {{"rho", std::to_string(rho)},
                         {"pic_rank", std::to_string(rho)},
                         {"nef_cone_zero", "true"},
                         {"mmp_steps", std::to_string(rho - 1)},
                         {"mmp_contracted", contracted},
                         {"mmp_endpoint", "minimal_nef_on_list"}};
  finish_flags(preset);
  return preset;
}

std::vector<std::string> preset_names() { return {"ex12_3", "ex12_3_w", "ex12_4", "ex12_5"}; }

Preset preset_by_name(std::string_view name, int rho) {
  if (name == "ex12_3") return preset_example_12_3();
  if (name == "ex12_3_w") return preset_example_12_3_w();
  if (name == "ex12_4") return preset_example_12_4();
  if (name == "ex12_5") return preset_example_12_5(rho);
  throw Error(ErrorKind::UnknownName, "unknown preset '" + std::string(name) + "'");
}

Preset contract_preset(const Preset& preset, std::size_t curve, ContractionCertificate* certificate) {
  const ContractionResult r = contract(preset.surface, preset.boundary, curve);
  Preset next = preset;
  next.surface = with_point_records(r.surface, r.boundary);
  next.surface.flags = r.certificate.flags_after;
  next.boundary = r.boundary;
  next.witnesses.clear();
  for (const WeilDivisor& w : preset.witnesses) {
    WeilDivisor moved = w.without(curve);
    if (!moved.is_zero()) next.witnesses.push_back(std::move(moved));
  }
  next.expectations.clear();
  if (!next.name.empty()) next.name += "/" + preset.surface.model.curve(curve).label;
  if (certificate) *certificate = r.certificate;
  return next;
}

}  // namespace lcsurf
