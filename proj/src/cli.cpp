#include "lcsurf/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "lcsurf/contraction.hpp"
#include "lcsurf/document.hpp"
#include "lcsurf/error.hpp"
#include "lcsurf/mmp.hpp"
#include "lcsurf/singularities.hpp"
#include "lcsurf/vanishing.hpp"

namespace lcsurf {

namespace {

using json = nlohmann::ordered_json;

std::string q(const Rational& r) { return to_string(r); }

json q_vec(std::span<const Rational> v) {
  json a = json::array();
  for (const Rational& r : v) a.push_back(q(r));
  return a;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? std::string(sep) : "") + parts[i];
  return out;
}

std::vector<std::string> split_commas(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  for (auto& p : out) {
    while (!p.empty() && p.front() == ' ') p.erase(p.begin());
    while (!p.empty() && p.back() == ' ') p.pop_back();
  }
  std::erase_if(out, [](const std::string& p) { return p.empty(); });
  return out;
}

std::string labels(const SmoothModel& m, std::span<const std::size_t> idx) {
  std::vector<std::string> parts;
  for (std::size_t i : idx) parts.push_back(m.curve(i).label);
  return join(parts, " ");
}

json flags_json(const SurfaceFlags& f) {
  return json{{"projective", to_string(f.projective)},     {"moishezon", to_string(f.moishezon)},
              {"fujiki", to_string(f.fujiki)},             {"q_factorial", to_string(f.q_factorial)},
              {"rational_sings", to_string(f.rational_sings)}, {"kodaira_dim", to_string(f.kodaira_dim)}};
}

std::string flags_text(const SurfaceFlags& f) {
  std::ostringstream s;
  s << "projective=" << to_string(f.projective) << " moishezon=" << to_string(f.moishezon)
    << " fujiki=" << to_string(f.fujiki) << " q_factorial=" << to_string(f.q_factorial)
    << " rational_sings=" << to_string(f.rational_sings) << " kodaira_dim=" << to_string(f.kodaira_dim);
  return s.str();
}

json record_json(const SmoothModel& m, const PointRecord& r) {
  json members = json::array();
  for (std::size_t i : r.cluster.members) members.push_back(m.curve(i).label);
  return json{{"members", members},
              {"discrepancies", q_vec(r.discrepancies)},
              {"status", to_string(r.status)},
              {"gorenstein_hint", r.gorenstein_hint}};
}

json certificate_json(const SmoothModel& m, const ContractionCertificate& c) {
  return json{{"curve", m.curve(c.curve).label},
              {"self_int", q(c.self_int)},
              {"kdelta_deg", q(c.kdelta_deg)},
              {"new_point", record_json(m, c.new_point)},
              {"absorbed_clusters", c.absorbed_clusters},
              {"flags_before", flags_json(c.flags_before)},
              {"flags_after", flags_json(c.flags_after)}};
}

void print_certificate(std::ostream& out, const SmoothModel& m, const ContractionCertificate& c) {
  out << "contract " << m.curve(c.curve).label << ": C^2 = " << q(c.self_int) << ", (K+Delta).C = " << q(c.kdelta_deg)
      << " -> point {" << labels(m, c.new_point.cluster.members) << "} " << to_string(c.new_point.status)
      << " discrepancies (" << join([&] {
           std::vector<std::string> v;
           for (const auto& a : c.new_point.discrepancies) v.push_back(q(a));
           return v;
         }(), ", ")
      << ")" << (c.new_point.gorenstein_hint ? " gorenstein" : "");
  if (!c.absorbed_clusters.empty()) {
    std::vector<std::string> v;
    for (std::size_t a : c.absorbed_clusters) v.push_back(std::to_string(a));
    out << " absorbed clusters " << join(v, ",");
  }
  out << "\n  flags before: " << flags_text(c.flags_before) << "\n  flags after:  " << flags_text(c.flags_after)
      << "\n";
}

std::string class_text(const PicBasis& basis, const PicClass& cls) {
  std::vector<std::string> parts;
  const auto flat = cls.flat();
  const auto names = basis.names();
  for (std::size_t i = 0; i < flat.size(); ++i) {
    if (flat[i] != 0) parts.push_back(names[i] + ":" + to_string(flat[i]));
  }
  return parts.empty() ? "0" : "(" + join(parts, ", ") + ")";
}

json class_json(const PicBasis& basis, const PicClass& cls) {
  json o = json::object();
  const auto flat = cls.flat();
  const auto names = basis.names();
  for (std::size_t i = 0; i < flat.size(); ++i) o[names[i]] = to_string(flat[i]);
  return o;
}

struct Context {
  std::istream& in;
  std::ostream& out;
  bool machine = false;

  Preset load(const std::string& path) const {
    std::string text;
    if (path.empty() || path == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else {
      std::ifstream f(path);
      if (!f) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
      std::ostringstream buf;
      buf << f.rdbuf();
      text = buf.str();
    }
    return parse_document(text);
  }

  void emit(const json& j) const { out << j.dump(2) << "\n"; }
};

void cmd_classify(const Context& ctx, const Preset& p) {
  const SmoothModel& m = p.surface.model;
  NormalSurface s = with_point_records(p.surface, p.boundary);
  s.flags = infer_flags(s, p.boundary);
  const auto conflicts = check_boundary_compatibility(s, p.boundary);
  if (ctx.machine) {
    json points = json::array();
    for (const auto& r : s.point_records) points.push_back(record_json(m, r));
    json c = json::array();
    for (const auto& v : conflicts.violations) {
      c.push_back({{"cluster", v.cluster}, {"boundary_curve", m.curve(v.boundary_curve).label},
                   {"intrinsic_status", to_string(v.intrinsic_status)},
                   {"discrepancies_with_boundary", q_vec(v.discrepancies_with_boundary)}});
    }
    ctx.emit({{"points", points}, {"boundary_conflicts", c}, {"flags", flags_json(s.flags)}});
    return;
  }
  ctx.out << "cluster\tdiscrepancies\tstatus\tgorenstein_hint\n";
  for (const auto& r : s.point_records) {
    std::vector<std::string> a;
    for (const auto& x : r.discrepancies) a.push_back(q(x));
    ctx.out << "{" << labels(m, r.cluster.members) << "}\t(" << join(a, ", ") << ")\t" << to_string(r.status) << "\t"
            << (r.gorenstein_hint ? "true" : "false") << "\n";
  }
  for (const auto& v : conflicts.violations) {
    ctx.out << "boundary conflict: cluster " << v.cluster << " meets " << m.curve(v.boundary_curve).label
            << " (intrinsically " << to_string(v.intrinsic_status) << ")\n";
  }
  ctx.out << "flags: " << flags_text(s.flags) << "\n";
}

void cmd_pullback(const Context& ctx, const Preset& p, const std::string& divisor) {
  const SmoothModel& m = p.surface.model;
  const WeilDivisor d = parse_divisor(p.surface, divisor);
  const PullbackResult r = mumford_pullback(p.surface, d);
  if (ctx.machine) {
    ctx.emit({{"divisor", format_divisor(m, d)},
              {"strict_part", q_vec(r.strict_part)},
              {"exceptional_part", q_vec(r.exceptional_part)},
              {"total", format_vector(m, r.total())},
              {"curves", [&] {
                 json a = json::array();
                 for (const Curve& c : m.curves()) a.push_back(c.label);
                 return a;
               }()}});
    return;
  }
  ctx.out << "pullback of " << format_divisor(m, d) << "\n";
  ctx.out << "  strict:      " << format_vector(m, r.strict_part) << "\n";
  ctx.out << "  exceptional: " << format_vector(m, r.exceptional_part) << "\n";
  ctx.out << "  total:       " << format_vector(m, r.total()) << "\n";
}

void cmd_intersect(const Context& ctx, const Preset& p, const std::string& a, const std::string& b) {
  const WeilDivisor d1 = parse_divisor(p.surface, a);
  const WeilDivisor d2 = parse_divisor(p.surface, b);
  const Rational v = mumford_intersection(p.surface, d1, d2);
  if (ctx.machine) {
    ctx.emit({{"d1", format_divisor(p.surface.model, d1)}, {"d2", format_divisor(p.surface.model, d2)},
              {"intersection", q(v)}});
    return;
  }
  ctx.out << q(v) << "\n";
}

void cmd_contract(const Context& ctx, const Preset& p, const std::string& curve) {
  const SmoothModel& m = p.surface.model;
  const std::size_t c = m.index_of(curve);
  ContractionCertificate cert;
  const Preset next = contract_preset(p, c, &cert);
  const std::string doc = serialize_document(next);
  if (ctx.machine) {
    ctx.emit({{"certificate", certificate_json(m, cert)}, {"document", doc}});
    return;
  }
  print_certificate(ctx.out, m, cert);
  ctx.out << "\n" << doc;
}

void cmd_mmp(const Context& ctx, const Preset& p, const std::string& support) {
  const SmoothModel& m = p.surface.model;
  std::optional<std::set<std::size_t>> sup;
  if (!support.empty()) {
    sup.emplace();
    for (const auto& name : split_commas(support)) sup->insert(m.index_of(name));
  }
  const MMPTrace t = run_mmp(p.surface, p.boundary, sup);
  const NefReport final_report = nef_report(t.final_surface, t.final_boundary);
  if (ctx.machine) {
    json steps = json::array();
    for (const auto& c : t.steps) steps.push_back(certificate_json(m, c));
    json ledger = json::array();
    for (const auto& v : t.ledger) ledger.push_back(format_vector(m, v));
    json remaining = json::array();
    for (const auto& e : final_report.entries) {
      remaining.push_back({{"curve", m.curve(e.curve).label}, {"degree", q(e.degree)}, {"self_int", q(e.self_int)}});
    }
    ctx.emit({{"strategy", t.strategy},
              {"steps", steps},
              {"endpoint", to_string(t.endpoint)},
              {"ledger", ledger},
              {"final_curves", remaining}});
    return;
  }
  ctx.out << "strategy: " << t.strategy << "\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    ctx.out << "step " << (i + 1) << ": ";
    print_certificate(ctx.out, m, t.steps[i]);
    ctx.out << "  ledger class: " << format_vector(m, t.ledger[i]) << "\n";
  }
  ctx.out << "steps: " << t.steps.size() << "\n";
  ctx.out << "endpoint: " << to_string(t.endpoint) << "\n";
  for (const auto& e : final_report.entries) {
    ctx.out << "  " << m.curve(e.curve).label << ": (K+Delta).C = " << q(e.degree) << ", C^2 = " << q(e.self_int)
            << "\n";
  }
}

void cmd_picard(const Context& ctx, const Preset& p) {
  const SmoothModel& m = p.surface.model;
  const auto contracted = contracted_curves(p.surface);
  const PicardPresentation pic = picard_of_contraction(p.basis, p.table, contracted);
  const LedgerVerdict verdict = ledger_verdict(p.surface, p.basis, p.table, p.witnesses);
  if (ctx.machine) {
    json gens = json::array();
    for (const auto& g : pic.generators) {
      gens.push_back({{"coordinates", class_json(p.basis, g)},
                      {"numerical_class", format_vector(m, numerical_class(m, p.basis, g))}});
    }
    json v{{"q_factorial", to_string(verdict.q_factorial)},
           {"projective", to_string(verdict.projective)},
           {"nef_cone_zero", verdict.nef_cone_zero}};
    if (verdict.non_q_cartier_curve) v["non_q_cartier_curve"] = m.curve(*verdict.non_q_cartier_curve).label;
    ctx.emit({{"rank", pic.rank}, {"generators", gens}, {"verdict", v}});
    return;
  }
  ctx.out << "rank " << pic.rank << "\n";
  for (const auto& g : pic.generators) {
    ctx.out << "generator " << class_text(p.basis, g) << " ~ " << format_vector(m, numerical_class(m, p.basis, g))
            << "\n";
  }
  ctx.out << "q_factorial: " << to_string(verdict.q_factorial);
  if (verdict.non_q_cartier_curve) ctx.out << " (" << m.curve(*verdict.non_q_cartier_curve).label << " is not Q-Cartier)";
  ctx.out << "\nprojective: " << to_string(verdict.projective)
          << (verdict.nef_cone_zero ? " (no nonzero nef class in Pic)" : "") << "\n";
}

void cmd_nef(const Context& ctx, const Preset& p, const std::string& span_text) {
  const SmoothModel& m = p.surface.model;
  if (span_text.empty()) {
    const NefReport r = nef_report(p.surface, p.boundary);
    if (ctx.machine) {
      json entries = json::array();
      for (const auto& e : r.entries) {
        entries.push_back({{"curve", m.curve(e.curve).label}, {"degree", q(e.degree)}, {"self_int", q(e.self_int)}});
      }
      json j{{"entries", entries}, {"nef_on_list", r.nef_on_list()}};
      j["min_degree"] = r.min_degree ? json(q(*r.min_degree)) : json(nullptr);
      j["argmin"] = r.argmin ? json(m.curve(*r.argmin).label) : json(nullptr);
      ctx.emit(j);
      return;
    }
    for (const auto& e : r.entries) {
      ctx.out << m.curve(e.curve).label << ": (K+Delta).C = " << q(e.degree) << ", C^2 = " << q(e.self_int) << "\n";
    }
    ctx.out << "nef on listed curves: " << (r.nef_on_list() ? "true" : "false") << "\n";
    return;
  }
  std::vector<WeilDivisor> span;
  for (const auto& s : split_commas(span_text)) span.push_back(parse_divisor(p.surface, s));
  std::vector<WeilDivisor> tests = p.witnesses;
  for (std::size_t c : p.surface.non_exceptional()) tests.push_back(WeilDivisor::curve(c));
  const ConeDescription cone = nef_cone_in_span(p.surface, span, tests);
  if (ctx.machine) {
    json span_j = json::array();
    for (const auto& d : span) span_j.push_back(format_divisor(m, d));
    json lin = json::array();
    for (const auto& v : cone.lineality) lin.push_back(q_vec(v));
    json rays = json::array();
    for (const auto& r : cone.rays) {
      json a = json::array();
      for (const auto& x : r) a.push_back(to_string(x));
      rays.push_back(a);
    }
    ctx.emit({{"span", span_j}, {"is_zero", cone.is_zero}, {"lineality", lin}, {"rays", rays}});
    return;
  }
  ctx.out << "span: ";
  for (std::size_t i = 0; i < span.size(); ++i) ctx.out << (i ? ", " : "") << format_divisor(m, span[i]);
  ctx.out << "\nnef cone in span: " << (cone.is_zero ? "{0}" : "nonzero") << "\n";
  for (const auto& v : cone.lineality) {
    std::vector<std::string> a;
    for (const auto& x : v) a.push_back(q(x));
    ctx.out << "  lineality (" << join(a, ", ") << ")\n";
  }
  for (const auto& r : cone.rays) {
    std::vector<std::string> a;
    for (const auto& x : r) a.push_back(to_string(x));
    ctx.out << "  ray (" << join(a, ", ") << ")\n";
  }
}

void cmd_check_vanishing(const Context& ctx, const Preset& p, const std::string& l_degrees, const std::string& d_text,
                         int variant) {
  const SmoothModel& m = p.surface.model;
  std::map<std::size_t, Rational> degrees;
  for (const auto& item : split_commas(l_degrees)) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos) throw Error(ErrorKind::ParseError, "expected CURVE=DEGREE in '" + item + "'");
    std::string name = item.substr(0, eq);
    while (!name.empty() && name.back() == ' ') name.pop_back();
    degrees[m.index_of(name)] = parse_rational(item.substr(eq + 1));
  }
  const WeilDivisor d = parse_divisor(p.surface, d_text);
  std::optional<VanishingVariant> v;
  if (variant == 1) v = VanishingVariant::Strict;
  if (variant == 2) v = VanishingVariant::Weak;
  const VanishingVerdict r = check_vanishing_hypotheses(p.surface, p.boundary, degrees, d, v);
  if (ctx.machine) {
    json rows = json::array();
    for (const auto& row : r.rows) {
      rows.push_back({{"curve", m.curve(row.curve).label},
                      {"line_bundle_degree", q(row.line_bundle_degree)},
                      {"divisor_degree", q(row.divisor_degree)},
                      {"log_canonical_degree", q(row.log_canonical_degree)},
                      {"quantity", q(row.quantity)}});
    }
    json j{{"rows", rows}, {"variant1", r.variant1}, {"variant2", r.variant2}};
    j["max_boundary_coefficient"] = r.max_boundary_coefficient ? json(q(*r.max_boundary_coefficient)) : json(nullptr);
    j["requested_variant"] = v ? json(static_cast<int>(*v)) : json(nullptr);
    j["holds"] = r.holds;
    j["conclusion"] = r.conclusion;
    ctx.emit(j);
    return;
  }
  ctx.out << "curve\tL.C\tD.C\t(K+Delta).C\tL.C+(D-(K+Delta)).C\n";
  for (const auto& row : r.rows) {
    ctx.out << m.curve(row.curve).label << "\t" << q(row.line_bundle_degree) << "\t" << q(row.divisor_degree) << "\t"
            << q(row.log_canonical_degree) << "\t" << q(row.quantity) << "\n";
  }
  ctx.out << "max boundary coefficient: "
          << (r.max_boundary_coefficient ? q(*r.max_boundary_coefficient) : std::string("none")) << "\n";
  ctx.out << "variant (1): " << (r.variant1 ? "holds" : "fails") << "\n";
  ctx.out << "variant (2): " << (r.variant2 ? "holds" : "fails") << "\n";
  if (v) ctx.out << "requested variant (" << static_cast<int>(*v) << "): " << (r.holds ? "holds" : "fails") << "\n";
  ctx.out << "conclusion: " << r.conclusion << "\n";
}

void cmd_preset(const Context& ctx, const std::string& name, int rho) {
  const Preset p = preset_by_name(name, rho);
  ctx.out << serialize_document(p);
}


}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lattice computations for the minimal model program on normal surfaces", "lcsurf"};
  app.require_subcommand(1);
  bool machine = false;
  app.add_flag("--machine", machine, "structured JSON output");

  std::string doc, a, b, support, span;
  int rho = 3;
  int variant = 0;

  auto* classify = app.add_subcommand("classify", "per-cluster discrepancies and classification");
  classify->add_option("doc", doc, "document path or '-' for stdin");
  auto* pullback = app.add_subcommand("pullback", "Mumford pull-back of a divisor");
  pullback->add_option("doc", doc)->required();
  pullback->add_option("divisor", a)->required();
  auto* intersect = app.add_subcommand("intersect", "Mumford intersection number");
  intersect->add_option("doc", doc)->required();
  intersect->add_option("d1", a)->required();
  intersect->add_option("d2", b)->required();
  auto* contract_cmd = app.add_subcommand("contract", "contract one curve");
  contract_cmd->add_option("doc", doc)->required();
  contract_cmd->add_option("curve", a)->required();
  auto* mmp = app.add_subcommand("mmp", "run the minimal model program");
  mmp->add_option("doc", doc);
  mmp->add_option("--support", support, "comma-separated candidate curves");
  auto* picard = app.add_subcommand("picard", "Picard group of the surface from the ledger");
  picard->add_option("doc", doc);
  auto* nef = app.add_subcommand("nef", "nef report of K+Delta, or the nef cone in a span");
  nef->add_option("doc", doc);
  nef->add_option("--span", span, "comma-separated divisors");
  auto* preset = app.add_subcommand("preset", "emit a builder preset document");
  preset->add_option("name", a)->required()->check(CLI::IsMember(preset_names()));
  preset->add_option("--rho", rho, "Picard rank for ex12_5")->check(CLI::Range(2, 64));
  auto* vanishing = app.add_subcommand("check-vanishing", "vanishing-theorem hypotheses");
  vanishing->add_option("doc", doc)->required();
  vanishing->add_option("l_degrees", a, "CURVE=DEG,... over the f-exceptional curves")->required();
  vanishing->add_option("divisor", b)->required();
  vanishing->add_option("--variant", variant)->check(CLI::IsMember({1, 2}));

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << json{{"kind", "UsageError"}, {"line", 0}, {"message", e.what()}}.dump() << "\n";
    err << app.help();
    return 2;
  }

  Context ctx{in, out, machine};
  try {
    if (*preset) {
      cmd_preset(ctx, a, rho);
      return 0;
    }
    const Preset p = ctx.load(doc);
    if (*classify) cmd_classify(ctx, p);
    else if (*pullback) cmd_pullback(ctx, p, a);
    else if (*intersect) cmd_intersect(ctx, p, a, b);
    else if (*contract_cmd) cmd_contract(ctx, p, a);
    else if (*mmp) cmd_mmp(ctx, p, support);
    else if (*picard) cmd_picard(ctx, p);
    else if (*nef) cmd_nef(ctx, p, span);
    else if (*vanishing) cmd_check_vanishing(ctx, p, a, b, variant);
    return 0;
  } catch (const DocumentError& e) {
    err << "error: " << json{{"kind", to_string(e.kind())}, {"line", e.line()}, {"message", e.what()}}.dump() << "\n";
    err << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << json{{"kind", to_string(e.kind())}, {"line", 0}, {"message", e.what()}}.dump() << "\n";
    err << e.what() << "\n";
    return 1;
  }
}

}  // namespace lcsurf
