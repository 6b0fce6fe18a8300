#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcsurf/builders.hpp"
#include "lcsurf/document.hpp"
#include "lcsurf/error.hpp"
#include "lcsurf/mmp.hpp"
#include "lcsurf/singularities.hpp"
#include "lcsurf/vanishing.hpp"

namespace py = pybind11;
using namespace lcsurf;

namespace {

py::object fraction(const Rational& q) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(q));
}

py::list fractions(std::span<const Rational> v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

// Any Python number accepted by fractions.Fraction.
Rational rational(const py::handle& value) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  const py::object f = cls(value);
  Rational q(py::str(f.attr("numerator")).cast<std::string>() + "/" +
             py::str(f.attr("denominator")).cast<std::string>());
  q.canonicalize();
  return q;
}

py::dict flags_dict(const SurfaceFlags& f) {
  py::dict d;
  d["projective"] = to_string(f.projective);
  d["moishezon"] = to_string(f.moishezon);
  d["fujiki"] = to_string(f.fujiki);
  d["q_factorial"] = to_string(f.q_factorial);
  d["rational_sings"] = to_string(f.rational_sings);
  d["kodaira_dim"] = to_string(f.kodaira_dim);
  return d;
}

py::list labels(const SmoothModel& m, const std::vector<std::size_t>& idx) {
  py::list out;
  for (std::size_t i : idx) out.append(m.curve(i).label);
  return out;
}

py::dict record_dict(const SmoothModel& m, const PointRecord& r) {
  py::dict d;
  d["members"] = labels(m, r.cluster.members);
  d["discrepancies"] = fractions(r.discrepancies);
  d["status"] = to_string(r.status);
  d["gorenstein_hint"] = r.gorenstein_hint;
  return d;
}

py::dict certificate_dict(const SmoothModel& m, const ContractionCertificate& c) {
  py::dict d;
  d["curve"] = m.curve(c.curve).label;
  d["self_int"] = fraction(c.self_int);
  d["kdelta_deg"] = fraction(c.kdelta_deg);
  d["new_point"] = record_dict(m, c.new_point);
  d["absorbed_clusters"] = c.absorbed_clusters;
  d["flags_before"] = flags_dict(c.flags_before);
  d["flags_after"] = flags_dict(c.flags_after);
  return d;
}

py::dict vector_dict(const SmoothModel& m, std::span<const Rational> v) {
  py::dict d;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) d[py::str(m.curve(i).label)] = fraction(v[i]);
  return d;
}

class Surface {
 public:
  explicit Surface(Preset preset) : p_(std::move(preset)) {}

  static Surface from_document(const std::string& text) { return Surface(parse_document(text)); }
  static Surface preset(const std::string& name, int rho) { return Surface(preset_by_name(name, rho)); }

  std::string to_document() const { return serialize_document(p_); }
  const std::string& name() const { return p_.name; }
  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    for (const auto& c : model().curves()) out.push_back(c.label);
    return out;
  }
  py::list exceptional() const {
    py::list out;
    for (const auto& c : p_.surface.clusters) out.append(::labels(model(), c.members));
    return out;
  }
  py::list non_exceptional() const { return ::labels(model(), p_.surface.non_exceptional()); }
  py::list intersection_matrix() const {
    py::list rows;
    for (std::size_t i = 0; i < model().size(); ++i) {
      py::list row;
      for (std::size_t j = 0; j < model().size(); ++j) row.append(fraction(model().dot(i, j)));
      rows.append(row);
    }
    return rows;
  }
  py::dict flags() const { return flags_dict(p_.surface.flags); }
  py::dict expectations() const { return py::cast(p_.expectations); }

  py::dict classify() const {
    NormalSurface s = with_point_records(p_.surface, p_.boundary);
    s.flags = infer_flags(s, p_.boundary);
    py::list points;
    for (const auto& r : s.point_records) points.append(record_dict(model(), r));
    py::dict d;
    d["points"] = points;
    d["flags"] = flags_dict(s.flags);
    return d;
  }

  py::dict pullback(const py::object& divisor) const {
    return vector_dict(model(), mumford_pullback(p_.surface, weil(divisor)).total());
  }
  py::object intersect(const py::object& a, const py::object& b) const {
    return fraction(mumford_intersection(p_.surface, weil(a), weil(b)));
  }
  py::object canonical_degree(const py::object& d) const {
    return fraction(canonical_intersection(p_.surface, p_.boundary, weil(d)));
  }

  py::tuple contract(const std::string& curve) const {
    ContractionCertificate cert;
    Surface next(contract_preset(p_, model().index_of(curve), &cert));
    return py::make_tuple(certificate_dict(model(), cert), next);
  }

  py::dict mmp(const std::optional<std::vector<std::string>>& support) const {
    std::optional<std::set<std::size_t>> sup;
    if (support) {
      sup.emplace();
      for (const auto& l : *support) sup->insert(model().index_of(l));
    }
    const MMPTrace t = run_mmp(p_.surface, p_.boundary, sup);
    py::list steps, ledger;
    for (const auto& c : t.steps) steps.append(certificate_dict(model(), c));
    for (const auto& v : t.ledger) ledger.append(vector_dict(model(), v));
    py::dict d;
    d["strategy"] = t.strategy;
    d["steps"] = steps;
    d["contracted"] = [&] {
      py::list l;
      for (const auto& c : t.steps) l.append(model().curve(c.curve).label);
      return l;
    }();
    d["endpoint"] = to_string(t.endpoint);
    d["ledger"] = ledger;
    d["flags"] = flags_dict(t.final_surface.flags);
    return d;
  }

  py::dict nef_report() const {
    const NefReport r = lcsurf::nef_report(p_.surface, p_.boundary);
    py::list entries;
    for (const auto& e : r.entries) {
      py::dict x;
      x["curve"] = model().curve(e.curve).label;
      x["degree"] = fraction(e.degree);
      x["self_int"] = fraction(e.self_int);
      entries.append(x);
    }
    py::dict d;
    d["entries"] = entries;
    d["nef_on_list"] = r.nef_on_list();
    return d;
  }

  py::dict nef_cone(const std::vector<py::object>& span, const std::optional<std::vector<py::object>>& tests) const {
    std::vector<WeilDivisor> s, t;
    for (const auto& x : span) s.push_back(weil(x));
    if (tests) {
      for (const auto& x : *tests) t.push_back(weil(x));
    } else {
      t = p_.witnesses;
      for (std::size_t c : p_.surface.non_exceptional()) t.push_back(WeilDivisor::curve(c));
    }
    const ConeDescription cone = nef_cone_in_span(p_.surface, s, t);
    py::list lineality, rays;
    for (const auto& v : cone.lineality) lineality.append(fractions(v));
    for (const auto& r : cone.rays) {
      py::list row;
      for (const auto& x : r) row.append(py::int_(py::str(x.get_str())));
      rays.append(row);
    }
    py::dict d;
    d["lineality"] = lineality;
    d["rays"] = rays;
    d["is_zero"] = cone.is_zero;
    return d;
  }

  py::dict picard() const {
    const auto pic = picard_of_contraction(p_.basis, p_.table, contracted_curves(p_.surface));
    const LedgerVerdict v = ledger_verdict(p_.surface, p_.basis, p_.table, p_.witnesses);
    const auto names = p_.basis.names();
    py::list gens;
    for (const auto& g : pic.generators) {
      py::dict coords;
      const IntegerVector flat = g.flat();
      for (std::size_t i = 0; i < flat.size(); ++i) coords[py::str(names[i])] = py::int_(py::str(flat[i].get_str()));
      gens.append(coords);
    }
    py::dict d;
    d["rank"] = pic.rank;
    d["generators"] = gens;
    d["q_factorial"] = to_string(v.q_factorial);
    d["projective"] = to_string(v.projective);
    d["nef_cone_zero"] = v.nef_cone_zero;
    return d;
  }

  py::dict check_vanishing(const py::dict& l_degrees, const py::object& divisor, std::optional<int> variant) const {
    std::map<std::size_t, Rational> exc;
    for (const auto& [k, v] : l_degrees) exc[model().index_of(k.cast<std::string>())] = rational(v);
    std::optional<VanishingVariant> var;
    if (variant) {
      if (*variant != 1 && *variant != 2) throw py::value_error("variant must be 1 or 2");
      var = static_cast<VanishingVariant>(*variant);
    }
    const VanishingVerdict v = check_vanishing_hypotheses(p_.surface, p_.boundary, exc, weil(divisor), var);
    py::list rows;
    for (const auto& r : v.rows) {
      py::dict x;
      x["curve"] = model().curve(r.curve).label;
      x["line_bundle_degree"] = fraction(r.line_bundle_degree);
      x["divisor_degree"] = fraction(r.divisor_degree);
      x["log_canonical_degree"] = fraction(r.log_canonical_degree);
      x["quantity"] = fraction(r.quantity);
      rows.append(x);
    }
    py::dict d;
    d["rows"] = rows;
    d["variant1"] = v.variant1;
    d["variant2"] = v.variant2;
    d["holds"] = v.holds;
    d["conclusion"] = v.conclusion;
    return d;
  }

 private:
  const SmoothModel& model() const { return p_.surface.model; }

  // A divisor is either a combination string or a {label: number} mapping.
  WeilDivisor weil(const py::object& d) const {
    if (py::isinstance<py::str>(d)) return parse_divisor(p_.surface, d.cast<std::string>());
    std::map<std::size_t, Rational> coeffs;
    for (const auto& [k, v] : d.cast<py::dict>()) {
      const std::size_t c = model().index_of(k.cast<std::string>());
      if (p_.surface.is_exceptional(c))
        throw Error(ErrorKind::NotNonExceptional, "curve " + k.cast<std::string>() + " is exceptional");
      const Rational q = rational(v);
      if (q != 0) coeffs[c] += q;
    }
    return WeilDivisor(std::move(coeffs));
  }

  Preset p_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact lattice computations for the minimal model program on normal surfaces";

  static py::exception<Error> error(m, "LcsurfError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DocumentError& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("line") = e.line();
      PyErr_SetObject(error.ptr(), exc.ptr());
    } catch (const Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("kind") = std::string(to_string(e.kind()));
      exc.attr("line") = 0;
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def("preset_names", &preset_names);

  py::class_<Surface>(m, "Surface")
      .def_static("from_document", &Surface::from_document, py::arg("text"))
      .def_static("preset", &Surface::preset, py::arg("name"), py::arg("rho") = 3)
      .def("to_document", &Surface::to_document)
      .def_property_readonly("name", &Surface::name)
      .def_property_readonly("labels", &Surface::labels)
      .def_property_readonly("clusters", &Surface::exceptional)
      .def_property_readonly("non_exceptional", &Surface::non_exceptional)
      .def_property_readonly("intersection_matrix", &Surface::intersection_matrix)
      .def_property_readonly("flags", &Surface::flags)
      .def_property_readonly("expectations", &Surface::expectations)
      .def("classify", &Surface::classify)
      .def("pullback", &Surface::pullback, py::arg("divisor"))
      .def("intersect", &Surface::intersect, py::arg("d1"), py::arg("d2"))
      .def("canonical_degree", &Surface::canonical_degree, py::arg("divisor"))
      .def("contract", &Surface::contract, py::arg("curve"))
      .def("mmp", &Surface::mmp, py::arg("support") = py::none())
      .def("nef_report", &Surface::nef_report)
      .def("nef_cone", &Surface::nef_cone, py::arg("span"), py::arg("tests") = py::none())
      .def("picard", &Surface::picard)
      .def("check_vanishing", &Surface::check_vanishing, py::arg("l_degrees"), py::arg("divisor") = "0",
           py::arg("variant") = py::none())
      .def("__repr__", [](const Surface& s) { return "<lcsurf.Surface " + s.name() + ">"; });
}
