#include "lcsurf/document.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "lcsurf/error.hpp"
#include "lcsurf/singularities.hpp"

namespace lcsurf {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
}

Integer to_integer(const Rational& r, std::string_view what) {
  if (r.get_den() != 1) throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
  return r.get_num();
}

int to_int(std::string_view text, std::string_view what) {
  const Rational r = parse_rational(text);
  const Integer z = to_integer(r, what);
  if (!z.fits_sint_p()) throw Error(ErrorKind::ParseError, std::string(what) + " out of range");
  return static_cast<int>(z.get_si());
}

std::string format_combination(const std::vector<std::pair<std::string, Rational>>& terms) {
  std::string out;
  for (const auto& [name, coeff] : terms) {
    if (coeff == 0) continue;
    const Rational mag = abs(coeff);
    if (out.empty()) out += coeff < 0 ? "-" : "";
    else out += coeff < 0 ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += name;
  }
  return out.empty() ? "0" : out;
}

enum class Section { None, Preset, Curves, Matrix, Clusters, Boundary, Ledger, Restrictions, Witnesses, Flags,
                     Expectations };

std::optional<Section> parse_section(std::string_view name) {
  static const std::map<std::string_view, Section> table = {
      {"preset", Section::Preset},         {"curves", Section::Curves},
      {"matrix", Section::Matrix},         {"clusters", Section::Clusters},
      {"boundary", Section::Boundary},     {"ledger", Section::Ledger},
      {"restrictions", Section::Restrictions}, {"witnesses", Section::Witnesses},
      {"flags", Section::Flags},           {"expectations", Section::Expectations}};
  const auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

struct Line {
  std::size_t number;
  std::string text;
};

[[noreturn]] void fail(ErrorKind kind, std::size_t line, const std::string& message) {
  throw DocumentError(kind, line, "line " + std::to_string(line) + ": " + message);
}

// Re-raises engine errors from a single line with its position attached.
template <typename F>
auto at_line(std::size_t line, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const DocumentError&) {
    throw;
  } catch (const Error& e) {
    const ErrorKind kind = e.kind() == ErrorKind::ParseError ? ErrorKind::ParseError : ErrorKind::ValidationError;
    fail(kind, line, e.what());
  }
}

std::pair<std::string, std::string> key_value(const Line& line) {
  const std::size_t eq = line.text.find('=');
  if (eq == std::string::npos) fail(ErrorKind::ParseError, line.number, "expected 'key = value'");
  std::string key(trim(std::string_view(line.text).substr(0, eq)));
  std::string value(trim(std::string_view(line.text).substr(eq + 1)));
  if (key.empty()) fail(ErrorKind::ParseError, line.number, "empty key");
  return {key, value};
}

}  // namespace

bool is_valid_label(std::string_view label) {
  if (label.empty() || !is_label_start(label.front())) return false;
  return std::all_of(label.begin(), label.end(), is_label_char);
}

std::map<std::string, Rational> parse_combination(std::string_view text) {
  std::map<std::string, Rational> out;
  std::string_view s = trim(text);
  if (s.empty()) throw Error(ErrorKind::ParseError, "empty combination");
  std::size_t i = 0;
  bool first = true;
  bool saw_zero_literal = false;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  while (i < s.size()) {
    skip_ws();
    Rational sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      if (s[i] == '-') sign = -1;
      ++i;
      skip_ws();
    } else if (!first) {
      throw Error(ErrorKind::ParseError, "expected '+' or '-' in '" + std::string(s) + "'");
    }
    first = false;
    Rational coeff = 1;
    bool have_coeff = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      const std::size_t start = i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
      coeff = parse_rational(s.substr(start, i - start));
      have_coeff = true;
      skip_ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip_ws();
      } else {
        if (coeff != 0) throw Error(ErrorKind::ParseError, "bare constant in '" + std::string(s) + "'");
        saw_zero_literal = true;
        continue;
      }
    }
    if (i >= s.size() || !is_label_start(s[i])) {
      throw Error(ErrorKind::ParseError, "expected a name in '" + std::string(s) + "'");
    }
    const std::size_t start = i;
    while (i < s.size() && is_label_char(s[i])) ++i;
    (void)have_coeff;
    out[std::string(s.substr(start, i - start))] += sign * coeff;
    skip_ws();
  }
  (void)saw_zero_literal;
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

WeilDivisor parse_divisor(const NormalSurface& surface, std::string_view text) {
  std::map<std::size_t, Rational> coeffs;
  for (const auto& [name, c] : parse_combination(text)) {
    const std::size_t idx = surface.model.index_of(name);
    if (surface.is_exceptional(idx)) {
      throw Error(ErrorKind::NotNonExceptional, "curve " + name + " is exceptional");
    }
    coeffs[idx] += c;
  }
  return WeilDivisor(std::move(coeffs));
}

std::string format_divisor(const SmoothModel& model, const WeilDivisor& d) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (const auto& [i, c] : d.coefficients()) terms.emplace_back(model.curve(i).label, c);
  return format_combination(terms);
}

std::string format_vector(const SmoothModel& model, std::span<const Rational> v) {
  std::vector<std::pair<std::string, Rational>> terms;
  for (std::size_t i = 0; i < v.size(); ++i) terms.emplace_back(model.curve(i).label, v[i]);
  return format_combination(terms);
}

Preset parse_document(std::string_view text) {
  std::map<Section, std::vector<Line>> sections;
  std::map<Section, std::size_t> header_line;
  Section current = Section::None;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++number;
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    const std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail(ErrorKind::ParseError, number, "malformed section header");
      const auto section = parse_section(trim(line.substr(1, line.size() - 2)));
      if (!section) fail(ErrorKind::ParseError, number, "unknown section '" + std::string(line) + "'");
      if (header_line.contains(*section)) fail(ErrorKind::ParseError, number, "repeated section");
      header_line[*section] = number;
      current = *section;
      sections[current];
      continue;
    }
    if (current == Section::None) fail(ErrorKind::ParseError, number, "content before the first section");
    sections[current].push_back({number, std::string(line)});
  }
  if (!header_line.contains(Section::Curves)) fail(ErrorKind::ParseError, number, "missing [curves] section");
  if (!header_line.contains(Section::Matrix)) fail(ErrorKind::ParseError, number, "missing [matrix] section");

  Preset preset;
  for (const Line& l : sections[Section::Preset]) {
    auto [key, value] = key_value(l);
    if (key != "name") fail(ErrorKind::ParseError, l.number, "unknown preset key '" + key + "'");
    preset.name = value;
  }

  // [curves]: label p_a g_geom [base=NAME]
  std::vector<Curve> curves;
  std::map<std::string, std::size_t> label_line;
  for (const Line& l : sections[Section::Curves]) {
    const auto tok = split_ws(l.text);
    if (tok.size() < 3 || tok.size() > 4) {
      fail(ErrorKind::ParseError, l.number, "expected 'label p_a g_geom [base=NAME]'");
    }
    if (!is_valid_label(tok[0])) fail(ErrorKind::ParseError, l.number, "invalid label '" + tok[0] + "'");
    Curve c;
    c.label = tok[0];
    c.arithmetic_genus = at_line(l.number, [&] { return to_int(tok[1], "arithmetic genus"); });
    c.geometric_genus = at_line(l.number, [&] { return to_int(tok[2], "geometric genus"); });
    if (tok.size() == 4) {
      if (!tok[3].starts_with("base=") || tok[3].size() == 5) {
        fail(ErrorKind::ParseError, l.number, "expected 'base=NAME'");
      }
      c.base_link = tok[3].substr(5);
    }
    if (label_line.contains(c.label)) fail(ErrorKind::ValidationError, l.number, "duplicate label " + c.label);
    label_line[c.label] = l.number;
    curves.push_back(std::move(c));
  }
  const std::size_t n = curves.size();

  // [matrix]: one row per curve
  const auto& rows = sections[Section::Matrix];
  if (rows.size() != n) {
    const std::size_t at = rows.size() > n ? rows[n].number : header_line[Section::Matrix];
    fail(ErrorKind::ParseError, at, "expected " + std::to_string(n) + " matrix rows, got " +
                                        std::to_string(rows.size()));
  }
  SymMatrix q(n);
  std::vector<RationalVector> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto tok = split_ws(rows[i].text);
    if (tok.size() != n) {
      fail(ErrorKind::ParseError, rows[i].number,
           "matrix row has " + std::to_string(tok.size()) + " entries, expected " + std::to_string(n));
    }
    for (const auto& t : tok) values[i].push_back(at_line(rows[i].number, [&] { return parse_rational(t); }));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (values[i][j] != values[j][i]) {
        fail(ErrorKind::ValidationError, rows[std::max(i, j)].number,
             "matrix is not symmetric at (" + curves[i].label + ", " + curves[j].label + ")");
      }
    }
    for (std::size_t j = i; j < n; ++j) q.set(i, j, values[i][j]);
  }
  NormalSurface& surface = preset.surface;
  surface.model = SmoothModel(std::move(curves), std::move(q));
  {
    const ValidationReport report = validate(surface.model);
    if (!report.ok()) {
      const Violation& v = report.violations.front();
      const std::size_t at = v.indices.empty() ? header_line[Section::Curves]
                                               : rows[std::min(v.indices.front(), n - 1)].number;
      fail(ErrorKind::ValidationError, at, v.message);
    }
  }
  const SmoothModel& model = surface.model;
  auto curve_at = [&](std::size_t line, std::string_view name) {
    return at_line(line, [&] { return model.index_of(name); });
  };

  // [clusters]: member labels
  std::vector<std::size_t> cluster_lines;
  for (const Line& l : sections[Section::Clusters]) {
    std::vector<std::size_t> members;
    for (const auto& t : split_ws(l.text)) members.push_back(curve_at(l.number, t));
    std::set<std::size_t> unique(members.begin(), members.end());
    if (unique.size() != members.size()) fail(ErrorKind::ValidationError, l.number, "repeated cluster member");
    surface.clusters.emplace_back(std::move(members));
    cluster_lines.push_back(l.number);
  }
  {
    const ValidationReport report = validate(surface);
    if (!report.ok()) {
      const Violation& v = report.violations.front();
      std::size_t at = header_line.contains(Section::Clusters) ? header_line[Section::Clusters] : 0;
      std::string message = v.message;
      if (!v.indices.empty()) {
        switch (v.kind) {
          case ViolationKind::EmptyCluster:
          case ViolationKind::DisconnectedCluster:
          case ViolationKind::NotNegativeDefinite:
          case ViolationKind::OverlappingClusters:
          case ViolationKind::ClustersMeet:
            if (v.indices.front() < cluster_lines.size()) {
              at = cluster_lines[v.indices.front()];
              std::string names;
              for (std::size_t m : surface.clusters[v.indices.front()].members) {
                names += (names.empty() ? "" : " ") + model.curve(m).label;
              }
              message = "cluster {" + names + "}: " + message;
            }
            break;
          default: break;
        }
      }
      fail(ErrorKind::ValidationError, at, message);
    }
  }

  // [boundary]: label coefficient
  std::map<std::size_t, Rational> bcoeffs;
  for (const Line& l : sections[Section::Boundary]) {
    const auto tok = split_ws(l.text);
    if (tok.size() != 2) fail(ErrorKind::ParseError, l.number, "expected 'label coefficient'");
    const std::size_t idx = curve_at(l.number, tok[0]);
    if (bcoeffs.contains(idx)) fail(ErrorKind::ValidationError, l.number, "repeated boundary curve");
    bcoeffs[idx] = at_line(l.number, [&] { return parse_rational(tok[1]); });
    if (bcoeffs[idx] < 0 || bcoeffs[idx] > 1) {
      fail(ErrorKind::ValidationError, l.number, "boundary coefficient outside [0, 1]");
    }
    if (surface.is_exceptional(idx)) {
      fail(ErrorKind::ValidationError, l.number, "boundary curve " + tok[0] + " is exceptional");
    }
  }
  preset.boundary = Boundary(std::move(bcoeffs));

  // [ledger]: gen NAME DEGREE [free] | fiber COMBINATION | curvegen NAME = COMBINATION
  std::vector<LedgerGenerator> gens;
  auto integer_class = [&](const Line& l, std::string_view text) {
    std::map<std::size_t, Integer> cls;
    for (const auto& [name, c] : at_line(l.number, [&] { return parse_combination(text); })) {
      cls[curve_at(l.number, name)] += at_line(l.number, [&] { return to_integer(c, "class coefficient"); });
    }
    std::erase_if(cls, [](const auto& kv) { return kv.second == 0; });
    return cls;
  };
  std::set<std::string> basis_names;
  for (const Line& l : sections[Section::Ledger]) {
    const auto tok = split_ws(l.text);
    if (tok.empty()) continue;
    if (tok[0] == "gen") {
      if (tok.size() < 3 || tok.size() > 4 || (tok.size() == 4 && tok[3] != "free")) {
        fail(ErrorKind::ParseError, l.number, "expected 'gen NAME DEGREE [free]'");
      }
      if (!is_valid_label(tok[1])) fail(ErrorKind::ParseError, l.number, "invalid generator name");
      if (!basis_names.insert(tok[1]).second) fail(ErrorKind::ValidationError, l.number, "duplicate generator");
      gens.push_back({tok[1], at_line(l.number, [&] { return to_int(tok[2], "degree"); }), tok.size() == 4});
    } else if (tok[0] == "fiber") {
      const std::string rest(trim(std::string_view(l.text).substr(5)));
      preset.basis.fiber = integer_class(l, rest);
    } else if (tok[0] == "curvegen") {
      const std::size_t eq = l.text.find('=');
      if (tok.size() < 4 || tok[2] != "=" || eq == std::string::npos) {
        fail(ErrorKind::ParseError, l.number, "expected 'curvegen NAME = COMBINATION'");
      }
      if (!is_valid_label(tok[1])) fail(ErrorKind::ParseError, l.number, "invalid generator name");
      if (!basis_names.insert(tok[1]).second) fail(ErrorKind::ValidationError, l.number, "duplicate generator");
      preset.basis.curve_generators.push_back({tok[1], integer_class(l, std::string_view(l.text).substr(eq + 1))});
    } else {
      fail(ErrorKind::ParseError, l.number, "unknown ledger entry '" + tok[0] + "'");
    }
  }
  preset.basis.ledger = PicLedger(std::move(gens));
  const PicBasis& basis = preset.basis;
  const std::vector<std::string> names = basis.names();

  // [restrictions]: LABEL ledger|degree: GEN -> IMAGE; ...
  for (const Line& l : sections[Section::Restrictions]) {
    const std::size_t colon = l.text.find(':');
    if (colon == std::string::npos) fail(ErrorKind::ParseError, l.number, "expected 'curve kind: ...'");
    const auto head = split_ws(std::string_view(l.text).substr(0, colon));
    if (head.size() != 2 || (head[1] != "ledger" && head[1] != "degree")) {
      fail(ErrorKind::ParseError, l.number, "expected 'curve ledger:' or 'curve degree:'");
    }
    Restriction r;
    r.curve = curve_at(l.number, head[0]);
    r.kind = head[1] == "ledger" ? RestrictionKind::Ledger : RestrictionKind::Degree;
    r.images.assign(names.size(), IntegerVector());
    std::vector<bool> seen(names.size(), false);
    for (std::string_view item : split_on(std::string_view(l.text).substr(colon + 1), ';')) {
      if (item.empty()) continue;
      const std::size_t arrow = item.find("->");
      if (arrow == std::string_view::npos) fail(ErrorKind::ParseError, l.number, "expected 'GEN -> IMAGE'");
      const std::string gen(trim(item.substr(0, arrow)));
      const std::string_view image = trim(item.substr(arrow + 2));
      const auto g = basis.find(gen);
      if (!g) fail(ErrorKind::ValidationError, l.number, "unknown generator '" + gen + "'");
      if (seen[*g]) fail(ErrorKind::ValidationError, l.number, "generator '" + gen + "' listed twice");
      seen[*g] = true;
      if (r.kind == RestrictionKind::Degree) {
        r.images[*g] = {at_line(l.number, [&] { return to_integer(parse_rational(image), "degree"); })};
      } else {
        IntegerVector v(basis.ledger.size());
        for (const auto& [name, c] : at_line(l.number, [&] { return parse_combination(image); })) {
          const std::size_t k = at_line(l.number, [&] { return basis.ledger.index_of(name); });
          v[k] += at_line(l.number, [&] { return to_integer(c, "ledger coefficient"); });
        }
        r.images[*g] = std::move(v);
      }
    }
    for (std::size_t g = 0; g < names.size(); ++g) {
      if (!seen[g]) fail(ErrorKind::ValidationError, l.number, "generator '" + names[g] + "' has no image");
    }
    if (preset.table.find(r.curve)) fail(ErrorKind::ValidationError, l.number, "repeated restriction entry");
    preset.table.entries.push_back(std::move(r));
  }
  if (!preset.table.entries.empty()) {
    const std::size_t at = header_line[Section::Restrictions];
    at_line(at, [&] {
      validate_table(model, basis, preset.table);
      return 0;
    });
  }

  for (const Line& l : sections[Section::Witnesses]) {
    preset.witnesses.push_back(at_line(l.number, [&] { return parse_divisor(surface, l.text); }));
  }

  for (const Line& l : sections[Section::Flags]) {
    auto [key, value] = key_value(l);
    if (key == "kodaira_dim") {
      const auto k = parse_kodaira_dim(value);
      if (!k) fail(ErrorKind::ParseError, l.number, "invalid kodaira_dim '" + value + "'");
      surface.flags.kodaira_dim = *k;
      continue;
    }
    const auto t = parse_tri(value);
    if (!t) fail(ErrorKind::ParseError, l.number, "invalid flag value '" + value + "'");
    if (key == "projective") surface.flags.projective = *t;
    else if (key == "moishezon") surface.flags.moishezon = *t;
    else if (key == "fujiki") surface.flags.fujiki = *t;
    else if (key == "q_factorial") surface.flags.q_factorial = *t;
    else if (key == "rational_sings") surface.flags.rational_sings = *t;
    else fail(ErrorKind::ParseError, l.number, "unknown flag '" + key + "'");
  }

  for (const Line& l : sections[Section::Expectations]) {
    auto [key, value] = key_value(l);
    preset.expectations[key] = value;
  }

  surface = at_line(header_line.contains(Section::Clusters) ? header_line[Section::Clusters] : 0,
                    [&] { return with_point_records(surface, preset.boundary); });
  return preset;
}

std::string serialize_document(const Preset& preset) {
  const NormalSurface& s = preset.surface;
  const SmoothModel& m = s.model;
  std::ostringstream out;
  if (!preset.name.empty()) out << "[preset]\nname = " << preset.name << "\n\n";

  out << "[curves]\n# label p_a g_geom [base=NAME]\n";
  for (const Curve& c : m.curves()) {
    out << c.label << ' ' << c.arithmetic_genus << ' ' << c.geometric_genus;
    if (c.base_link) out << " base=" << *c.base_link;
    out << '\n';
  }
  out << "\n[matrix]\n";
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) out << (j ? " " : "") << to_string(m.dot(i, j));
    out << '\n';
  }
  if (!s.clusters.empty()) {
    out << "\n[clusters]\n";
    for (const Cluster& c : s.clusters) {
      for (std::size_t k = 0; k < c.members.size(); ++k) out << (k ? " " : "") << m.curve(c.members[k]).label;
      out << '\n';
    }
  }
  if (!preset.boundary.empty()) {
    out << "\n[boundary]\n";
    for (const auto& [i, c] : preset.boundary.coefficients()) out << m.curve(i).label << ' ' << to_string(c) << '\n';
  }
  const PicBasis& b = preset.basis;
  if (b.size() > 0 || !b.fiber.empty()) {
    out << "\n[ledger]\n";
    for (const LedgerGenerator& g : b.ledger.generators()) {
      out << "gen " << g.name << ' ' << g.degree << (g.free_marker ? " free" : "") << '\n';
    }
    auto int_class = [&](const std::map<std::size_t, Integer>& cls) {
      std::vector<std::pair<std::string, Rational>> terms;
      for (const auto& [i, c] : cls) terms.emplace_back(m.curve(i).label, Rational(c));
      return format_combination(terms);
    };
    if (!b.fiber.empty()) out << "fiber " << int_class(b.fiber) << '\n';
    for (const CurveGenerator& g : b.curve_generators) out << "curvegen " << g.name << " = " << int_class(g.numerical_class) << '\n';
  }
  if (!preset.table.entries.empty()) {
    out << "\n[restrictions]\n";
    const std::vector<std::string> names = b.names();
    for (const Restriction& r : preset.table.entries) {
      out << m.curve(r.curve).label << (r.kind == RestrictionKind::Ledger ? " ledger:" : " degree:");
      for (std::size_t g = 0; g < r.images.size(); ++g) {
        out << (g ? "; " : " ") << names[g] << " -> ";
        if (r.kind == RestrictionKind::Degree) {
          out << to_string(r.images[g].at(0));
        } else {
          std::vector<std::pair<std::string, Rational>> terms;
          for (std::size_t k = 0; k < r.images[g].size(); ++k) {
            terms.emplace_back(b.ledger.generators()[k].name, Rational(r.images[g][k]));
          }
          out << format_combination(terms);
        }
      }
      out << '\n';
    }
  }
  if (!preset.witnesses.empty()) {
    out << "\n[witnesses]\n";
    for (const WeilDivisor& w : preset.witnesses) out << format_divisor(m, w) << '\n';
  }
  out << "\n[flags]\n";
  out << "projective = " << to_string(s.flags.projective) << '\n';
  out << "moishezon = " << to_string(s.flags.moishezon) << '\n';
  out << "fujiki = " << to_string(s.flags.fujiki) << '\n';
  out << "q_factorial = " << to_string(s.flags.q_factorial) << '\n';
  out << "rational_sings = " << to_string(s.flags.rational_sings) << '\n';
  out << "kodaira_dim = " << to_string(s.flags.kodaira_dim) << '\n';
  if (!preset.expectations.empty()) {
    out << "\n[expectations]\n";
    for (const auto& [k, v] : preset.expectations) out << k << " = " << v << '\n';
  }
  return out.str();
}

}  // namespace lcsurf
