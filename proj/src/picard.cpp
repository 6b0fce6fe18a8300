#include "lcsurf/picard.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "lcsurf/error.hpp"

namespace lcsurf {

PicLedger::PicLedger(std::vector<LedgerGenerator> generators) : gens_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : gens_) {
    if (!seen.insert(g.name).second) {
      throw Error(ErrorKind::ValidationError, "duplicate ledger generator " + g.name);
    }
  }
}

std::optional<std::size_t> PicLedger::find(std::string_view name) const {
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (gens_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t PicLedger::index_of(std::string_view name) const {
  if (auto i = find(name)) return *i;
  throw Error(ErrorKind::UnknownName, "unknown ledger generator '" + std::string(name) + "'");
}

Integer PicLedger::degree(std::span<const Integer> element) const {
  if (element.size() != gens_.size()) throw Error(ErrorKind::DimensionMismatch, "ledger element has wrong length");
  Integer d = 0;
  for (std::size_t i = 0; i < gens_.size(); ++i) d += element[i] * gens_[i].degree;
  return d;
}

std::vector<std::string> PicBasis::names() const {
  std::vector<std::string> out;
  for (const auto& g : ledger.generators()) out.push_back(g.name);
  for (const auto& g : curve_generators) out.push_back(g.name);
  return out;
}

std::optional<std::size_t> PicBasis::find(std::string_view name) const {
  const auto all = names();
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] == name) return i;
  }
  return std::nullopt;
}

PicClass PicClass::zero(const PicBasis& basis) {
  return {IntegerVector(basis.ledger.size()), IntegerVector(basis.curve_generators.size())};
}

IntegerVector PicClass::flat() const {
  IntegerVector v = base_part;
  v.insert(v.end(), curve_part.begin(), curve_part.end());
  return v;
}

PicClass PicClass::from_flat(const PicBasis& basis, std::span<const Integer> flat) {
  if (flat.size() != basis.size()) throw Error(ErrorKind::DimensionMismatch, "class has wrong length");
  PicClass c;
  c.base_part.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(basis.ledger.size()));
  c.curve_part.assign(flat.begin() + static_cast<std::ptrdiff_t>(basis.ledger.size()), flat.end());
  return c;
}

namespace {

IntegerVector add(const IntegerVector& a, const IntegerVector& b, const Integer& scale = 1) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "class shapes differ");
  IntegerVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + scale * b[i];
  return out;
}

}  // namespace

PicClass PicClass::operator+(const PicClass& other) const {
  return {add(base_part, other.base_part), add(curve_part, other.curve_part)};
}

PicClass PicClass::operator-(const PicClass& other) const {
  return {add(base_part, other.base_part, -1), add(curve_part, other.curve_part, -1)};
}

PicClass PicClass::operator*(const Integer& scale) const {
  PicClass out = *this;
  for (auto& v : out.base_part) v *= scale;
  for (auto& v : out.curve_part) v *= scale;
  return out;
}

const Restriction* RestrictionTable::find(std::size_t curve) const {
  for (const auto& e : entries) {
    if (e.curve == curve) return &e;
  }
  return nullptr;
}

namespace {

RationalVector generator_class(const SmoothModel& model, const PicBasis& basis, std::size_t column) {
  RationalVector v(model.size());
  const std::size_t nb = basis.ledger.size();
  if (column < nb) {
    const long deg = basis.ledger.generators()[column].degree;
    if (deg == 0) return v;
    if (basis.fiber.empty()) {
      throw Error(ErrorKind::ValidationError, "no fiber class given for ledger generator " +
                                                  basis.ledger.generators()[column].name);
    }
    for (const auto& [curve, c] : basis.fiber) v.at(curve) = Rational(c * deg);
    return v;
  }
  for (const auto& [curve, c] : basis.curve_generators.at(column - nb).numerical_class) v.at(curve) = Rational(c);
  return v;
}

}  // namespace

void validate_table(const SmoothModel& model, const PicBasis& basis, const RestrictionTable& table) {
  std::set<std::size_t> seen;
  const bool numerics = !basis.fiber.empty() ||
                        std::all_of(basis.ledger.generators().begin(), basis.ledger.generators().end(),
                                    [](const LedgerGenerator& g) { return g.degree == 0; });
  for (const auto& e : table.entries) {
    if (e.curve >= model.size()) throw Error(ErrorKind::InvalidRestriction, "restriction on a missing curve");
    const std::string& label = model.curve(e.curve).label;
    if (!seen.insert(e.curve).second) {
      throw Error(ErrorKind::InvalidRestriction, "two restriction entries for curve " + label);
    }
    if (e.images.size() != basis.size()) {
      throw Error(ErrorKind::InvalidRestriction, "restriction to " + label + " does not cover every generator");
    }
    const std::size_t width = e.kind == RestrictionKind::Ledger ? basis.ledger.size() : 1;
    for (const auto& img : e.images) {
      if (img.size() != width) throw Error(ErrorKind::InvalidRestriction, "restriction image to " + label + " has wrong length");
    }
    if (e.kind == RestrictionKind::Ledger && !model.curve(e.curve).base_link) {
      throw Error(ErrorKind::InvalidRestriction, "ledger-valued restriction on " + label + ", which has no base link");
    }
    if (!numerics) continue;
    for (std::size_t g = 0; g < basis.size(); ++g) {
      const Integer deg = e.kind == RestrictionKind::Ledger ? basis.ledger.degree(e.images[g]) : e.images[g][0];
      RationalVector unit(model.size());
      unit[e.curve] = 1;
      const Rational expected = model.intersections().bilinear(generator_class(model, basis, g), unit);
      if (Rational(deg) != expected) {
        throw Error(ErrorKind::InvalidRestriction, "restriction of " + basis.names()[g] + " to " + label +
                                                       " has degree " + to_string(deg) + " but the intersection number is " +
                                                       to_string(expected));
      }
    }
  }
}

IntegerVector restrict_class(const Restriction& entry, const PicClass& cls) {
  const IntegerVector x = cls.flat();
  if (x.size() != entry.images.size()) throw Error(ErrorKind::DimensionMismatch, "class does not match the table");
  const std::size_t width = entry.images.empty() ? 0 : entry.images.front().size();
  IntegerVector out(width);
  for (std::size_t g = 0; g < x.size(); ++g) {
    if (x[g] == 0) continue;
    for (std::size_t r = 0; r < width; ++r) out[r] += x[g] * entry.images[g][r];
  }
  return out;
}

bool descends_through(const PicClass& cls, const RestrictionTable& table,
                      std::span<const std::size_t> contracted_curves) {
  bool ok = true;
  for (std::size_t curve : contracted_curves) {
    const Restriction* entry = table.find(curve);
    if (!entry) throw Error(ErrorKind::MissingRestriction, "no restriction for contracted curve " + std::to_string(curve));
    const IntegerVector r = restrict_class(*entry, cls);
    ok = ok && std::all_of(r.begin(), r.end(), [](const Integer& v) { return v == 0; });
  }
  return ok;
}

std::vector<std::size_t> contracted_curves(const NormalSurface& surface) {
  std::vector<std::size_t> out;
  for (const auto& c : surface.clusters) out.insert(out.end(), c.members.begin(), c.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntegerVector> descent_conditions(const PicBasis& basis, const RestrictionTable& table,
                                              std::span<const std::size_t> contracted_curves) {
  std::vector<IntegerVector> rows;
  for (std::size_t curve : contracted_curves) {
    const Restriction* entry = table.find(curve);
    if (!entry) throw Error(ErrorKind::MissingRestriction, "no restriction for contracted curve " + std::to_string(curve));
    if (entry->images.size() != basis.size()) {
      throw Error(ErrorKind::InvalidRestriction, "restriction does not cover every generator");
    }
    const std::size_t width = entry->images.empty() ? 0 : entry->images.front().size();
    for (std::size_t r = 0; r < width; ++r) {
      IntegerVector row(basis.size());
      for (std::size_t g = 0; g < basis.size(); ++g) row[g] = entry->images[g][r];
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

namespace {

void hermite_rows(std::vector<IntegerVector>& rows, std::size_t columns) {
  std::size_t top = 0;
  for (std::size_t col = 0; col < columns && top < rows.size(); ++col) {
    // Euclid on column `col` across rows top.. until a single nonzero remains.
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] != 0 && (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col]))) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t c = 0; c < columns; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[top][col] == 0) continue;
    if (rows[top][col] < 0) {
      for (auto& v : rows[top]) v = -v;
    }
    for (std::size_t r = 0; r < top; ++r) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t c = 0; c < columns; ++c) rows[r][c] -= q * rows[top][c];
    }
    ++top;
  }
  rows.resize(top);
}

}  // namespace

std::vector<IntegerVector> integer_kernel(const std::vector<IntegerVector>& rows, std::size_t columns) {
  // Unimodular column operations bring A to column echelon form A·U; the
  // columns of U beyond the last pivot span the integer kernel.
  std::vector<IntegerVector> a = rows;
  std::vector<IntegerVector> u(columns, IntegerVector(columns));
  for (std::size_t i = 0; i < columns; ++i) u[i][i] = 1;
  auto column_op = [&](std::size_t k, std::size_t j, const Integer& s, const Integer& t, const Integer& p,
                       const Integer& q) {
    // (col_k, col_j) <- (s col_k + t col_j, p col_k + q col_j)
    for (auto* m : {&a, &u}) {
      for (auto& row : *m) {
        const Integer ck = row[k];
        const Integer cj = row[j];
        row[k] = s * ck + t * cj;
        row[j] = p * ck + q * cj;
      }
    }
  };
  std::size_t pivot = 0;
  for (std::size_t i = 0; i < a.size() && pivot < columns; ++i) {
    if (a[i].size() != columns) throw Error(ErrorKind::DimensionMismatch, "condition row has wrong length");
    for (std::size_t j = pivot + 1; j < columns; ++j) {
      if (a[i][j] == 0) continue;
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a[i][pivot].get_mpz_t(), a[i][j].get_mpz_t());
      const Integer x = a[i][pivot] / g;
      const Integer y = a[i][j] / g;
      column_op(pivot, j, s, t, -y, x);
    }
    if (a[i][pivot] != 0) ++pivot;
  }
  std::vector<IntegerVector> kernel;
  for (std::size_t j = pivot; j < columns; ++j) {
    IntegerVector v(columns);
    for (std::size_t r = 0; r < columns; ++r) v[r] = u[r][j];
    kernel.push_back(std::move(v));
  }
  hermite_rows(kernel, columns);
  return kernel;
}

PicardPresentation picard_of_contraction(const PicBasis& basis, const RestrictionTable& table,
                                         std::span<const std::size_t> contracted_curves) {
  const auto rows = descent_conditions(basis, table, contracted_curves);
  PicardPresentation out;
  for (const auto& v : integer_kernel(rows, basis.size())) out.generators.push_back(PicClass::from_flat(basis, v));
  out.rank = out.generators.size();
  return out;
}

RationalVector numerical_class(const SmoothModel& model, const PicBasis& basis, const PicClass& cls) {
  const IntegerVector x = cls.flat();
  RationalVector v(model.size());
  for (std::size_t g = 0; g < x.size(); ++g) {
    if (x[g] == 0) continue;
    const RationalVector gc = generator_class(model, basis, g);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += Rational(x[g]) * gc[i];
  }
  return v;
}

WeilDivisor class_divisor(const NormalSurface& surface, const PicBasis& basis, const PicClass& cls) {
  const RationalVector v = numerical_class(surface.model, basis, cls);
  std::map<std::size_t, Rational> coeffs;
  for (std::size_t i : surface.non_exceptional()) coeffs[i] = v[i];
  return WeilDivisor(std::move(coeffs));
}

LedgerVerdict ledger_verdict(const NormalSurface& surface, const PicBasis& basis, const RestrictionTable& table,
                             const std::vector<WeilDivisor>& witnesses) {
  LedgerVerdict verdict;
  const auto contracted = contracted_curves(surface);
  const PicardPresentation pic = picard_of_contraction(basis, table, contracted);
  verdict.picard_rank = pic.rank;

  std::vector<WeilDivisor> span;
  for (const auto& g : pic.generators) span.push_back(class_divisor(surface, basis, g));
  std::vector<WeilDivisor> tests = witnesses;
  for (std::size_t c : surface.non_exceptional()) tests.push_back(WeilDivisor::curve(c));
  verdict.nef_cone_zero = nef_cone_in_span(surface, span, tests).is_zero;
  if (verdict.nef_cone_zero) verdict.projective = Tri::False;

  const SmoothModel& model = surface.model;
  const std::size_t n = model.size();
  // Pairings of the generators against every listed curve.
  DenseMatrix paired_span(n, pic.rank);
  for (std::size_t k = 0; k < pic.rank; ++k) {
    const RationalVector paired = model.intersections().multiply(numerical_class(model, basis, pic.generators[k]));
    for (std::size_t i = 0; i < n; ++i) paired_span(i, k) = paired[i];
  }
  const std::size_t base_rank = rank(paired_span);
  for (std::size_t c : surface.non_exceptional()) {
    RationalVector strict(n);
    strict[c] = 1;
    const RationalVector paired = model.intersections().multiply(mumford_pullback_vector(surface, strict));
    DenseMatrix augmented(n, pic.rank + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < pic.rank; ++k) augmented(i, k) = paired_span(i, k);
      augmented(i, pic.rank) = paired[i];
    }
    if (rank(augmented) > base_rank) {
      verdict.q_factorial = Tri::False;
      verdict.non_q_cartier_curve = c;
      break;
    }
  }
  return verdict;
}

// --- cones -----------------------------------------------------------------

namespace {

IntegerVector primitive(const RationalVector& v) {
  Integer lcm = 1;
  for (const auto& x : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector out(v.size());
  Integer g = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Rational scaled = v[i] * Rational(lcm);
    out[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& x : out) x /= g;
  }
  return out;
}

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

ConeDescription cone_from_pairings(const std::vector<RationalVector>& pairings, std::size_t span_size) {
  ConeDescription cone;
  const std::size_t k = span_size;
  const std::size_t m = pairings.size();
  DenseMatrix a(m, k);
  for (std::size_t j = 0; j < m; ++j) {
    if (pairings[j].size() != k) throw Error(ErrorKind::DimensionMismatch, "pairing row has wrong length");
    for (std::size_t i = 0; i < k; ++i) a(j, i) = pairings[j][i];
  }
  cone.lineality = nullspace(a);
  const std::size_t d = cone.lineality.size();
  if (d >= k) {
    cone.is_zero = k == 0;
    return cone;
  }
  // Extreme rays of {Ab >= 0, b ⊥ lineality}: each is cut out by k-d-1
  // independent tight inequalities together with the lineality equations.
  std::set<IntegerVector> rays;
  for_each_subset(m, k - d - 1, [&](const std::vector<std::size_t>& tight) {
    DenseMatrix system(tight.size() + d, k);
    for (std::size_t r = 0; r < tight.size(); ++r)
      for (std::size_t i = 0; i < k; ++i) system(r, i) = a(tight[r], i);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t i = 0; i < k; ++i) system(tight.size() + r, i) = cone.lineality[r][i];
    const auto null = nullspace(system);
    if (null.size() != 1) return;
    for (int sign : {1, -1}) {
      RationalVector dir = null.front();
      for (auto& x : dir) x *= sign;
      bool feasible = true;
      for (std::size_t j = 0; j < m && feasible; ++j) {
        Rational value = 0;
        for (std::size_t i = 0; i < k; ++i) value += a(j, i) * dir[i];
        feasible = value >= 0;
      }
      if (feasible) rays.insert(primitive(dir));
    }
  });
  cone.rays.assign(rays.begin(), rays.end());
  cone.is_zero = d == 0 && cone.rays.empty();
  return cone;
}

ConeDescription nef_cone_in_span(const NormalSurface& surface, const std::vector<WeilDivisor>& span,
                                 const std::vector<WeilDivisor>& test_curves) {
  std::vector<RationalVector> pairings;
  std::vector<RationalVector> span_pullbacks;
  for (const auto& s : span) span_pullbacks.push_back(mumford_pullback(surface, s).total());
  for (const auto& t : test_curves) {
    const RationalVector tp = mumford_pullback(surface, t).total();
    RationalVector row;
    for (const auto& sp : span_pullbacks) row.push_back(surface.model.intersections().bilinear(sp, tp));
    pairings.push_back(std::move(row));
  }
  return cone_from_pairings(pairings, span.size());
}

PositiveSectionReport check_positive_section(const SmoothModel& model, std::size_t minus, std::size_t plus) {
  PositiveSectionReport r;
  r.minus_self = model.dot(minus, minus);
  r.plus_self = model.dot(plus, plus);
  r.plus_dot_minus = model.dot(plus, minus);
  r.holds = r.plus_dot_minus == 0;
  for (std::size_t i = 0; i < model.size(); ++i) {
    if (i == minus) continue;
    r.plus_degrees.emplace_back(i, model.dot(plus, i));
    if (model.dot(plus, i) <= 0) r.holds = false;
  }
  return r;
}

}  // namespace lcsurf
