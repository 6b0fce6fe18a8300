#include "lcsurf/linalg.hpp"

#include <algorithm>
#include <cctype>

#include "lcsurf/error.hpp"

namespace lcsurf {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidSurface: return "InvalidSurface";
    case ErrorKind::InvalidCluster: return "InvalidCluster";
    case ErrorKind::InconsistentFlags: return "InconsistentFlags";
    case ErrorKind::NotNonExceptional: return "NotNonExceptional";
    case ErrorKind::RejectNonNegativeSelfInt: return "RejectNonNegativeSelfInt";
    case ErrorKind::RejectKDeltaNonNegative: return "RejectKDeltaNonNegative";
    case ErrorKind::RejectClusterDegenerate: return "RejectClusterDegenerate";
    case ErrorKind::InconsistentWithTheorem84: return "InconsistentWithTheorem84";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::LedgerDependence: return "LedgerDependence";
    case ErrorKind::MissingRestriction: return "MissingRestriction";
    case ErrorKind::InvalidRestriction: return "InvalidRestriction";
    case ErrorKind::BadSite: return "BadSite";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

Rational make_rational(long numerator, long denominator) {
  if (denominator == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  Rational r(numerator, denominator);
  r.canonicalize();
  return r;
}

namespace {

bool is_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& value) { return value.get_str(); }
std::string to_string(const Integer& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

SymMatrix::SymMatrix(std::size_t dimension) : n_(dimension), entries_(dimension * dimension) {}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RationalVector> converted;
  for (const auto& row : rows) {
    RationalVector r;
    for (long v : row) r.emplace_back(v);
    converted.push_back(std::move(r));
  }
  *this = from_rows(converted);
}

SymMatrix SymMatrix::from_rows(const std::vector<RationalVector>& rows) {
  SymMatrix m(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw Error(ErrorKind::DimensionMismatch, "matrix row " + std::to_string(i) + " has length " +
                                                    std::to_string(rows[i].size()) + ", expected " +
                                                    std::to_string(rows.size()));
    }
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (rows[i][j] != rows[j][i]) {
        throw Error(ErrorKind::ValidationError,
                    "matrix not symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
      }
      m.entries_[i * m.n_ + j] = rows[i][j];
    }
  }
  return m;
}

void SymMatrix::set(std::size_t row, std::size_t col, const Rational& value) {
  entries_[row * n_ + col] = value;
  entries_[col * n_ + row] = value;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const std::size_t> indices) const {
  SymMatrix sub(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      sub.entries_[i * sub.n_ + j] = (*this)(indices[i], indices[j]);
    }
  }
  return sub;
}

SymMatrix SymMatrix::extended(std::size_t extra) const {
  SymMatrix bigger(n_ + extra);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) bigger.entries_[i * bigger.n_ + j] = (*this)(i, j);
  }
  return bigger;
}

RationalVector SymMatrix::multiply(std::span<const Rational> x) const {
  if (x.size() != n_) throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix");
  RationalVector out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    Rational acc = 0;
    for (std::size_t j = 0; j < n_; ++j) {
      if (x[j] != 0) acc += (*this)(i, j) * x[j];
    }
    out[i] = acc;
  }
  return out;
}

Rational SymMatrix::bilinear(std::span<const Rational> x, std::span<const Rational> y) const {
  if (x.size() != n_ || y.size() != n_) {
    throw Error(ErrorKind::DimensionMismatch, "vector length does not match matrix");
  }
  Rational acc = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (y[j] != 0) acc += x[i] * (*this)(i, j) * y[j];
    }
  }
  return acc;
}

bool SymMatrix::has_integer_entries() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Rational& v) { return is_integer(v); });
}

namespace {

DenseMatrix to_dense(const SymMatrix& m) {
  DenseMatrix d(m.dimension(), m.dimension());
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < m.dimension(); ++j) d(i, j) = m(i, j);
  return d;
}

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(DenseMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols && row < a.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < a.rows && a(pivot, col) == 0) ++pivot;
    if (pivot == a.rows) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < a.cols; ++c) std::swap(a(pivot, c), a(row, c));
    }
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols; ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows; ++r) {
      if (r == row || a(r, col) == 0) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols; ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Rational determinant(const DenseMatrix& m) {
  if (m.rows != m.cols) throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
  DenseMatrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      const Rational factor = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
    }
  }
  return det;
}

Rational determinant(const SymMatrix& m) { return determinant(to_dense(m)); }

RationalVector leading_principal_minors(const SymMatrix& m) {
  RationalVector minors;
  minors.reserve(m.dimension());
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < m.dimension(); ++k) {
    idx.push_back(k);
    minors.push_back(determinant(m.principal_submatrix(idx)));
  }
  return minors;
}

bool is_negative_definite(const SymMatrix& m) {
  const RationalVector minors = leading_principal_minors(m);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    // d_{k+1} must have sign (-1)^{k+1}
    const int want = (k % 2 == 0) ? -1 : 1;
    if (sgn(minors[k]) != want) return false;
  }
  return true;
}

RationalVector solve_unique(const DenseMatrix& m, std::span<const Rational> b) {
  if (m.rows != m.cols || b.size() != m.rows) {
    throw Error(ErrorKind::DimensionMismatch, "solve_unique: shape mismatch");
  }
  const std::size_t n = m.rows;
  DenseMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots.back() >= n)) {
    throw Error(ErrorKind::SingularMatrix, "matrix is singular");
  }
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

RationalVector solve_unique(const SymMatrix& m, std::span<const Rational> b) {
  return solve_unique(to_dense(m), b);
}

std::size_t rank(const DenseMatrix& m) {
  DenseMatrix a = m;
  return rref(a).size();
}

std::vector<RationalVector> nullspace(const DenseMatrix& m) {
  DenseMatrix a = m;
  const auto pivots = rref(a);
  std::vector<bool> is_pivot(a.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(a.cols);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace lcsurf
