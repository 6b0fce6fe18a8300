#pragma once

// Exact rational linear algebra. Everything here works over GMP rationals;
// there is no floating point anywhere in the engine.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcsurf {

// mpq_class keeps numerator/denominator in lowest terms with a positive
// denominator after every arithmetic operation; the helpers below
// canonicalize whenever a value is assembled by hand.
using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

Rational make_rational(long numerator, long denominator = 1);
Rational make_rational(const Integer& numerator, const Integer& denominator);

// Accepts "p", "-p", "p/q" with optional sign; throws Error(ParseError) on
// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

class SymMatrix {
 public:
  SymMatrix() = default;
  explicit SymMatrix(std::size_t dimension);
  // Rows must form a square symmetric array; throws DimensionMismatch or
  // ValidationError otherwise.
  SymMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static SymMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t dimension() const noexcept { return n_; }
  const Rational& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  // Writes both (row, col) and (col, row).
  void set(std::size_t row, std::size_t col, const Rational& value);

  SymMatrix principal_submatrix(std::span<const std::size_t> indices) const;
  // New matrix with one extra row/column appended, zero-filled.
  SymMatrix extended(std::size_t extra = 1) const;

  RationalVector multiply(std::span<const Rational> x) const;
  // xᵀ M y
  Rational bilinear(std::span<const Rational> x, std::span<const Rational> y) const;

  bool has_integer_entries() const;

  friend bool operator==(const SymMatrix&, const SymMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> entries_;
};

// Dense (not necessarily square) rational matrix, row-major.
struct DenseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> data;

  DenseMatrix() = default;
  DenseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Rational& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

Rational determinant(const SymMatrix& m);
Rational determinant(const DenseMatrix& m);

// Leading principal minors d_1 .. d_n of m.
RationalVector leading_principal_minors(const SymMatrix& m);

// True iff xᵀMx < 0 for every nonzero x. Decided by the sign pattern of the
// leading principal minors: (-1)^k d_k > 0 for every k. The empty matrix is
// vacuously negative definite.
bool is_negative_definite(const SymMatrix& m);

// Unique x with Mx = b. Throws Error(SingularMatrix) when det M = 0 and
// Error(DimensionMismatch) when b has the wrong length.
RationalVector solve_unique(const SymMatrix& m, std::span<const Rational> b);
RationalVector solve_unique(const DenseMatrix& m, std::span<const Rational> b);

std::size_t rank(const DenseMatrix& m);

// Basis of {x : Mx = 0} in reduced form (one vector per free column).
std::vector<RationalVector> nullspace(const DenseMatrix& m);

}  // namespace lcsurf
