/**
 * Exact integer/rational linear algebra: Smith normal form, ranks over
 * Q and prime fields, Hermite-style row reduction, and exact feasibility of
 * systems of linear (in)equalities by Fourier-Motzkin elimination.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace toric {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// Base class for every error raised by the library.
class ToricError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix. Used with Integer and Rational entries.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw ToricError("matrix data does not match shape");
  }
  /// Builds a matrix from a list of rows, which must all have equal length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw ToricError("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }
  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw ToricError("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += a(i, k) * b(k, j);
      }
    return p;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Elementary divisors d1 | d2 | ... of an integer matrix (nonzero ones only).
struct SmithForm {
  std::vector<Integer> divisors;
  std::size_t rank = 0;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Coefficient ring for (co)homology: Z, Q or Z/p with p prime.
class Ring {
 public:
  enum class Kind { Integers, Rationals, PrimeField };

  static Ring integers() { return Ring(Kind::Integers, 0); }
  static Ring rationals() { return Ring(Kind::Rationals, 0); }
  /// Throws ToricError unless p is prime.
  static Ring prime_field(std::int64_t p);
  /// Parses "Z", "Q", "Zp:<p>" (also "Z/<p>").
  static Ring parse(const std::string& text);

  Kind kind() const { return kind_; }
  std::int64_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != Kind::Integers; }
  std::string name() const;

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  Ring(Kind k, std::int64_t p) : kind_(k), p_(p) {}
  Kind kind_;
  std::int64_t p_;
};

bool is_prime(std::int64_t p);

/// Rank of an integer matrix over a field (Q or Z/p). Throws for Ring::integers().
std::size_t rank_over_field(const IntMatrix& m, const Ring& ring);

/// Rank over Q of a list of rational vectors.
std::size_t rank(const std::vector<RatVector>& rows);
std::size_t rank(const std::vector<IntVector>& rows);

/// Determinant of a square rational matrix.
Rational determinant(RatMatrix m);

/// Row echelon form over Z using unimodular row operations; zero rows dropped.
/// Pivots are positive and entries above each pivot are reduced into [0, pivot).
std::vector<IntVector> hermite_rows(std::vector<IntVector> rows);

/// Divides an integer vector by the gcd of its entries (zero vector unchanged).
IntVector primitive(IntVector v);

Rational dot(const RatVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);
RatVector to_rational(const IntVector& v);

int sign(const Integer& v);
int sign(const Rational& v);

/// Parses "p/q" or "p" into a rational; throws ToricError on malformed input.
Rational parse_rational(const std::string& text);
/// Canonical "p/q" (or "p" when q = 1).
std::string format_rational(const Rational& r);

// ---------------------------------------------------------------------------
// Linear feasibility

enum class Relation { GreaterEqual, Greater, Equal };

/// a . x  rel  rhs
struct LinearConstraint {
  RatVector coeffs;
  Rational rhs;
  Relation rel = Relation::GreaterEqual;
};

/// Exact rational solution of the system, if one exists, via Fourier-Motzkin
/// elimination with back substitution. `dim` is the number of unknowns.
std::optional<RatVector> lp_witness(std::span<const LinearConstraint> constraints, std::size_t dim);

/// True iff some rational x satisfies every constraint. An empty system is feasible.
bool lp_feasible(std::span<const LinearConstraint> constraints);

}  // namespace toric
