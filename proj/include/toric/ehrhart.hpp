/**
 * Lattice-point counts of dilates, the Ehrhart polynomial, reciprocity and
 * the splitting index (number of distinct integral Ehrhart roots).
 */
#pragma once

#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// E(T) = sum_i coefficients[i] * T^i.
class EhrhartPolynomial {
 public:
  EhrhartPolynomial() = default;
  explicit EhrhartPolynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  std::size_t degree() const { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }
  Rational operator()(const Rational& t) const;
  /// Distinct integral roots in increasing order. Candidates are -(degree+1)..0;
  /// throws ToricError if E(-(degree+2)) vanishes, since that would signal a
  /// root outside the searched window.
  std::vector<Integer> integral_roots() const;

  friend bool operator==(const EhrhartPolynomial&, const EhrhartPolynomial&) = default;

 private:
  std::vector<Rational> coefficients_;
};

/// Number of lattice points in kP (in its interior when `interior`). For
/// k < 0 this is the literal dilate -|k|P.
Integer count_points(const LatticePolytope& p, const Integer& k, bool interior);

/// Interpolates the counts at k = 0..n.
EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p);

struct ReciprocityRow {
  Integer j;               // evaluated at k = -j
  Rational signed_value;   // (-1)^n E(-j)
  Integer interior_count;  // #(int(-jP) cap Z^n)
};

struct ReciprocityReport {
  std::vector<ReciprocityRow> rows;
  bool holds = true;
};

/// Compares (-1)^n E(-j) with interior counts for j = 1..kmax.
ReciprocityReport reciprocity_check(const LatticePolytope& p, const EhrhartPolynomial& e, int kmax);
ReciprocityReport reciprocity_check(const LatticePolytope& p, int kmax);

struct SplittingIndex {
  int index = 0;                  // agreed value
  std::vector<Integer> roots;     // distinct integral roots of E
  int first_interior_dilate = 0;  // minimal m >= 1 with a lattice point in int(mP)
};

/// Computes the index both as the number of distinct integral Ehrhart roots
/// and as the least j >= 0 with a lattice point in int((j+1)P). Throws
/// ToricError if the two disagree.
SplittingIndex splitting_index(const LatticePolytope& p, const EhrhartPolynomial& e);
SplittingIndex splitting_index(const LatticePolytope& p);

}  // namespace toric
