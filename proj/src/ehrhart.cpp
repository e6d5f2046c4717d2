#include "toric/ehrhart.hpp"

#include <algorithm>

namespace toric {

EhrhartPolynomial::EhrhartPolynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  while (coefficients_.size() > 1 && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational EhrhartPolynomial::operator()(const Rational& t) const {
  Rational v = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) v = v * t + *it;
  return v;
}

std::vector<Integer> EhrhartPolynomial::integral_roots() const {
  const long n = static_cast<long>(degree());
  if ((*this)(Rational(-(n + 2))) == 0) throw ToricError("integral Ehrhart root below the search window");
  std::vector<Integer> roots;
  for (long j = -(n + 1); j <= 0; ++j)
    if ((*this)(Rational(j)) == 0) roots.emplace_back(j);
  return roots;
}

Integer count_points(const LatticePolytope& p, const Integer& k, bool interior) {
  const std::size_t n = p.dim();
  std::vector<Integer> lo(n), hi(n);
  const auto box = p.bounding_box();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer a = k * box[i].first, b = k * box[i].second;
    lo[i] = std::min(a, b);
    hi[i] = std::max(a, b);
  }
  Integer count = 0;
  IntVector x = lo;
  for (;;) {
    if (p.dilate_contains(x, k, interior)) ++count;
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  return count;
}

EhrhartPolynomial ehrhart_polynomial(const LatticePolytope& p) {
  const std::size_t n = p.dim();
  // Newton forward differences at 0, then expand sum_i D_i * binom(T, i).
  std::vector<Rational> diffs;
  for (std::size_t k = 0; k <= n; ++k) diffs.emplace_back(count_points(p, Integer(static_cast<long>(k)), false));
  std::vector<Rational> newton;
  for (std::size_t i = 0; i <= n; ++i) {
    newton.push_back(diffs.front());
    for (std::size_t j = 0; j + 1 < diffs.size(); ++j) diffs[j] = diffs[j + 1] - diffs[j];
    diffs.pop_back();
  }
  std::vector<Rational> coeffs(n + 1, Rational(0));
  std::vector<Rational> basis{Rational(1)};  // binom(T, i) in monomials
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += newton[i] * basis[d];
    // binom(T, i+1) = binom(T, i) * (T - i) / (i + 1)
    std::vector<Rational> next(basis.size() + 1, Rational(0));
    for (std::size_t d = 0; d < basis.size(); ++d) {
      next[d + 1] += basis[d];
      next[d] -= basis[d] * static_cast<long>(i);
    }
    for (auto& v : next) v /= static_cast<long>(i + 1);
    basis = std::move(next);
  }
  return EhrhartPolynomial(std::move(coeffs));
}

ReciprocityReport reciprocity_check(const LatticePolytope& p, const EhrhartPolynomial& e, int kmax) {
  if (kmax < 1) throw ToricError("reciprocity check needs kmax >= 1");
  ReciprocityReport report;
  const int parity = p.dim() % 2 == 0 ? 1 : -1;
  for (int j = 1; j <= kmax; ++j) {
    ReciprocityRow row;
    row.j = j;
    row.signed_value = parity * e(Rational(-j));
    row.interior_count = count_points(p, Integer(-j), true);
    if (row.signed_value != Rational(row.interior_count)) report.holds = false;
    report.rows.push_back(std::move(row));
  }
  return report;
}

ReciprocityReport reciprocity_check(const LatticePolytope& p, int kmax) {
  return reciprocity_check(p, ehrhart_polynomial(p), kmax);
}

SplittingIndex splitting_index(const LatticePolytope& p, const EhrhartPolynomial& e) {
  SplittingIndex out;
  out.roots = e.integral_roots();
  const int limit = static_cast<int>(p.dim()) + 1;
  for (int m = 1; m <= limit + 1; ++m)
    if (count_points(p, Integer(m), true) > 0) {
      out.first_interior_dilate = m;
      break;
    }
  if (out.first_interior_dilate == 0) throw ToricError("no interior lattice point in small dilates");
  out.index = out.first_interior_dilate - 1;
  if (static_cast<int>(out.roots.size()) != out.index)
    throw ToricError("splitting index mismatch: " + std::to_string(out.roots.size()) + " integral roots but int(" +
                     std::to_string(out.first_interior_dilate) + "P) is the first dilate with an interior point");
  return out;
}

SplittingIndex splitting_index(const LatticePolytope& p) { return splitting_index(p, ehrhart_polynomial(p)); }

}  // namespace toric
