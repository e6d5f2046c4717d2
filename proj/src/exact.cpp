#include "toric/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <regex>
#include <utility>

namespace toric {

namespace {

// Position of the nonzero entry of least absolute value in the lower-right
// block starting at (t, t), or nullopt if the block vanishes.
std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(const IntMatrix& a, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  Integer best_abs;
  for (std::size_t i = t; i < a.rows(); ++i)
    for (std::size_t j = t; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      Integer v = abs(a(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
  if (r1 == r2) return;
  for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
  if (c1 == c2) return;
  for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  SmithForm out;
  const std::size_t limit = std::min(a.rows(), a.cols());
  for (std::size_t t = 0; t < limit; ++t) {
    auto pos = smallest_entry(a, t);
    if (!pos) break;
    swap_rows(a, t, pos->first);
    swap_cols(a, t, pos->second);

    for (;;) {
      // Clear column t and row t by division; leftover remainders are
      // strictly smaller than the pivot and become the next pivot.
      bool clean = true;
      for (std::size_t i = t + 1; i < a.rows(); ++i) {
        if (a(i, t) == 0) continue;
        Integer q = a(i, t) / a(t, t);
        for (std::size_t j = t; j < a.cols(); ++j) a(i, j) -= q * a(t, j);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < a.cols(); ++j) {
        if (a(t, j) == 0) continue;
        Integer q = a(t, j) / a(t, t);
        for (std::size_t i = t; i < a.rows(); ++i) a(i, j) -= q * a(i, t);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) {
        Integer best = abs(a(t, t));
        std::size_t bi = t, bj = t;
        for (std::size_t i = t + 1; i < a.rows(); ++i)
          if (a(i, t) != 0 && abs(a(i, t)) < best) best = abs(a(i, t)), bi = i, bj = t;
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(t, j) != 0 && abs(a(t, j)) < best) best = abs(a(t, j)), bi = t, bj = j;
        swap_rows(a, t, bi);
        swap_cols(a, t, bj);
        continue;
      }
      // Pivot must divide the whole remaining block.
      std::optional<std::size_t> bad_row;
      for (std::size_t i = t + 1; i < a.rows() && !bad_row; ++i)
        for (std::size_t j = t + 1; j < a.cols(); ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (!bad_row) break;
      for (std::size_t j = t; j < a.cols(); ++j) a(t, j) += a(*bad_row, j);
    }
    out.divisors.push_back(abs(a(t, t)));
  }
  out.rank = out.divisors.size();
  return out;
}

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d <= p / d; ++d)
    if (p % d == 0) return false;
  return true;
}

Ring Ring::prime_field(std::int64_t p) {
  if (!is_prime(p)) throw ToricError("Z/" + std::to_string(p) + " is not a field: modulus not prime");
  if (p > (std::int64_t{1} << 31)) throw ToricError("prime modulus too large");
  return Ring(Kind::PrimeField, p);
}

Ring Ring::parse(const std::string& text) {
  if (text == "Z") return integers();
  if (text == "Q") return rationals();
  static const std::regex field(R"((?:Zp:|Z/)(\d+))");
  std::smatch m;
  if (std::regex_match(text, m, field)) return prime_field(std::stoll(m[1].str()));
  throw ToricError("unknown ring '" + text + "' (expected Z, Q or Zp:<p>)");
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integers:
      return "Z";
    case Kind::Rationals:
      return "Q";
    case Kind::PrimeField:
      return "Z/" + std::to_string(p_);
  }
  return "?";
}

namespace {

std::size_t rank_mod_p(const IntMatrix& m, std::int64_t p) {
  const std::size_t R = m.rows(), C = m.cols();
  std::vector<std::int64_t> a(R * C);
  const Integer mod = static_cast<long>(p);
  for (std::size_t i = 0; i < R; ++i)
    for (std::size_t j = 0; j < C; ++j) {
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), m(i, j).get_mpz_t(), mod.get_mpz_t());
      a[i * C + j] = r.get_si();
    }
  auto mulmod = [p](std::int64_t x, std::int64_t y) {
    return static_cast<std::int64_t>((static_cast<__int128>(x) * y) % p);
  };
  auto inverse = [&](std::int64_t x) {
    // Fermat: x^(p-2)
    std::int64_t result = 1, base = x, e = p - 2;
    while (e > 0) {
      if (e & 1) result = mulmod(result, base);
      base = mulmod(base, base);
      e >>= 1;
    }
    return result;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && a[piv * C + c] == 0) ++piv;
    if (piv == R) continue;
    for (std::size_t j = 0; j < C; ++j) std::swap(a[piv * C + j], a[rank * C + j]);
    const std::int64_t inv = inverse(a[rank * C + c]);
    for (std::size_t i = rank + 1; i < R; ++i) {
      if (a[i * C + c] == 0) continue;
      const std::int64_t f = mulmod(a[i * C + c], inv);
      for (std::size_t j = c; j < C; ++j)
        a[i * C + j] = ((a[i * C + j] - mulmod(f, a[rank * C + j])) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

std::size_t rank_rational(RatMatrix a) {
  const std::size_t R = a.rows(), C = a.cols();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < C && rank < R; ++c) {
    std::size_t piv = rank;
    while (piv < R && a(piv, c) == 0) ++piv;
    if (piv == R) continue;
    for (std::size_t j = 0; j < C; ++j) std::swap(a(piv, j), a(rank, j));
    for (std::size_t i = rank + 1; i < R; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(rank, c);
      for (std::size_t j = c; j < C; ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

}  // namespace

std::size_t rank_over_field(const IntMatrix& m, const Ring& ring) {
  switch (ring.kind()) {
    case Ring::Kind::Rationals:
      return rank_rational(to_rational(m));
    case Ring::Kind::PrimeField:
      return rank_mod_p(m, ring.characteristic());
    case Ring::Kind::Integers:
      break;
  }
  throw ToricError("rank_over_field requires a field");
}

std::size_t rank(const std::vector<RatVector>& rows) {
  if (rows.empty()) return 0;
  return rank_rational(RatMatrix::from_rows(rows));
}

std::size_t rank(const std::vector<IntVector>& rows) {
  if (rows.empty()) return 0;
  return rank_rational(to_rational(IntMatrix::from_rows(rows)));
}

Rational determinant(RatMatrix a) {
  if (a.rows() != a.cols()) throw ToricError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::vector<IntVector> hermite_rows(std::vector<IntVector> rows) {
  if (rows.empty()) return rows;
  const std::size_t C = rows.front().size();
  std::size_t pivot_row = 0;
  std::vector<std::size_t> pivot_cols;
  for (std::size_t c = 0; c < C && pivot_row < rows.size(); ++c) {
    for (;;) {
      std::optional<std::size_t> best;
      for (std::size_t i = pivot_row; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (!best || abs(rows[i][c]) < abs(rows[*best][c]))) best = i;
      if (!best) break;
      std::swap(rows[pivot_row], rows[*best]);
      bool done = true;
      for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[pivot_row][c];
        for (std::size_t j = 0; j < C; ++j) rows[i][j] -= q * rows[pivot_row][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) break;
    }
    if (rows[pivot_row][c] == 0) continue;
    if (rows[pivot_row][c] < 0)
      for (auto& v : rows[pivot_row]) v = -v;
    for (std::size_t i = 0; i < pivot_row; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[pivot_row][c].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = 0; j < C; ++j) rows[i][j] -= q * rows[pivot_row][j];
    }
    pivot_cols.push_back(c);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  return rows;
}

IntVector primitive(IntVector v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw ToricError("dimension mismatch in dot product");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw ToricError("dimension mismatch in dot product");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVector to_rational(const IntVector& v) { return RatVector(v.begin(), v.end()); }

int sign(const Integer& v) { return sgn(v); }
int sign(const Rational& v) { return sgn(v); }

Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(\s*([+-]?\d+)(?:/(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw ToricError("malformed rational '" + text + "'");
  Integer num(m[1].str().front() == '+' ? m[1].str().substr(1) : m[1].str());
  Integer den = m[2].matched ? Integer(m[2].str()) : Integer(1);
  if (den == 0) throw ToricError("zero denominator in '" + text + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

struct Row {
  RatVector a;  // coefficients of the unknowns still present
  Rational b;
  bool strict = false;
};

// Scales a so that its first nonzero coefficient is +-1. Returns false if
// the row has no nonzero coefficient.
bool normalize(Row& r) {
  auto it = std::find_if(r.a.begin(), r.a.end(), [](const Rational& v) { return v != 0; });
  if (it == r.a.end()) return false;
  Rational s = abs(*it);
  for (auto& v : r.a) v /= s;
  r.b /= s;
  return true;
}

// Keeps only the tightest right-hand side per coefficient vector. Returns
// false if some constant row is violated.
bool compact(std::vector<Row>& rows) {
  std::map<std::vector<Rational>, std::pair<Rational, bool>> best;
  for (auto& r : rows) {
    if (!normalize(r)) {
      // 0 >= b or 0 > b
      if (r.strict ? !(r.b < 0) : !(r.b <= 0)) return false;
      continue;
    }
    auto [it, inserted] = best.try_emplace(r.a, r.b, r.strict);
    if (inserted) continue;
    auto& [b, strict] = it->second;
    if (r.b > b || (r.b == b && r.strict)) {
      b = r.b;
      strict = r.strict;
    }
  }
  rows.clear();
  for (auto& [a, bs] : best) rows.push_back(Row{a, bs.first, bs.second});
  return true;
}

}  // namespace

std::optional<RatVector> lp_witness(std::span<const LinearConstraint> constraints, std::size_t dim) {
  std::vector<Row> rows;
  for (const auto& c : constraints) {
    if (c.coeffs.size() != dim) throw ToricError("constraint dimension mismatch");
    switch (c.rel) {
      case Relation::GreaterEqual:
        rows.push_back(Row{c.coeffs, c.rhs, false});
        break;
      case Relation::Greater:
        rows.push_back(Row{c.coeffs, c.rhs, true});
        break;
      case Relation::Equal: {
        rows.push_back(Row{c.coeffs, c.rhs, false});
        Row neg{c.coeffs, -c.rhs, false};
        for (auto& v : neg.a) v = -v;
        rows.push_back(std::move(neg));
        break;
      }
    }
  }
  if (!compact(rows)) return std::nullopt;

  // levels[j] holds the rows involving x_j (and only x_0..x_j) at the moment
  // x_j is eliminated; they drive back substitution.
  std::vector<std::vector<Row>> levels(dim);
  for (std::size_t j = dim; j-- > 0;) {
    std::vector<Row> pos, neg, next;
    for (auto& r : rows) {
      const int s = sign(r.a[j]);
      if (s > 0)
        pos.push_back(r);
      else if (s < 0)
        neg.push_back(r);
      else
        next.push_back(r);
    }
    for (const auto& p : pos)
      for (const auto& q : neg) {
        // (-q_j) * p + p_j * q eliminates x_j; both multipliers positive.
        const Rational mp = -q.a[j], mq = p.a[j];
        Row r;
        r.a.resize(dim);
        for (std::size_t i = 0; i < dim; ++i) r.a[i] = mp * p.a[i] + mq * q.a[i];
        r.a[j] = 0;
        r.b = mp * p.b + mq * q.b;
        r.strict = p.strict || q.strict;
        next.push_back(std::move(r));
      }
    levels[j] = std::move(pos);
    levels[j].insert(levels[j].end(), neg.begin(), neg.end());
    if (!compact(next)) return std::nullopt;
    rows = std::move(next);
  }

  RatVector x(dim, Rational(0));
  for (std::size_t j = 0; j < dim; ++j) {
    std::optional<std::pair<Rational, bool>> lower, upper;
    for (const auto& r : levels[j]) {
      Rational rest = r.b;
      for (std::size_t i = 0; i < j; ++i) rest -= r.a[i] * x[i];
      const Rational bound = rest / r.a[j];
      if (r.a[j] > 0) {
        if (!lower || bound > lower->first || (bound == lower->first && r.strict)) lower = {bound, r.strict};
      } else {
        if (!upper || bound < upper->first || (bound == upper->first && r.strict)) upper = {bound, r.strict};
      }
    }
    if (lower && upper) {
      if (lower->first == upper->first) {
        if (lower->second || upper->second) throw ToricError("Fourier-Motzkin back substitution failed");
        x[j] = lower->first;
      } else {
        x[j] = (lower->first + upper->first) / 2;
      }
    } else if (lower) {
      x[j] = lower->first + (lower->second ? 1 : 0);
    } else if (upper) {
      x[j] = upper->first - (upper->second ? 1 : 0);
    }
  }
  return x;
}

bool lp_feasible(std::span<const LinearConstraint> constraints) {
  if (constraints.empty()) return true;
  return lp_witness(constraints, constraints.front().coeffs.size()).has_value();
}

}  // namespace toric
