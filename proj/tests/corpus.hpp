// Shared test polytopes and small helpers.
#pragma once

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/polytope.hpp"

namespace corpus {

using toric::IntVector;
using toric::LatticePolytope;

inline IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline toric::RatVector rv(std::initializer_list<const char*> xs) {
  toric::RatVector v;
  for (const char* x : xs) v.push_back(toric::parse_rational(x));
  return v;
}

inline LatticePolytope build(std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<IntVector> v;
  for (auto p : pts) v.push_back(iv(p));
  return LatticePolytope::build(v);
}

inline LatticePolytope seg() { return build({{0}, {1}}); }
inline LatticePolytope tri() { return build({{0, 0}, {1, 0}, {0, 1}}); }
inline LatticePolytope sq() { return build({{0, 0}, {1, 0}, {0, 1}, {1, 1}}); }
inline LatticePolytope sq2() { return build({{0, 0}, {2, 0}, {0, 2}, {2, 2}}); }
inline LatticePolytope cube() {
  return build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}});
}
inline LatticePolytope tri2() { return build({{0, 0}, {2, 0}, {0, 2}}); }

struct Named {
  std::string name;
  LatticePolytope polytope;
};

inline std::vector<Named> all() {
  return {{"SEG", seg()}, {"TRI", tri()}, {"SQ", sq()}, {"SQ2", sq2()}, {"CUBE", cube()}, {"TRI2", tri2()}};
}

/// Face id of the face with exactly these vertices; fails loudly if absent.
inline toric::FaceId face(const toric::FaceLattice& l, std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<std::size_t> idx;
  const auto& verts = l.polytope().vertices();
  for (auto p : pts) {
    const IntVector v = iv(p);
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (verts[i] == v) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  auto f = l.find(idx);
  if (!f || idx.size() != pts.size()) throw std::logic_error("no such face");
  return *f;
}

/// Random lattice polygon or polytope: hull of random points in [0, r]^n.
inline LatticePolytope random_polytope(std::mt19937_64& rng, std::size_t n, long r, std::size_t count) {
  std::uniform_int_distribution<long> d(0, r);
  for (;;) {
    std::vector<IntVector> pts;
    for (std::size_t i = 0; i < count; ++i) {
      IntVector p;
      for (std::size_t c = 0; c < n; ++c) p.emplace_back(d(rng));
      pts.push_back(p);
    }
    try {
      return LatticePolytope::build(pts);
    } catch (const toric::ToricError&) {
    }
  }
}

/// Carathéodory test: x lies in conv(V) iff it lies in the simplex of some
/// affinely independent (n+1)-subset of V. Barycentric coordinates by Cramer's rule.
inline bool hull_contains(const LatticePolytope& p, const toric::RatVector& x) {
  const auto& v = p.vertices();
  const std::size_t n = p.dim(), m = v.size();
  std::vector<std::size_t> idx(n + 1);
  std::function<bool(std::size_t, std::size_t)> choose = [&](std::size_t pos, std::size_t start) -> bool {
    if (pos == n + 1) {
      toric::RatMatrix a(n + 1, n + 1);
      for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i < n; ++i) a(i, j) = v[idx[j]][i];
        a(n, j) = 1;
      }
      const toric::Rational det = toric::determinant(a);
      if (det == 0) return false;
      for (std::size_t j = 0; j <= n; ++j) {
        toric::RatMatrix b = a;
        for (std::size_t i = 0; i < n; ++i) b(i, j) = x[i];
        b(n, j) = 1;
        if (toric::determinant(b) / det < 0) return false;
      }
      return true;
    }
    for (std::size_t i = start; i < m; ++i) {
      idx[pos] = i;
      if (choose(pos + 1, i + 1)) return true;
    }
    return false;
  };
  return choose(0, 0);
}

}  // namespace corpus
