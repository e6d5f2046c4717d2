// Acceptance suite: one PASS/FAIL line per criterion over the test corpus.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "toric/classify.hpp"
#include "toric/complex.hpp"
#include "toric/ehrhart.hpp"
#include "toric/homology.hpp"
#include "toric/sheaf.hpp"

using namespace toric;

namespace {

struct Entry {
  std::string name;
  LatticePolytope p;
};

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Entry> corpus() {
  auto build = [](std::initializer_list<std::initializer_list<long>> pts) {
    std::vector<IntVector> v;
    for (auto p : pts) v.push_back(iv(p));
    return LatticePolytope::build(v);
  };
  return {{"SEG", build({{0}, {1}})},
          {"TRI", build({{0, 0}, {1, 0}, {0, 1}})},
          {"SQ", build({{0, 0}, {1, 0}, {0, 1}, {1, 1}})},
          {"SQ2", build({{0, 0}, {2, 0}, {0, 2}, {2, 2}})},
          {"CUBE", build({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}})},
          {"TRI2", build({{0, 0}, {2, 0}, {0, 2}})}};
}

const std::vector<Ring> kRings{Ring::integers(), Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)};

// Records the first failure of a criterion together with a running tally.
class Criterion {
 public:
  void expect(bool ok, const std::function<std::string()>& why) {
    ++checks_;
    if (!ok && detail_.empty()) detail_ = why();
  }
  bool passed() const { return detail_.empty(); }
  std::string summary() const {
    return passed() ? std::to_string(checks_) + " checks" : detail_ + " (" + std::to_string(checks_) + " checks)";
  }

 private:
  std::size_t checks_ = 0;
  std::string detail_;
};

template <class F>
void for_box(const std::vector<Integer>& lo, const std::vector<Integer>& hi, F&& f) {
  IntVector x = lo;
  for (;;) {
    f(static_cast<const IntVector&>(x));
    std::size_t i = 0;
    while (i < x.size() && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == x.size()) return;
    ++x[i];
  }
}

std::pair<std::vector<Integer>, std::vector<Integer>> scan_box(const LatticePolytope& p, long k, long margin) {
  std::vector<Integer> lo, hi;
  for (const auto& [a, b] : p.bounding_box()) {
    const Integer x = k * a, y = k * b;
    lo.push_back(std::min(x, y) - margin);
    hi.push_back(std::max(x, y) + margin);
  }
  return {lo, hi};
}

Criterion reciprocity(const std::vector<Entry>& polys) {
  Criterion c;
  for (const auto& [name, p] : polys) {
    const auto e = ehrhart_polynomial(p);
    const long n = static_cast<long>(p.dim());
    for (long k = -(n + 2); k <= -1; ++k) {
      // int(kP) for k < 0 is int(|k| (-P)); counted on the reflected polytope.
      const Integer interior = count_points(p.negated(), Integer(-k), true);
      const Rational lhs = (n % 2 == 0 ? 1 : -1) * e(Rational(k));
      c.expect(lhs == Rational(interior), [&] {
        return name + " k=" + std::to_string(k) + ": " + format_rational(lhs) + " vs " + interior.get_str();
      });
      c.expect(interior == count_points(p, Integer(k), true), [&] { return name + " dilate counts disagree"; });
    }
  }
  return c;
}

Criterion splitting(const std::vector<Entry>& polys) {
  const std::map<std::string, int> expected{{"TRI", 2}, {"SEG", 1}, {"SQ", 1}, {"SQ2", 0}, {"CUBE", 1}};
  Criterion c;
  for (const auto& [name, p] : polys) {
    try {
      const auto s = splitting_index(p);
      c.expect(static_cast<int>(s.roots.size()) == s.first_interior_dilate - 1,
               [&] { return name + ": the two computations disagree"; });
      auto it = expected.find(name);
      if (it != expected.end())
        c.expect(s.index == it->second, [&] {
          return name + ": index " + std::to_string(s.index) + ", expected " + std::to_string(it->second);
        });
    } catch (const ToricError& e) {
      c.expect(false, [&] { return name + ": " + e.what(); });
    }
  }
  return c;
}

Criterion global_theorem(const std::vector<Entry>& polys) {
  Criterion c;
  for (const auto& [name, p] : polys) {
    const FaceLattice l(p);
    const auto e = ehrhart_polynomial(p);
    const int n = static_cast<int>(p.dim());
    for (long k = -3; k <= 3; ++k) {
      const std::size_t rank = Rational(abs(e(Rational(k)))).get_num().get_ui();
      std::set<IntVector> lattice;
      const auto [lo, hi] = scan_box(p, k, 2);
      for_box(lo, hi, [&](const IntVector& x) {
        if (p.dilate_contains(x, Integer(k), k < 0)) lattice.insert(x);
      });
      for (const auto& r : kRings) {
        const std::string at = name + " k=" + std::to_string(k) + " over " + r.name();
        try {
          const auto g = global_cohomology(l, Integer(k), r);
          c.expect(g.shell_certified && g.distant_certified, [&] { return at + ": box not certified"; });
          c.expect(g.total.is_free(), [&] { return at + ": torsion"; });
          c.expect(g.total.concentrated(k >= 0 ? 0 : n, rank), [&] { return at + ": wrong degree or rank"; });
          std::set<IntVector> contributors;
          for (const auto& x : g.contributors) contributors.insert(x.x);
          c.expect(contributors == lattice && g.contributors.size() == lattice.size(),
                   [&] { return at + ": contributors differ from the lattice points of the dilate"; });
        } catch (const ToricError& err) {
          c.expect(false, [&] { return at + ": " + err.what(); });
        }
      }
    }
  }
  return c;
}

Criterion membership(const std::vector<Entry>& polys) {
  Criterion c;
  for (const auto& [name, p] : polys) {
    const FaceLattice l(p);
    const std::vector<Integer> lo(p.dim(), Integer(-3)), hi(p.dim(), Integer(4));
    for (long k = -2; k <= 2; ++k)
      for_box(lo, hi, [&](const IntVector& x) {
        for (FaceId f = 0; f < l.size(); ++f)
          c.expect(twist_membership(l, Integer(k), f, x) == membership_oracle(l, Integer(k), f, x), [&] {
            return name + " F=" + l.label(f) + " k=" + std::to_string(k) + " x=" + format_point(x);
          });
      });
  }
  return c;
}

Criterion crosschecks(const std::vector<Entry>& polys) {
  Criterion c;
  for (const auto& [name, p] : polys) {
    const FaceLattice l(p);
    const FaceLattice neg(p.negated());
    for (int k : {1, 0, -1}) {
      const auto [lo, hi] = scan_box(p, k, 2);
      for_box(lo, hi, [&](const IntVector& x) {
        if (k == 1 && p.contains(x, false)) return;
        if (k == 0 && std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; })) return;
        if (k == -1 && neg.polytope().contains(x, true)) return;
        c.expect(classification_crosscheck(l, neg, k, x),
                 [&] { return name + " k=" + std::to_string(k) + " x=" + format_point(x); });
      });
    }
  }
  return c;
}

Criterion combinatorial_formulas(const std::vector<Entry>& polys) {
  Criterion c;
  using SetFn = FaceSubset (*)(const FaceLattice&, FaceId, StarMode);
  const std::pair<const char*, SetFn> ops[] = {{"star", star},
                                               {"closed star", closed_star},
                                               {"open antistar", open_antistar},
                                               {"closed antistar", closed_antistar},
                                               {"link", link}};
  for (const auto& [name, p] : polys) {
    const FaceLattice l(p);
    for (FaceId a = 0; a < l.top(); ++a) {
      for (const auto& [op, fn] : ops)
        c.expect(fn(l, a, StarMode::Definitional) == fn(l, a, StarMode::Combinatorial),
                 [&] { return name + ": " + op + " of " + l.label(a); });
      c.expect(closed_antistar(l, a) == closure(open_antistar(l, a)),
               [&] { return name + ": antistar closure at " + l.label(a); });
      for (FaceId b = 0; b < l.top(); ++b) {
        if (a == b || !l.leq(a, b)) continue;
        const auto lk = link(l, b);
        std::set<FaceId> formula;
        for (FaceId f : lk.members())
          if (!l.leq(b, l.join(f, a))) formula.insert(f);
        c.expect(closed_star_within(lk, a).members() == formula,
                 [&] { return name + ": star in link, A=" + l.label(a) + " B=" + l.label(b); });
      }
    }
  }
  return c;
}

Criterion nerve_homology(const std::vector<Entry>& polys) {
  Criterion c;
  for (const auto& [name, p] : polys) {
    const FaceLattice l(p);
    const int n = static_cast<int>(p.dim());
    c.expect(is_sphere(reduced_homology(boundary_complex(l)), n - 1), [&] { return name + ": boundary nerve"; });
    for (ClassKind kind : {ClassKind::Visibility, ClassKind::FrontBack, ClassKind::LowerUpper}) {
      const auto points = sample_viewpoints(kind, p, 8, 1);
      c.expect(points.size() >= 8, [&] { return name + ": fewer than 8 viewpoints"; });
      for (const auto& x : points) {
        const auto cl = classify(kind, l, x);
        const std::string at = name + " " + to_string(kind) + " at " + format_point(x);
        c.expect(is_acyclic(reduced_homology(cl.filter_side)), [&] { return at + ": filter side"; });
        c.expect(is_acyclic(reduced_homology(cl.complex_side)), [&] { return at + ": complex side"; });
        if (n >= 2)
          c.expect(!cl.boundary.empty() && is_sphere(reduced_homology(cl.boundary), n - 2),
                   [&] { return at + ": common boundary"; });
      }
    }
  }
  return c;
}

Criterion chain_soundness(const std::vector<Entry>& polys) {
  Criterion c;
  for (const auto& [name, p] : polys) {
    const FaceLattice l(p);
    const auto orient = orient_faces(l);
    const auto d = face_cochain_complex(l, orient);
    c.expect(d.squares_to_zero(), [&] { return name + ": dd != 0 on the face complex"; });
    for (const auto& r : kRings)
      c.expect(cohomology(d, r).concentrated(0, 1), [&] { return name + ": h(D) over " + r.name(); });
    for (long k = -2; k <= 2; ++k) {
      const auto [lo, hi] = scan_box(p, k, 1);
      for_box(lo, hi, [&](const IntVector& x) {
        c.expect(graded_piece(l, orient, Integer(k), x).complex.squares_to_zero(),
                 [&] { return name + ": dd != 0 on a graded piece at " + format_point(x); });
      });
    }
    for (FaceId a = 0; a < l.top(); ++a)
      for (const auto& s : {link(l, a), closed_star(l, a), closed_antistar(l, a), boundary_complex(l)}) {
        if (s.empty()) continue;
        for (bool reduced : {false, true})
          c.expect(simplicial_chain_complex(nerve(s), reduced).squares_to_zero(),
                   [&] { return name + ": dd != 0 on a nerve near " + l.label(a); });
      }
  }
  return c;
}

}  // namespace

int main() {
  const auto polys = corpus();
  const std::pair<const char*, std::function<Criterion(const std::vector<Entry>&)>> criteria[] = {
      {"Ehrhart reciprocity for k in [-(n+2), -1]", reciprocity},
      {"splitting index from roots and interior dilates", splitting},
      {"cohomology of twists is free of rank |E(k)|", global_theorem},
      {"membership formula matches the cone oracle", membership},
      {"twist face sets match the classifications", crosschecks},
      {"combinatorial star, link and antistar formulas", combinatorial_formulas},
      {"nerve homology of boundaries and classified sides", nerve_homology},
      {"chain complexes square to zero, D has h0 = R", chain_soundness},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [title, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Criterion c;
    try {
      c = run(polys);
    } catch (const std::exception& e) {
      c.expect(false, [&] { return std::string("exception: ") + e.what(); });
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << (c.passed() ? "PASS" : "FAIL") << "  criterion " << index << ": " << title << " [" << c.summary()
         << ", " << static_cast<long>(ms) << " ms]";
    std::cout << line.str() << std::endl;
    if (!c.passed()) ++failed;
  }
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
  return failed == 0 ? 0 : 1;
}
