#include "toric/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "toric/classify.hpp"
#include "toric/complex.hpp"
#include "toric/ehrhart.hpp"
#include "toric/homology.hpp"
#include "toric/sheaf.hpp"

namespace toric {

Suite parse_suite(const std::string& name) {
  static const std::map<std::string, Suite> names{{"all", Suite::All},
                                                  {"combinatorics", Suite::Combinatorics},
                                                  {"classify", Suite::Classify},
                                                  {"ehrhart", Suite::Ehrhart},
                                                  {"cohomology", Suite::Cohomology}};
  auto it = names.find(name);
  if (it == names.end()) throw ToricError("unknown suite '" + name + "'");
  return it->second;
}

namespace {

// Collects the first failure message of a check.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }
  void expect(bool ok, const std::function<std::string()>& why) {
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.detail = why();
  }
  CheckResult done() { return std::move(result_); }

 private:
  CheckResult result_;
};

std::string face_list(const FaceLattice& l, const std::set<FaceId>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (FaceId f : s) {
    os << (first ? "" : " ") << l.label(f);
    first = false;
  }
  os << '}';
  return os.str();
}

template <class F>
void for_each_point(const std::vector<Integer>& lo, const std::vector<Integer>& hi, F&& f) {
  IntVector x = lo;
  const std::size_t n = lo.size();
  for (;;) {
    f(static_cast<const IntVector&>(x));
    std::size_t i = 0;
    while (i < n && x[i] == hi[i]) x[i] = lo[i], ++i;
    if (i == n) return;
    ++x[i];
  }
}

std::size_t count_satisfying(const LatticePolytope& p, const std::vector<Integer>& lo, const std::vector<Integer>& hi,
                             std::optional<std::size_t> skip) {
  std::size_t count = 0;
  for_each_point(lo, hi, [&](const IntVector& x) {
    for (std::size_t i = 0; i < p.facets().size(); ++i)
      if (i != skip && p.facets()[i].value(x) < 0) return;
    ++count;
  });
  return count;
}

std::vector<CheckResult> input_checks(const LatticePolytope& p) {
  std::vector<CheckResult> out;
  const std::size_t n = p.dim();

  Check valid("facet-validity");
  for (std::size_t i = 0; i < p.facets().size(); ++i) {
    const auto& f = p.facets()[i];
    valid.expect(f.normal.size() == n, [&] { return "facet " + std::to_string(i) + " has wrong dimension"; });
    if (f.normal.size() != n) continue;
    valid.expect(primitive(f.normal) == f.normal || primitive(f.normal) == IntVector(n, Integer(0)),
                 [&] { return "facet " + std::to_string(i) + " normal is not primitive"; });
    std::vector<IntVector> diffs;
    const IntVector* base = nullptr;
    bool strict = false;
    for (const auto& v : p.vertices()) {
      const Integer val = f.value(v);
      valid.expect(val >= 0, [&] { return "vertex " + format_point(v) + " violates facet " + std::to_string(i); });
      if (val > 0) strict = true;
      if (val != 0) continue;
      if (!base) {
        base = &v;
        continue;
      }
      IntVector d(n);
      for (std::size_t c = 0; c < n; ++c) d[c] = v[c] - (*base)[c];
      diffs.push_back(std::move(d));
    }
    valid.expect(base && rank(diffs) + 1 == n,
                 [&] { return "facet " + std::to_string(i) + " is not supported by an (n-1)-face"; });
    valid.expect(strict, [&] { return "facet " + std::to_string(i) + " contains every vertex"; });
  }
  out.push_back(valid.done());

  Check irredundant("facet-irredundancy");
  if (out.back().passed) {
    const auto box = p.bounding_box();
    std::vector<Integer> lo, hi;
    for (const auto& [a, b] : box) {
      lo.push_back(a - 3);
      hi.push_back(b + 3);
    }
    const std::size_t base_count = count_satisfying(p, lo, hi, std::nullopt);
    for (std::size_t i = 0; i < p.facets().size(); ++i)
      irredundant.expect(count_satisfying(p, lo, hi, i) > base_count,
                         [&] { return "dropping facet " + std::to_string(i) + " does not enlarge the polytope"; });
  } else {
    irredundant.expect(false, [] { return "skipped: invalid facet data"; });
  }
  out.push_back(irredundant.done());
  return out;
}

}  // namespace

std::vector<CheckResult> combinatorics_checks(const LatticePolytope& p, const SuiteOptions&) {
  std::vector<CheckResult> out;
  const FaceLattice l(p);
  const std::size_t n = p.dim();
  const std::size_t N = l.size();

  Check euler("euler-relation");
  long sum = 0;
  for (FaceId f = 0; f < l.top(); ++f) sum += l.face(f).dim % 2 == 0 ? 1 : -1;
  const long expected = 1 + ((n - 1) % 2 == 0 ? 1 : -1);
  euler.expect(sum == expected,
               [&] { return "alternating face count " + std::to_string(sum) + " != " + std::to_string(expected); });
  out.push_back(euler.done());

  Check joins("join-laws");
  for (FaceId a = 0; a < N; ++a) {
    for (FaceId b = 0; b < N; ++b) {
      const FaceId j = l.join(a, b);
      joins.expect(j == l.join(b, a), [&] { return "join not commutative"; });
      joins.expect(l.leq(a, j) && l.leq(b, j), [&] { return "join is not an upper bound"; });
      for (FaceId h = 0; h < N; ++h) {
        if (l.leq(a, h) && l.leq(b, h))
          joins.expect(l.leq(j, h), [&] { return "join is not the least upper bound"; });
        joins.expect(l.join(l.join(a, b), h) == l.join(a, l.join(b, h)), [&] { return "join not associative"; });
      }
    }
    joins.expect(l.join(a, a) == a, [&] { return "join not idempotent"; });
  }
  out.push_back(joins.done());

  Check galois("galois-closure");
  for (const auto& face : l.faces()) {
    std::vector<std::size_t> facets_on, verts_on;
    for (std::size_t i = 0; i < p.facets().size(); ++i)
      if (std::all_of(face.vertices.begin(), face.vertices.end(),
                      [&](std::size_t v) { return p.facets()[i].value(p.vertices()[v]) == 0; }))
        facets_on.push_back(i);
    for (std::size_t v = 0; v < p.vertices().size(); ++v)
      if (std::all_of(face.facets.begin(), face.facets.end(),
                      [&](std::size_t i) { return p.facets()[i].value(p.vertices()[v]) == 0; }))
        verts_on.push_back(v);
    galois.expect(facets_on == face.facets && verts_on == face.vertices,
                  [&] { return "face " + l.label(face.id) + " is not closed"; });
  }
  out.push_back(galois.done());

  Check modes("star-link-modes");
  Check ast("antistar-closure");
  Check lk("link-identities");
  Check shapes("star-filters-and-complexes");
  for (FaceId a = 0; a < l.top(); ++a) {
    using SetFn = FaceSubset (*)(const FaceLattice&, FaceId, StarMode);
    const std::pair<const char*, SetFn> ops[] = {{"star", star},
                                                 {"closed_star", closed_star},
                                                 {"open_antistar", open_antistar},
                                                 {"closed_antistar", closed_antistar},
                                                 {"link", link}};
    for (const auto& [name, fn] : ops) {
      const auto d = fn(l, a, StarMode::Definitional);
      const auto c = fn(l, a, StarMode::Combinatorial);
      modes.expect(d == c, [&] {
        return std::string(name) + " of " + l.label(a) + ": " + face_list(l, d.members()) + " vs " +
               face_list(l, c.members());
      });
    }
    const auto st = star(l, a), cst = closed_star(l, a), oast = open_antistar(l, a), cast = closed_antistar(l, a),
               lnk = link(l, a);
    ast.expect(!oast.empty() && cast == closure(oast), [&] { return "at " + l.label(a); });
    lk.expect(lnk == cst - st && lnk == cast - oast, [&] { return "at " + l.label(a); });
    shapes.expect(is_order_filter(st) && is_order_filter(oast), [&] { return "filters at " + l.label(a); });
    shapes.expect(is_subcomplex(cst) && is_subcomplex(cast) && is_subcomplex(lnk),
                  [&] { return "subcomplexes at " + l.label(a); });
  }
  out.push_back(modes.done());
  out.push_back(ast.done());
  out.push_back(lk.done());
  out.push_back(shapes.done());

  Check cor("star-in-link");
  for (FaceId a = 0; a < l.top(); ++a)
    for (FaceId b = 0; b < l.top(); ++b) {
      if (a == b || !l.leq(a, b)) continue;
      const auto lnk = link(l, b);
      std::set<FaceId> formula;
      for (FaceId f : lnk.members())
        if (!l.leq(b, l.join(f, a))) formula.insert(f);
      const auto direct = closed_star_within(lnk, a);
      cor.expect(lnk.contains(a) && direct.members() == formula,
                 [&] { return "A=" + l.label(a) + " B=" + l.label(b); });
    }
  out.push_back(cor.done());

  Check sphere("boundary-nerve-sphere");
  const auto h = reduced_homology(boundary_complex(l));
  sphere.expect(is_sphere(h, static_cast<int>(n) - 1), [] { return "nerve of the boundary is not a homology sphere"; });
  out.push_back(sphere.done());
  return out;
}

std::vector<CheckResult> classify_checks(const LatticePolytope& p, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  const FaceLattice l(p);
  const int n = static_cast<int>(p.dim());
  const auto boundary = boundary_complex(l);
  for (ClassKind kind : {ClassKind::Visibility, ClassKind::FrontBack, ClassKind::LowerUpper}) {
    const std::string tag = to_string(kind);
    Check part(tag + "-partition");
    Check signs(tag + "-facet-signs");
    Check balls(tag + "-acyclic-sides");
    Check spheres(tag + "-boundary-sphere");
    Check rays(tag + "-ray-definition");
    for (const auto& x : sample_viewpoints(kind, p, options.viewpoints, options.seed)) {
      const auto c = classify(kind, l, x);
      const std::string at = " at " + format_point(x);
      part.expect((c.filter_side | c.complex_side) == boundary && (c.filter_side & c.complex_side).empty(),
                  [&] { return "sides do not partition the boundary" + at; });
      part.expect(!c.filter_side.empty() && !c.complex_side.empty(), [&] { return "empty side" + at; });
      part.expect(is_order_filter(c.filter_side) && is_subcomplex(c.complex_side),
                  [&] { return "filter/subcomplex property fails" + at; });
      part.expect(c.boundary == (closure(c.filter_side) & c.complex_side), [&] { return "boundary mismatch" + at; });

      for (FaceId f : l.faces_of_dim(p.dim() - 1)) {
        const auto& facet = p.facets()[l.face(f).facets.front()];
        bool expected_filter = false;
        switch (kind) {
          case ClassKind::Visibility:
            expected_filter = facet.value(x) >= 0;
            break;
          case ClassKind::FrontBack:
            expected_filter = facet.value(x) <= 0;
            break;
          case ClassKind::LowerUpper:
            expected_filter = dot(x, to_rational(facet.normal)) <= 0;
            break;
        }
        signs.expect(c.filter_side.contains(f) == expected_filter, [&] { return "facet " + l.label(f) + at; });
      }

      balls.expect(is_acyclic(reduced_homology(c.filter_side)), [&] { return "filter side not acyclic" + at; });
      balls.expect(is_acyclic(reduced_homology(c.complex_side)), [&] { return "complex side not acyclic" + at; });
      balls.expect(is_acyclic(reduced_homology(closure(c.filter_side))),
                   [&] { return "closed filter side not acyclic" + at; });
      if (n >= 2)
        spheres.expect(!c.boundary.empty() && is_sphere(reduced_homology(c.boundary), n - 2),
                       [&] { return "boundary is not a homology sphere" + at; });

      for (FaceId f = 0; f < l.top(); ++f)
        rays.expect(definitional_check(kind, l, x, f, 3, options.seed), [&] { return "face " + l.label(f) + at; });
    }
    out.push_back(part.done());
    out.push_back(signs.done());
    out.push_back(balls.done());
    if (n >= 2) out.push_back(spheres.done());
    out.push_back(rays.done());
  }
  return out;
}

std::vector<CheckResult> ehrhart_checks(const LatticePolytope& p, const SuiteOptions&) {
  std::vector<CheckResult> out;
  const long n = static_cast<long>(p.dim());
  const auto e = ehrhart_polynomial(p);

  Check interp("ehrhart-interpolation");
  for (long k = 0; k <= n + 2; ++k) {
    const Integer count = count_points(p, Integer(k), false);
    interp.expect(e(Rational(k)) == Rational(count), [&] { return "E(" + std::to_string(k) + ") != count"; });
  }
  out.push_back(interp.done());

  Check shape("ehrhart-shape");
  const auto& c = e.coefficients();
  shape.expect(e.degree() == static_cast<std::size_t>(n), [] { return "degree is not n"; });
  shape.expect(!c.empty() && c.front() == 1, [] { return "E(0) != 1"; });
  shape.expect(!c.empty() && c.back() > 0, [] { return "leading coefficient not positive"; });
  for (long k = -(n + 2); k <= n + 2; ++k)
    shape.expect(e(Rational(k)).get_den() == 1, [&] { return "E(" + std::to_string(k) + ") not integral"; });
  out.push_back(shape.done());

  Check recip("reciprocity");
  const auto report = reciprocity_check(p, e, static_cast<int>(n + 2));
  recip.expect(report.holds, [&] {
    for (const auto& row : report.rows)
      if (row.signed_value != Rational(row.interior_count))
        return "j=" + row.j.get_str() + ": (-1)^n E(-j) = " + format_rational(row.signed_value) +
               ", interior count " + row.interior_count.get_str();
    return std::string("mismatch");
  });
  out.push_back(recip.done());

  Check split("splitting-index");
  try {
    const auto s = splitting_index(p, e);
    for (std::size_t i = 0; i < s.roots.size(); ++i)
      split.expect(s.roots[i] == -static_cast<long>(s.roots.size() - i),
                   [] { return "integral roots are not the block -1..-k"; });
  } catch (const ToricError& err) {
    split.expect(false, [&] { return std::string(err.what()); });
  }
  out.push_back(split.done());
  return out;
}

std::vector<CheckResult> cohomology_checks(const LatticePolytope& p, const SuiteOptions& options) {
  std::vector<CheckResult> out;
  const FaceLattice l(p);
  const FaceLattice neg(p.negated());
  const auto orient = orient_faces(l);
  const int n = static_cast<int>(p.dim());
  const std::vector<Ring> rings{Ring::integers(), Ring::rationals(), Ring::prime_field(2), Ring::prime_field(3)};

  Check face("face-complex-cohomology");
  const auto d = face_cochain_complex(l, orient);
  face.expect(d.squares_to_zero(), [] { return "dd != 0"; });
  if (d.squares_to_zero())
    for (const auto& r : rings)
      face.expect(cohomology(d, r).concentrated(0, 1), [&] { return "over " + r.name(); });
  out.push_back(face.done());

  Check oracle("membership-oracle");
  {
    std::vector<Integer> lo(p.dim(), Integer(-3)), hi(p.dim(), Integer(4));
    // The oracle only sees (F, x - k v_F); equal targets need one LP.
    std::map<std::pair<FaceId, IntVector>, bool> cache;
    for (long k = -2; k <= 2; ++k)
      for_each_point(lo, hi, [&](const IntVector& x) {
        for (FaceId f = 0; f < l.size(); ++f) {
          const auto& v = p.vertices()[l.face(f).vertices.front()];
          IntVector target(x);
          for (std::size_t i = 0; i < target.size(); ++i) target[i] -= k * v[i];
          auto key = std::make_pair(f, target);
          auto it = cache.find(key);
          if (it == cache.end()) it = cache.emplace(key, membership_oracle(l, Integer(k), f, x)).first;
          oracle.expect(it->second == twist_membership(l, Integer(k), f, x), [&] {
            return "F=" + l.label(f) + " k=" + std::to_string(k) + " x=" + format_point(x);
          });
        }
      });
  }
  out.push_back(oracle.done());

  Check theorem("global-cohomology-rank");
  Check contributors("contributor-identification");
  Check monotone("twist-monotonicity");
  Check dedup("sign-class-soundness");
  const auto e = ehrhart_polynomial(p);
  ScanOptions scan;
  scan.threads = options.threads;
  scan.seed = options.seed;
  for (long k = -3; k <= 3; ++k) {
    const Rational ek = e(Rational(k));
    const std::size_t expected_rank = Rational(abs(ek)).get_num().get_ui();
    const int degree = k >= 0 ? 0 : n;
    for (const auto& r : rings) {
      const std::string at = " (k=" + std::to_string(k) + ", " + r.name() + ")";
      try {
        const auto g = global_cohomology(l, Integer(k), r, scan);
        theorem.expect(g.shell_certified && g.distant_certified, [&] { return "box not certified" + at; });
        theorem.expect(g.total.concentrated(degree, expected_rank), [&] {
          return "expected rank " + std::to_string(expected_rank) + " in degree " + std::to_string(degree) + at;
        });
        std::set<IntVector> seen;
        for (const auto& c : g.contributors) {
          seen.insert(c.x);
          const bool inside = k >= 0 ? p.dilate_contains(c.x, Integer(k), false)
                                     : p.dilate_contains(c.x, Integer(k), true);
          contributors.expect(inside && c.degree == degree && c.group.free_rank == 1 && c.group.torsion.empty(),
                              [&] { return "unexpected contributor " + format_point(c.x) + at; });
        }
        for_each_point(g.box_lo, g.box_hi, [&](const IntVector& x) {
          const bool inside = k >= 0 ? p.dilate_contains(x, Integer(k), false) : p.dilate_contains(x, Integer(k), true);
          contributors.expect(!inside || seen.count(x), [&] { return "missing contributor " + format_point(x) + at; });
        });
      } catch (const ToricError& err) {
        theorem.expect(false, [&] { return std::string(err.what()) + at; });
      }
    }

    // Upward closure of U(x) and agreement inside each sign class.
    std::vector<Integer> lo, hi;
    for (const auto& [a, b] : p.bounding_box()) {
      const Integer x1 = k * a, x2 = k * b;
      lo.push_back(std::min(x1, x2) - 2);
      hi.push_back(std::max(x1, x2) + 2);
    }
    std::map<std::vector<int>, std::pair<std::set<FaceId>, CohomologyResult>> classes;
    for_each_point(lo, hi, [&](const IntVector& x) {
      const auto u = twist_face_set(l, Integer(k), x);
      monotone.expect(u.members.count(l.top()) == 1, [&] { return "P missing from U(x) at " + format_point(x); });
      for (FaceId f : u.members)
        for (FaceId g = 0; g < l.size(); ++g)
          if (l.leq(f, g))
            monotone.expect(u.members.count(g) == 1, [&] { return "U(x) not upward closed at " + format_point(x); });
      std::vector<int> key;
      for (const auto& facet : p.facets()) key.push_back(sign(facet.value_dilated(x, Integer(k))));
      const auto h = graded_cohomology(l, orient, Integer(k), x, Ring::integers());
      auto [it, inserted] = classes.try_emplace(key, u.members, h);
      if (!inserted)
        dedup.expect(it->second.first == u.members && it->second.second.groups == h.groups,
                     [&] { return "sign class disagreement at " + format_point(x); });
    });
  }
  out.push_back(theorem.done());
  out.push_back(contributors.done());
  out.push_back(monotone.done());
  out.push_back(dedup.done());

  Check cross("classification-crosscheck");
  for (int k : {1, 0, -1}) {
    std::vector<Integer> lo, hi;
    for (const auto& [a, b] : p.bounding_box()) {
      const Integer x1 = k * a, x2 = k * b;
      lo.push_back(std::min(x1, x2) - 2);
      hi.push_back(std::max(x1, x2) + 2);
    }
    for_each_point(lo, hi, [&](const IntVector& x) {
      if (k == 1 && p.contains(x, false)) return;
      if (k == 0 && std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; })) return;
      if (k == -1 && neg.polytope().contains(x, true)) return;
      cross.expect(classification_crosscheck(l, neg, k, x),
                   [&] { return "k=" + std::to_string(k) + " x=" + format_point(x); });
    });
  }
  out.push_back(cross.done());
  return out;
}

std::vector<CheckResult> run_suite(const LatticePolytope& p, Suite suite, const SuiteOptions& options) {
  std::vector<CheckResult> out = input_checks(p);
  if (std::any_of(out.begin(), out.end(), [](const CheckResult& c) { return !c.passed; })) return out;
  auto append = [&out](std::vector<CheckResult> more) {
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  if (suite == Suite::All || suite == Suite::Combinatorics) append(combinatorics_checks(p, options));
  if (suite == Suite::All || suite == Suite::Classify) append(classify_checks(p, options));
  if (suite == Suite::All || suite == Suite::Ehrhart) append(ehrhart_checks(p, options));
  if (suite == Suite::All || suite == Suite::Cohomology) append(cohomology_checks(p, options));
  return out;
}

}  // namespace toric
