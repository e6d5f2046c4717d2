#include "toric/sheaf.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <random>
#include <thread>
#include <tuple>

#include "toric/classify.hpp"

namespace toric {

bool twist_membership(const FaceLattice& l, const Integer& k, FaceId f, const IntVector& x) {
  const auto& facets = l.polytope().facets();
  for (std::size_t i : l.face(f).facets)
    if (facets[i].value_dilated(x, k) < 0) return false;
  return true;
}

bool membership_oracle(const FaceLattice& l, const Integer& k, FaceId f, const IntVector& x) {
  const auto& verts = l.polytope().vertices();
  const auto& face = l.face(f);
  const std::size_t n = l.polytope().dim();
  if (x.size() != n) throw ToricError("point dimension does not match polytope");

  const IntVector& v = verts[face.vertices.front()];
  RatVector target(n);
  for (std::size_t i = 0; i < n; ++i) target[i] = x[i] - k * v[i];

  std::set<IntVector> generators;
  for (const auto& p : verts)
    for (std::size_t fi : face.vertices) {
      IntVector g(n);
      for (std::size_t i = 0; i < n; ++i) g[i] = p[i] - verts[fi][i];
      if (std::any_of(g.begin(), g.end(), [](const Integer& c) { return c != 0; })) generators.insert(std::move(g));
    }

  std::vector<LinearConstraint> separating;
  for (const auto& g : generators) separating.push_back({to_rational(g), Rational(0), Relation::GreaterEqual});
  RatVector neg(n);
  for (std::size_t i = 0; i < n; ++i) neg[i] = -target[i];
  separating.push_back({std::move(neg), Rational(0), Relation::Greater});
  return !lp_feasible(separating);
}

TwistFaceSet twist_face_set(const FaceLattice& l, const Integer& k, const IntVector& x) {
  TwistFaceSet s{k, x, {}};
  for (FaceId f = 0; f < l.size(); ++f)
    if (twist_membership(l, k, f, x)) s.members.insert(f);
  return s;
}

GradedPiece graded_piece(const FaceLattice& l, const OrientationAssignment& orient, const Integer& k,
                         const IntVector& x) {
  TwistFaceSet base = twist_face_set(l, k, x);
  std::vector<bool> keep(l.size(), false);
  for (FaceId f : base.members) keep[f] = true;
  IntegerChainComplex complex = face_cochain_subcomplex(l, orient, keep);
  return GradedPiece{std::move(base), std::move(complex)};
}

CohomologyResult graded_cohomology(const FaceLattice& l, const OrientationAssignment& orient, const Integer& k,
                                   const IntVector& x, const Ring& ring) {
  return cohomology(graded_piece(l, orient, k, x).complex, ring);
}

bool classification_crosscheck(const FaceLattice& l, const FaceLattice& negated, int k, const IntVector& x) {
  const LatticePolytope& p = l.polytope();
  const RatVector xr = to_rational(x);
  const TwistFaceSet u = twist_face_set(l, Integer(k), x);
  std::set<FaceId> proper(u.members.begin(), u.members.end());
  proper.erase(l.top());

  switch (k) {
    case 1: {
      if (p.contains(x, false)) throw ToricError("crosscheck at k = 1 needs x outside P");
      return classify_visibility(l, xr).filter_side.members() == proper;
    }
    case 0: {
      if (std::all_of(x.begin(), x.end(), [](const Integer& c) { return c == 0; }))
        throw ToricError("crosscheck at k = 0 needs x != 0");
      RatVector minus(xr);
      for (auto& c : minus) c = -c;
      return classify_lower_upper(l, minus).filter_side.members() == proper;
    }
    case -1: {
      if (negated.polytope().contains(x, true)) throw ToricError("crosscheck at k = -1 needs x outside int(-P)");
      const auto front = classify_front_back(negated, xr).filter_side;
      const auto& nverts = negated.polytope().vertices();
      std::set<FaceId> mapped;
      for (FaceId f : proper) {
        std::vector<std::size_t> idx;
        for (std::size_t vi : l.face(f).vertices) {
          IntVector mv = p.vertices()[vi];
          for (auto& c : mv) c = -c;
          auto it = std::find(nverts.begin(), nverts.end(), mv);
          if (it == nverts.end()) throw ToricError("lattice passed as -P does not match");
          idx.push_back(static_cast<std::size_t>(it - nverts.begin()));
        }
        auto g = negated.find(idx);
        if (!g) throw ToricError("lattice passed as -P does not match");
        mapped.insert(*g);
      }
      return front.members() == mapped;
    }
    default:
      throw ToricError("classification crosscheck is defined for k in {1, 0, -1}");
  }
}

bool classification_crosscheck(const FaceLattice& l, int k, const IntVector& x) {
  const FaceLattice negated(l.polytope().negated());
  return classification_crosscheck(l, negated, k, x);
}

namespace {

using SignKey = std::vector<int>;

SignKey sign_key(const LatticePolytope& p, const Integer& k, const IntVector& x) {
  SignKey key;
  key.reserve(p.facets().size());
  for (const auto& f : p.facets()) key.push_back(sign(f.value_dilated(x, k)));
  return key;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&, t] {
        try {
          for (std::size_t i = next++; i < count; i = next++) body(i);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

GlobalCohomology global_cohomology(const FaceLattice& l, const Integer& k, const Ring& ring,
                                   const ScanOptions& options) {
  if (options.margin < 0) throw ToricError("scan margin must be non-negative");
  const LatticePolytope& p = l.polytope();
  const std::size_t n = p.dim();
  const OrientationAssignment orient = orient_faces(l);

  GlobalCohomology out;
  out.k = k;
  out.ring = ring;
  const auto box = p.bounding_box();
  for (std::size_t i = 0; i < n; ++i) {
    const Integer a = k * box[i].first, b = k * box[i].second;
    out.box_lo.push_back(std::min(a, b) - options.margin);
    out.box_hi.push_back(std::max(a, b) + options.margin);
  }

  // Group the box by sign vector; each class is computed once.
  std::map<SignKey, std::size_t> class_of;
  std::vector<IntVector> representative;
  std::vector<std::pair<IntVector, std::size_t>> points;
  IntVector x = out.box_lo;
  for (;;) {
    SignKey key = sign_key(p, k, x);
    auto [it, inserted] = class_of.try_emplace(std::move(key), representative.size());
    if (inserted) representative.push_back(x);
    points.emplace_back(x, it->second);
    std::size_t i = 0;
    while (i < n && x[i] == out.box_hi[i]) x[i] = out.box_lo[i], ++i;
    if (i == n) break;
    ++x[i];
  }
  out.points_scanned = points.size();
  out.sign_classes = representative.size();

  std::vector<CohomologyResult> per_class(representative.size());
  parallel_for(representative.size(), options.threads, [&](std::size_t c) {
    per_class[c] = graded_cohomology(l, orient, k, representative[c], ring);
  });

  out.total.ring = ring;
  out.total.lowest_degree = 0;
  out.total.groups.assign(n + 1, DegreeGroup{});
  out.shell_certified = true;
  for (const auto& [pt, c] : points) {
    const CohomologyResult& h = per_class[c];
    if (h.is_zero()) continue;
    bool on_shell = false;
    for (std::size_t i = 0; i < n; ++i) on_shell |= pt[i] == out.box_lo[i] || pt[i] == out.box_hi[i];
    if (on_shell) {
      out.shell_certified = false;
      throw ToricError("margin too small: " + format_point(pt) + " on the scan shell has nonzero cohomology");
    }
    for (std::size_t g = 0; g < h.groups.size(); ++g) {
      if (h.groups[g].is_zero()) continue;
      const int degree = h.lowest_degree + static_cast<int>(g);
      out.contributors.push_back(Contributor{pt, degree, h.groups[g]});
      auto& total = out.total.groups.at(static_cast<std::size_t>(degree));
      total.free_rank += h.groups[g].free_rank;
      total.torsion.insert(total.torsion.end(), h.groups[g].torsion.begin(), h.groups[g].torsion.end());
    }
  }
  std::sort(out.contributors.begin(), out.contributors.end(),
            [](const Contributor& a, const Contributor& b) { return std::tie(a.x, a.degree) < std::tie(b.x, b.degree); });

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> coord(-options.distant_radius, options.distant_radius);
  std::size_t checked = 0;
  for (std::size_t attempt = 0; checked < options.distant_samples && attempt < 100 * options.distant_samples + 100;
       ++attempt) {
    IntVector y(n);
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      y[i] = coord(rng);
      inside = inside && y[i] >= out.box_lo[i] && y[i] <= out.box_hi[i];
    }
    if (inside) continue;
    ++checked;
    if (!graded_cohomology(l, orient, k, y, ring).is_zero())
      throw ToricError("margin too small: distant point " + format_point(y) + " has nonzero cohomology");
  }
  out.distant_certified = checked == options.distant_samples;
  return out;
}

}  // namespace toric
