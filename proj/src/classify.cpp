#include "toric/classify.hpp"

#include <algorithm>
#include <random>

namespace toric {

const char* to_string(ClassKind kind) {
  switch (kind) {
    case ClassKind::Visibility:
      return "visibility";
    case ClassKind::FrontBack:
      return "frontback";
    case ClassKind::LowerUpper:
      return "lowerupper";
  }
  return "?";
}

namespace {

// Whether facet i is on the complex side for this kind and point.
bool facet_marked(ClassKind kind, const Facet& facet, const RatVector& x) {
  switch (kind) {
    case ClassKind::Visibility:
      return facet.value(x) < 0;
    case ClassKind::FrontBack:
      return facet.value(x) > 0;
    case ClassKind::LowerUpper:
      return dot(x, to_rational(facet.normal)) > 0;
  }
  return false;
}

Classification assemble(ClassKind kind, const FaceLattice& l, const RatVector& x) {
  const auto& facets = l.polytope().facets();
  std::vector<bool> marked(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) marked[i] = facet_marked(kind, facets[i], x);

  std::set<FaceId> cx, flt;
  for (FaceId f = 0; f < l.top(); ++f) {
    const auto& fs = l.face(f).facets;
    if (std::any_of(fs.begin(), fs.end(), [&](std::size_t i) { return marked[i]; }))
      cx.insert(f);
    else
      flt.insert(f);
  }
  FaceSubset filter(l, std::move(flt));
  FaceSubset complex(l, std::move(cx));
  FaceSubset boundary = closure(filter) & complex;
  return Classification{kind, x, std::move(filter), std::move(complex), std::move(boundary)};
}

void require_dim(const FaceLattice& l, const RatVector& x) {
  if (x.size() != l.polytope().dim()) throw ToricError("point dimension does not match polytope");
}

}  // namespace

Classification classify_visibility(const FaceLattice& l, const RatVector& x) {
  require_dim(l, x);
  if (l.polytope().contains(x, false)) throw ToricError("viewpoint inside polytope");
  return assemble(ClassKind::Visibility, l, x);
}

Classification classify_front_back(const FaceLattice& l, const RatVector& x) {
  require_dim(l, x);
  if (l.polytope().contains(x, true)) throw ToricError("viewpoint in the interior of the polytope");
  return assemble(ClassKind::FrontBack, l, x);
}

Classification classify_lower_upper(const FaceLattice& l, const RatVector& x) {
  require_dim(l, x);
  if (std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; }))
    throw ToricError("zero direction");
  return assemble(ClassKind::LowerUpper, l, x);
}

Classification classify(ClassKind kind, const FaceLattice& l, const RatVector& x) {
  switch (kind) {
    case ClassKind::Visibility:
      return classify_visibility(l, x);
    case ClassKind::FrontBack:
      return classify_front_back(l, x);
    case ClassKind::LowerUpper:
      return classify_lower_upper(l, x);
  }
  throw ToricError("unknown classification kind");
}

namespace {

RatVector ray_point(ClassKind kind, const RatVector& p, const RatVector& x, const Rational& lambda) {
  RatVector q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    switch (kind) {
      case ClassKind::Visibility:
        q[i] = p[i] + lambda * (x[i] - p[i]);
        break;
      case ClassKind::FrontBack:
        q[i] = p[i] + lambda * (p[i] - x[i]);
        break;
      case ClassKind::LowerUpper:
        q[i] = p[i] - lambda * x[i];
        break;
    }
  }
  return q;
}

std::vector<Rational> step_lengths() {
  std::vector<Rational> steps{Rational(1, 2), Rational(1), Rational(2), Rational(8)};
  Rational s(1, 4);
  for (int j = 0; j < 40; ++j, s /= 2) steps.push_back(s);
  return steps;
}

}  // namespace

bool definitional_check(ClassKind kind, const FaceLattice& l, const RatVector& x, FaceId f, int samples,
                        std::uint64_t seed) {
  if (!l.is_proper(f)) throw ToricError("definitional check needs a proper face");
  const Classification c = classify(kind, l, x);
  const auto& poly = l.polytope();
  const auto& face = l.face(f);

  std::vector<RatVector> points;
  for (std::size_t i : face.vertices) points.push_back(to_rational(poly.vertices()[i]));
  points.push_back(l.barycenter(f));
  std::mt19937_64 rng(seed + f);
  std::uniform_int_distribution<int> weight(1, 16);
  for (int s = 0; s < samples; ++s) {
    RatVector p(poly.dim(), Rational(0));
    long total = 0;
    for (std::size_t i : face.vertices) {
      const int w = weight(rng);
      total += w;
      for (std::size_t k = 0; k < p.size(); ++k) p[k] += w * poly.vertices()[i][k];
    }
    for (auto& v : p) v /= total;
    points.push_back(std::move(p));
  }

  const auto steps = step_lengths();
  const bool on_complex_side = c.complex_side.contains(f);
  bool any_inside = false;
  for (const auto& p : points)
    for (const auto& lambda : steps)
      if (poly.contains(ray_point(kind, p, x, lambda), false)) any_inside = true;
  return on_complex_side ? !any_inside : any_inside;
}

std::vector<RatVector> sample_viewpoints(ClassKind kind, const LatticePolytope& p, std::size_t count,
                                         std::uint64_t seed) {
  std::vector<RatVector> out;
  if (kind == ClassKind::FrontBack)
    for (const auto& v : p.vertices()) {
      if (out.size() >= count) break;
      out.push_back(to_rational(v));
    }
  std::mt19937_64 rng(seed);
  const auto box = p.bounding_box();
  std::uniform_int_distribution<int> den_dist(1, 3);
  while (out.size() < count) {
    RatVector x(p.dim());
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int den = den_dist(rng);
      long lo = (kind == ClassKind::LowerUpper) ? -3 : box[i].first.get_si() - 2;
      long hi = (kind == ClassKind::LowerUpper) ? 3 : box[i].second.get_si() + 2;
      std::uniform_int_distribution<long> num(lo * den, hi * den);
      x[i] = Rational(num(rng), den);
      x[i].canonicalize();
    }
    bool ok = false;
    switch (kind) {
      case ClassKind::Visibility:
        ok = !p.contains(x, false);
        break;
      case ClassKind::FrontBack:
        ok = !p.contains(x, true);
        break;
      case ClassKind::LowerUpper:
        ok = std::any_of(x.begin(), x.end(), [](const Rational& v) { return v != 0; });
        break;
    }
    if (ok && std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace toric
