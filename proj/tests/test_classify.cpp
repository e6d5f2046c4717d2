#include <doctest.h>

#include "corpus.hpp"
#include "toric/classify.hpp"
#include "toric/homology.hpp"

using namespace toric;
using corpus::face;
using corpus::rv;

namespace {

using Set = std::set<FaceId>;

// Complex side iff a tiny step from the barycenter in the kind's direction leaves P.
bool leaves_polytope(ClassKind kind, const FaceLattice& l, const RatVector& x, FaceId f) {
  const RatVector p = l.barycenter(f);
  const Rational eps(1, 1 << 20);
  RatVector q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    switch (kind) {
      case ClassKind::Visibility:
        q[i] = p[i] + eps * (x[i] - p[i]);
        break;
      case ClassKind::FrontBack:
        q[i] = p[i] + eps * (p[i] - x[i]);
        break;
      case ClassKind::LowerUpper:
        q[i] = p[i] - eps * x[i];
        break;
    }
  }
  return !l.polytope().contains(q, false);
}

}  // namespace

TEST_CASE("visibility in the square and segment") {
  const FaceLattice l(corpus::sq());
  const FaceId o = face(l, {{0, 0}}), a = face(l, {{1, 0}}), b = face(l, {{0, 1}}), c = face(l, {{1, 1}});
  const FaceId bottom = face(l, {{0, 0}, {1, 0}}), left = face(l, {{0, 0}, {0, 1}});
  const FaceId top = face(l, {{0, 1}, {1, 1}}), right = face(l, {{1, 0}, {1, 1}});

  const auto v = classify_visibility(l, rv({"2", "2"}));
  CHECK(v.complex_side.members() == Set{right, top, a, c, b});
  CHECK(v.filter_side.members() == Set{bottom, left, o});
  CHECK(v.boundary.members() == Set{a, b});
  CHECK(classify_visibility(l, rv({"1/2", "-3"})).complex_side.members() == Set{bottom, o, a});
  CHECK_THROWS_AS(classify_visibility(l, rv({"1/2", "1/2"})), ToricError);
  CHECK_THROWS_AS(classify_visibility(l, rv({"1", "1"})), ToricError);

  const FaceLattice s(corpus::seg());
  const auto sv = classify_visibility(s, rv({"5"}));
  CHECK(sv.complex_side.members() == Set{face(s, {{1}})});
  CHECK(sv.filter_side.members() == Set{face(s, {{0}})});
}

TEST_CASE("front and back faces") {
  const FaceLattice l(corpus::sq());
  const FaceId o = face(l, {{0, 0}}), a = face(l, {{1, 0}}), b = face(l, {{0, 1}}), c = face(l, {{1, 1}});
  const FaceId bottom = face(l, {{0, 0}, {1, 0}}), left = face(l, {{0, 0}, {0, 1}});
  const FaceId top = face(l, {{0, 1}, {1, 1}}), right = face(l, {{1, 0}, {1, 1}});

  const auto f1 = classify_front_back(l, rv({"1/2", "-1"}));
  CHECK(f1.complex_side.members() == Set{top, left, right, o, a, b, c});
  CHECK(f1.filter_side.members() == Set{bottom});

  // At a vertex the two facets through it are front; every face meeting top or right is back.
  const auto f2 = classify_front_back(l, rv({"0", "0"}));
  CHECK(f2.complex_side.members() == Set{top, right, a, b, c});
  CHECK(f2.filter_side.members() == Set{bottom, left, o});
  CHECK_THROWS_AS(classify_front_back(l, rv({"1/2", "1/2"})), ToricError);

  const FaceLattice s(corpus::seg());
  const auto sf = classify_front_back(s, rv({"-2"}));
  CHECK(sf.complex_side.members() == Set{face(s, {{1}})});
  CHECK(sf.filter_side.members() == Set{face(s, {{0}})});
}

TEST_CASE("lower and upper faces") {
  const FaceLattice l(corpus::sq());
  const FaceId o = face(l, {{0, 0}}), a = face(l, {{1, 0}}), b = face(l, {{0, 1}}), c = face(l, {{1, 1}});
  const FaceId bottom = face(l, {{0, 0}, {1, 0}}), left = face(l, {{0, 0}, {0, 1}});
  const FaceId top = face(l, {{0, 1}, {1, 1}}), right = face(l, {{1, 0}, {1, 1}});

  const auto u1 = classify_lower_upper(l, rv({"0", "1"}));
  CHECK(u1.complex_side.members() == Set{bottom, o, a});
  CHECK(u1.filter_side.members() == Set{left, right, top, b, c});
  const auto u2 = classify_lower_upper(l, rv({"1", "1"}));
  CHECK(u2.complex_side.members() == Set{bottom, left, o, a, b});
  CHECK(u2.filter_side.members() == Set{top, right, c});
  CHECK_THROWS_AS(classify_lower_upper(l, rv({"0", "0"})), ToricError);

  const FaceLattice s(corpus::seg());
  const auto su = classify_lower_upper(s, rv({"1"}));
  CHECK(su.complex_side.members() == Set{face(s, {{0}})});
  CHECK(su.filter_side.members() == Set{face(s, {{1}})});
}

TEST_CASE("definitional checks on the documented cases") {
  const FaceLattice l(corpus::sq());
  CHECK(definitional_check(ClassKind::Visibility, l, rv({"2", "2"}), face(l, {{1, 0}, {1, 1}}), 4));
  CHECK(definitional_check(ClassKind::Visibility, l, rv({"2", "2"}), face(l, {{0, 0}, {1, 0}}), 4));
  const FaceLattice s(corpus::seg());
  CHECK(definitional_check(ClassKind::LowerUpper, s, rv({"1"}), face(s, {{0}}), 4));
}

TEST_CASE("classification properties at sampled viewpoints") {
  for (const auto& [name, p] : corpus::all()) {
    CAPTURE(name);
    const FaceLattice l(p);
    const auto boundary = boundary_complex(l);
    const int n = static_cast<int>(p.dim());
    for (ClassKind kind : {ClassKind::Visibility, ClassKind::FrontBack, ClassKind::LowerUpper}) {
      const auto points = sample_viewpoints(kind, p, 8, 3);
      CHECK(points.size() >= 8);
      for (const auto& x : points) {
        CAPTURE(format_point(x));
        const auto c = classify(kind, l, x);
        CHECK((c.filter_side | c.complex_side) == boundary);
        CHECK((c.filter_side & c.complex_side).empty());
        CHECK(is_order_filter(c.filter_side));
        CHECK(is_subcomplex(c.complex_side));
        for (FaceId f = 0; f < l.top(); ++f) {
          CHECK(c.complex_side.contains(f) == leaves_polytope(kind, l, x, f));
          CHECK(definitional_check(kind, l, x, f, 2, 5));
        }
        CHECK(is_acyclic(reduced_homology(c.filter_side)));
        CHECK(is_acyclic(reduced_homology(c.complex_side)));
        if (n >= 2) CHECK(is_sphere(reduced_homology(c.boundary), n - 2));
      }
    }
  }
}

TEST_CASE("sampled viewpoints respect each kind's domain and are deterministic") {
  const auto p = corpus::tri();
  for (ClassKind kind : {ClassKind::Visibility, ClassKind::FrontBack, ClassKind::LowerUpper}) {
    const auto a = sample_viewpoints(kind, p, 10, 42);
    CHECK(a == sample_viewpoints(kind, p, 10, 42));
    for (const auto& x : a) {
      if (kind == ClassKind::Visibility) CHECK_FALSE(p.contains(x, false));
      if (kind == ClassKind::FrontBack) CHECK_FALSE(p.contains(x, true));
      if (kind == ClassKind::LowerUpper) CHECK(std::any_of(x.begin(), x.end(), [](const Rational& c) { return c != 0; }));
    }
  }
}
