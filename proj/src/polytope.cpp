#include "toric/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace toric {

Rational Facet::value(const RatVector& x) const { return dot(x, to_rational(normal)) + offset; }

namespace {

std::vector<IntVector> differences(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx) {
  std::vector<IntVector> rows;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    IntVector d(pts[idx[0]].size());
    for (std::size_t c = 0; c < d.size(); ++c) d[c] = pts[idx[i]][c] - pts[idx[0]][c];
    rows.push_back(std::move(d));
  }
  return rows;
}

// Normal of the hyperplane spanned by n points in R^n: signed maximal minors
// of the (n-1) x n difference matrix. Zero when the points are dependent.
IntVector hyperplane_normal(const std::vector<IntVector>& pts, const std::vector<std::size_t>& idx, std::size_t n) {
  const auto rows = differences(pts, idx);
  IntVector normal(n);
  for (std::size_t col = 0; col < n; ++col) {
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 0; r + 1 < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r, cc++) = rows[r][c];
      }
    }
    Rational det = n == 1 ? Rational(1) : determinant(minor);
    normal[col] = (col % 2 == 0) ? det.get_num() : Integer(-det.get_num());
  }
  return primitive(std::move(normal));
}

// Calls f on every k-subset of {0..m-1} in lexicographic order.
template <class F>
void for_each_subset(std::size_t m, std::size_t k, F&& f) {
  if (k > m) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<Facet> enumerate_facets(const std::vector<IntVector>& pts, std::size_t n) {
  std::set<Facet> found;
  for_each_subset(pts.size(), n, [&](const std::vector<std::size_t>& idx) {
    IntVector normal = hyperplane_normal(pts, idx, n);
    if (std::all_of(normal.begin(), normal.end(), [](const Integer& v) { return v == 0; })) return;
    Facet f{normal, -dot(pts[idx[0]], normal)};
    bool any_pos = false, any_neg = false;
    for (const auto& p : pts) {
      const int s = sign(f.value(p));
      any_pos |= s > 0;
      any_neg |= s < 0;
    }
    if (any_pos && any_neg) return;
    if (any_neg) {
      for (auto& v : f.normal) v = -v;
      f.offset = -f.offset;
    }
    found.insert(std::move(f));
  });
  // Descending lexicographic order lists coordinate facets x_i >= 0 first.
  return {found.rbegin(), found.rend()};
}

}  // namespace

LatticePolytope LatticePolytope::build(const std::vector<IntVector>& points) {
  if (points.empty()) throw ToricError("empty point set");
  const std::size_t n = points.front().size();
  if (n == 0) throw ToricError("ambient dimension must be positive");
  for (const auto& p : points)
    if (p.size() != n) throw ToricError("points of mixed dimension");

  std::vector<IntVector> pts(points);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < n + 1)
    throw ToricError("need at least " + std::to_string(n + 1) + " distinct points in dimension " + std::to_string(n));

  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (rank(differences(pts, all)) < n) throw ToricError("degenerate polytope");

  LatticePolytope p;
  p.dim_ = n;
  p.facets_ = enumerate_facets(pts, n);
  for (const auto& x : pts) {
    std::vector<IntVector> tight;
    for (const auto& f : p.facets_)
      if (f.value(x) == 0) tight.push_back(f.normal);
    if (rank(tight) == n)
      p.vertices_.push_back(x);
    else
      p.discarded_.push_back(x);
  }
  return p;
}

LatticePolytope LatticePolytope::assemble_unchecked(std::vector<IntVector> vertices, std::vector<Facet> facets) {
  LatticePolytope p;
  p.dim_ = vertices.empty() ? 0 : vertices.front().size();
  std::sort(vertices.begin(), vertices.end());
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  return p;
}

bool LatticePolytope::contains(const RatVector& x, bool strict) const {
  if (x.size() != dim_) throw ToricError("point dimension does not match polytope");
  for (const auto& f : facets_) {
    const int s = sign(f.value(x));
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

bool LatticePolytope::contains(const IntVector& x, bool strict) const { return dilate_contains(x, 1, strict); }

bool LatticePolytope::dilate_contains(const IntVector& x, const Integer& k, bool strict) const {
  if (x.size() != dim_) throw ToricError("point dimension does not match polytope");
  // For k < 0, x in kP iff -x in |k|P, which flips every inequality.
  const int flip = k < 0 ? -1 : 1;
  for (const auto& f : facets_) {
    const int s = flip * sign(f.value_dilated(x, k));
    if (s < 0 || (strict && s == 0)) return false;
  }
  return true;
}

LatticePolytope LatticePolytope::scaled(const Integer& m) const {
  if (m < 1) throw ToricError("scale factor must be positive");
  std::vector<IntVector> pts = vertices_;
  for (auto& v : pts)
    for (auto& c : v) c *= m;
  return build(pts);
}

LatticePolytope LatticePolytope::negated() const {
  std::vector<IntVector> pts = vertices_;
  for (auto& v : pts)
    for (auto& c : v) c = -c;
  return build(pts);
}

std::vector<std::pair<Integer, Integer>> LatticePolytope::bounding_box() const {
  std::vector<std::pair<Integer, Integer>> box;
  for (std::size_t c = 0; c < dim_; ++c) {
    Integer lo = vertices_.front()[c], hi = lo;
    for (const auto& v : vertices_) {
      lo = std::min(lo, v[c]);
      hi = std::max(hi, v[c]);
    }
    box.emplace_back(lo, hi);
  }
  return box;
}

// ---------------------------------------------------------------------------

FaceLattice::FaceLattice(LatticePolytope polytope) : polytope_(std::move(polytope)) {
  const auto& verts = polytope_.vertices();
  const auto& facets = polytope_.facets();
  const std::size_t n = polytope_.dim();

  // Faces are the non-empty intersections of facet vertex sets.
  std::set<std::vector<std::size_t>> sets;
  std::vector<std::vector<std::size_t>> frontier;
  for (const auto& f : facets) {
    std::vector<std::size_t> on;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (f.value(verts[i]) == 0) on.push_back(i);
    if (!on.empty() && sets.insert(on).second) frontier.push_back(on);
  }
  const std::vector<std::vector<std::size_t>> generators(sets.begin(), sets.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& a : frontier)
      for (const auto& g : generators) {
        std::vector<std::size_t> meet;
        std::set_intersection(a.begin(), a.end(), g.begin(), g.end(), std::back_inserter(meet));
        if (!meet.empty() && sets.insert(meet).second) next.push_back(std::move(meet));
      }
    frontier = std::move(next);
  }
  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  sets.insert(all);

  for (const auto& vs : sets) {
    Face face;
    face.vertices = vs;
    for (std::size_t j = 0; j < facets.size(); ++j)
      if (std::all_of(vs.begin(), vs.end(), [&](std::size_t i) { return facets[j].value(verts[i]) == 0; }))
        face.facets.push_back(j);
    face.dim = rank(differences(verts, vs));
    faces_.push_back(std::move(face));
  }
  std::stable_sort(faces_.begin(), faces_.end(), [](const Face& a, const Face& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.vertices < b.vertices;
  });
  if (faces_.back().dim != n || faces_.back().vertices.size() != verts.size())
    throw ToricError("face lattice has no unique top element");
  for (std::size_t i = 0; i < faces_.size(); ++i) faces_[i].id = i;

  const std::size_t N = faces_.size();
  order_.assign(N * N, false);
  for (std::size_t f = 0; f < N; ++f)
    for (std::size_t g = 0; g < N; ++g)
      order_[f * N + g] = std::includes(faces_[g].vertices.begin(), faces_[g].vertices.end(),
                                        faces_[f].vertices.begin(), faces_[f].vertices.end());
  for (std::size_t f = 0; f < N; ++f)
    for (std::size_t g = 0; g < N; ++g)
      if (f != g && leq(f, g) && faces_[g].dim == faces_[f].dim + 1) hasse_.emplace_back(f, g);

  join_.assign(N * N, 0);
  for (std::size_t f = 0; f < N; ++f)
    for (std::size_t g = f; g < N; ++g) {
      std::vector<std::size_t> un;
      std::set_union(faces_[f].vertices.begin(), faces_[f].vertices.end(), faces_[g].vertices.begin(),
                     faces_[g].vertices.end(), std::back_inserter(un));
      join_[f * N + g] = join_[g * N + f] = closure_of(un);
    }
}

std::vector<FaceId> FaceLattice::faces_of_dim(std::size_t d) const {
  std::vector<FaceId> out;
  for (const auto& f : faces_)
    if (f.dim == d) out.push_back(f.id);
  return out;
}

std::optional<FaceId> FaceLattice::find(const std::vector<std::size_t>& vertex_set) const {
  std::vector<std::size_t> key(vertex_set);
  std::sort(key.begin(), key.end());
  for (const auto& f : faces_)
    if (f.vertices == key) return f.id;
  return std::nullopt;
}

std::optional<FaceId> FaceLattice::find_vertex(const IntVector& point) const {
  const auto& verts = polytope_.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == point) return find({i});
  return std::nullopt;
}

FaceId FaceLattice::closure_of(const std::vector<std::size_t>& vertex_set) const {
  // Smallest face containing the set: intersect every facet through all of it.
  // Faces are sorted by dimension, so the first superset is minimal.
  for (const auto& f : faces_)
    if (std::includes(f.vertices.begin(), f.vertices.end(), vertex_set.begin(), vertex_set.end())) return f.id;
  return top();
}

RatVector FaceLattice::barycenter(FaceId id) const {
  const auto& face = faces_.at(id);
  RatVector c(polytope_.dim(), Rational(0));
  for (std::size_t i : face.vertices)
    for (std::size_t k = 0; k < c.size(); ++k) c[k] += polytope_.vertices()[i][k];
  for (auto& v : c) v /= static_cast<long>(face.vertices.size());
  return c;
}

std::string FaceLattice::label(FaceId id) const {
  if (id == top()) return "P";
  std::ostringstream os;
  os << '[';
  const auto& face = faces_.at(id);
  for (std::size_t i = 0; i < face.vertices.size(); ++i) {
    if (i) os << ',';
    os << format_point(polytope_.vertices()[face.vertices[i]]);
  }
  os << ']';
  return os.str();
}

std::string format_point(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string format_point(const RatVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << format_rational(v[i]);
  os << ')';
  return os.str();
}

}  // namespace toric
