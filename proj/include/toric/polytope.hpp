/**
 * Full-dimensional lattice polytopes and their face lattices.
 *
 * A polytope is given by its vertices; facets are found by brute force over
 * vertex subsets spanning a hyperplane, which is adequate for the small
 * polytopes (a handful of vertices in dimension <= 4) this library targets.
 * Faces are identified with their vertex sets. The empty face is never
 * represented.
 */
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "toric/exact.hpp"

namespace toric {

/// Inequality <x, normal> + offset >= 0 with primitive inward normal.
struct Facet {
  IntVector normal;
  Integer offset;

  Integer value(const IntVector& x) const { return dot(x, normal) + offset; }
  Rational value(const RatVector& x) const;
  /// <x, normal> + k * offset, the inequality of the dilate kP.
  Integer value_dilated(const IntVector& x, const Integer& k) const { return dot(x, normal) + k * offset; }

  friend bool operator==(const Facet&, const Facet&) = default;
  friend bool operator<(const Facet& a, const Facet& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  }
};

class LatticePolytope {
 public:
  /// Convex hull of `points`. Points that are not vertices are dropped and
  /// kept in discarded_points(). Throws ToricError for fewer than n + 1
  /// distinct points or when the points do not span R^n ("degenerate polytope").
  static LatticePolytope build(const std::vector<IntVector>& points);

  /// Stores the given vertices and facets without any validation. Only meant
  /// for feeding hand-edited data into the verification suites.
  static LatticePolytope assemble_unchecked(std::vector<IntVector> vertices, std::vector<Facet> facets);

  std::size_t dim() const { return dim_; }
  const std::vector<IntVector>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }
  const std::vector<IntVector>& discarded_points() const { return discarded_; }

  bool contains(const RatVector& x, bool strict) const;
  bool contains(const IntVector& x, bool strict) const;
  /// Membership of x in the dilate kP (k may be negative or zero).
  bool dilate_contains(const IntVector& x, const Integer& k, bool strict) const;

  /// The polytope m * P for m >= 1, built from scaled vertices.
  LatticePolytope scaled(const Integer& m) const;
  /// The polytope -P.
  LatticePolytope negated() const;

  /// Per coordinate [min, max] over the vertices.
  std::vector<std::pair<Integer, Integer>> bounding_box() const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> vertices_;
  std::vector<Facet> facets_;
  std::vector<IntVector> discarded_;
};

using FaceId = std::size_t;

struct Face {
  FaceId id = 0;
  std::vector<std::size_t> vertices;  // sorted vertex indices
  std::vector<std::size_t> facets;    // sorted indices of facets containing the face
  std::size_t dim = 0;
};

/// The lattice F(P) of non-empty faces ordered by inclusion.
///
/// Ids are assigned in order of increasing dimension (then lexicographically
/// by vertex set), so that id order is a linear extension of the face order
/// and P itself carries the largest id.
class FaceLattice {
 public:
  explicit FaceLattice(LatticePolytope polytope);

  const LatticePolytope& polytope() const { return polytope_; }
  std::size_t size() const { return faces_.size(); }
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(FaceId id) const { return faces_.at(id); }
  FaceId top() const { return faces_.size() - 1; }
  bool is_proper(FaceId id) const { return id < top(); }

  /// F <= G (vertex set inclusion).
  bool leq(FaceId f, FaceId g) const { return order_[f * faces_.size() + g]; }
  /// Smallest face containing both.
  FaceId join(FaceId f, FaceId g) const { return join_[f * faces_.size() + g]; }
  /// Covering pairs (F, G) with F < G and dim G = dim F + 1.
  const std::vector<std::pair<FaceId, FaceId>>& hasse() const { return hasse_; }

  std::vector<FaceId> faces_of_dim(std::size_t d) const;
  std::optional<FaceId> find(const std::vector<std::size_t>& vertex_set) const;
  /// Face whose only vertex has the given coordinates.
  std::optional<FaceId> find_vertex(const IntVector& point) const;
  /// Minimal face containing the given vertex indices.
  FaceId closure_of(const std::vector<std::size_t>& vertex_set) const;

  /// Average of the face's vertices.
  RatVector barycenter(FaceId id) const;
  /// Human-readable label, e.g. "[(0,0),(1,0)]".
  std::string label(FaceId id) const;

 private:
  LatticePolytope polytope_;
  std::vector<Face> faces_;
  std::vector<bool> order_;
  std::vector<FaceId> join_;
  std::vector<std::pair<FaceId, FaceId>> hasse_;
};

std::string format_point(const IntVector& v);
std::string format_point(const RatVector& v);

}  // namespace toric
