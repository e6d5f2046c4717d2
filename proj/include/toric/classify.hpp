/**
 * Partitions of the boundary complex seen from a point or along a direction:
 * visible/invisible, back/front and lower/upper faces.
 *
 * Each partition is decided per facet by an exact sign test; a proper face
 * falls on the "complex" side (Vis, Back, Low) iff one of its facets does.
 * The ray-based definitions survive as a sampled cross-check in
 * definitional_check().
 */
#pragma once

#include <cstdint>
#include <vector>

#include "toric/complex.hpp"

namespace toric {

enum class ClassKind { Visibility, FrontBack, LowerUpper };

const char* to_string(ClassKind kind);

struct Classification {
  ClassKind kind;
  RatVector point;
  FaceSubset filter_side;   // Inv / Front / Up
  FaceSubset complex_side;  // Vis / Back / Low
  FaceSubset boundary;      // closure(filter_side) & complex_side
};

/// Throws ToricError("viewpoint inside polytope") if x lies in P.
Classification classify_visibility(const FaceLattice& l, const RatVector& x);
/// Throws ToricError if x lies in the interior of P. Points on the boundary are allowed.
Classification classify_front_back(const FaceLattice& l, const RatVector& x);
/// Throws ToricError("zero direction") for x = 0.
Classification classify_lower_upper(const FaceLattice& l, const RatVector& x);
Classification classify(ClassKind kind, const FaceLattice& l, const RatVector& x);

/// Checks F's classified side against the ray definitions at sampled points
/// p of F (vertices, barycenter, `samples` random convex combinations) and
/// step lengths lambda in {1/2, 1, 2, 8} refined by halving. A face on the
/// complex side must have every sampled ray point outside P; a face on the
/// filter side needs one sampled ray point inside P.
bool definitional_check(ClassKind kind, const FaceLattice& l, const RatVector& x, FaceId f, int samples,
                        std::uint64_t seed = 1);

/// Deterministic pseudo-random viewpoints valid for `kind`: points outside P
/// (visibility), outside int P including the vertices (front/back), or
/// nonzero directions (lower/upper).
std::vector<RatVector> sample_viewpoints(ClassKind kind, const LatticePolytope& p, std::size_t count,
                                         std::uint64_t seed);

}  // namespace toric
