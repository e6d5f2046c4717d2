/**
 * Integer (co)chain complexes: the cellular cochain complex of a polytope
 * built from face orientations and incidence numbers, simplicial chain
 * complexes of nerves, and their (co)homology over Z, Q and Z/p.
 */
#pragma once

#include <cstddef>
#include <vector>

#include "toric/complex.hpp"
#include "toric/exact.hpp"

namespace toric {

/// Per face an integer basis of its direction space; vertices get the empty basis.
struct OrientationAssignment {
  std::vector<std::vector<IntVector>> bases;
};

/// Basis from Hermite reduction of the differences v - v0, v0 the
/// lexicographically least vertex of the face.
OrientationAssignment orient_faces(const FaceLattice& l);

/// Incidence number [F : G] in {+1, -1} for a covering pair F < G: the sign
/// of the determinant of [basis(F) | w] expressed in basis(G), where w points
/// from the barycenter of F to the barycenter of G. Throws ToricError if the
/// pair is not a covering pair.
int incidence(const FaceLattice& l, const OrientationAssignment& orient, FaceId f, FaceId g);

/// Graded free modules with integer differentials. A cochain complex has
/// maps of degree +1, a chain complex maps of degree -1. Degrees run from
/// lowest_degree to lowest_degree + ranks.size() - 1.
struct IntegerChainComplex {
  enum class Direction { Cochain, Chain };

  Direction direction = Direction::Cochain;
  int lowest_degree = 0;
  /// basis[i] lists the labels (face ids or simplex tuples) of degree lowest_degree + i.
  std::vector<std::vector<std::vector<std::size_t>>> basis;
  /// maps[i] is the differential leaving degree lowest_degree + i, with
  /// rows indexed by the target basis. Maps leaving the range have zero rows.
  std::vector<IntMatrix> maps;

  int highest_degree() const { return lowest_degree + static_cast<int>(basis.size()) - 1; }
  std::size_t rank(int degree) const;
  /// Differential leaving `degree`, or an empty-row matrix at the range end.
  IntMatrix outgoing(int degree) const;
  /// Differential arriving at `degree`.
  IntMatrix incoming(int degree) const;
  /// All composites of consecutive differentials vanish.
  bool squares_to_zero() const;
};

struct DegreeGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  // elementary divisors > 1, only over Z

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  friend bool operator==(const DegreeGroup&, const DegreeGroup&) = default;
};

struct CohomologyResult {
  Ring ring = Ring::integers();
  int lowest_degree = 0;
  std::vector<DegreeGroup> groups;

  const DegreeGroup& at(int degree) const;
  bool is_zero() const;
  bool is_free() const;
  std::size_t total_rank() const;
  /// Free of rank `rank` in `degree`, zero elsewhere.
  bool concentrated(int degree, std::size_t rank) const;
};

/// Cochain complex with one generator per face of dimension j in degree j
/// (P included in degree n), differentials given by incidence numbers.
IntegerChainComplex face_cochain_complex(const FaceLattice& l, const OrientationAssignment& orient);

/// Subcomplex of the face cochain complex spanned by the faces with keep[id].
/// The kept set must be upward closed for the result to be a subcomplex.
IntegerChainComplex face_cochain_subcomplex(const FaceLattice& l, const OrientationAssignment& orient,
                                            const std::vector<bool>& keep);

/// Simplicial chain complex of a nerve; `reduced` adds the augmentation to degree -1.
IntegerChainComplex simplicial_chain_complex(const NerveComplex& n, bool reduced);

/// Homology at every degree of the complex (cohomology for cochain
/// complexes). Throws ToricError if the differentials do not square to zero.
CohomologyResult cohomology(const IntegerChainComplex& c, const Ring& ring);

/// Reduced homology of the nerve of a non-empty face set.
CohomologyResult reduced_homology(const FaceSubset& s, const Ring& ring = Ring::integers());

/// Reduced homology of a point.
bool is_acyclic(const CohomologyResult& reduced);
/// Reduced homology of the sphere S^d.
bool is_sphere(const CohomologyResult& reduced, int d);

}  // namespace toric
