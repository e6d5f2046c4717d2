/**
 * Cohomology of the twists F(k) of the structure sheaf on the projective
 * toric variety of a lattice polytope, computed degree by degree in Z^n.
 *
 * For a lattice point x the graded piece C_x is the subcomplex of the face
 * cochain complex spanned by the faces F with x in C_F + kF, where C_F is
 * the barrier cone of P at F. The global cohomology is the sum of the
 * cohomology of all graded pieces; only finitely many are nonzero.
 */
#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "toric/homology.hpp"

namespace toric {

/// x in C_F + kF, decided by <x, n_i> + k a_i >= 0 for every facet i containing F.
bool twist_membership(const FaceLattice& l, const Integer& k, FaceId f, const IntVector& x);

/// Independent decision of x in C_F + kF from vertices alone. With v the
/// least vertex of F, C_F + kF = k v + cone{p - f : p vertex of P, f vertex of F};
/// cone membership of x - k v is settled exactly through the Farkas
/// alternative, i.e. infeasibility of {y : <g, y> >= 0 for all generators g,
/// <x - k v, y> < 0}, by Fourier-Motzkin.
bool membership_oracle(const FaceLattice& l, const Integer& k, FaceId f, const IntVector& x);

struct TwistFaceSet {
  Integer k;
  IntVector x;
  std::set<FaceId> members;  // always contains P
};

TwistFaceSet twist_face_set(const FaceLattice& l, const Integer& k, const IntVector& x);

struct GradedPiece {
  TwistFaceSet base;
  IntegerChainComplex complex;
};

GradedPiece graded_piece(const FaceLattice& l, const OrientationAssignment& orient, const Integer& k,
                         const IntVector& x);
CohomologyResult graded_cohomology(const FaceLattice& l, const OrientationAssignment& orient, const Integer& k,
                                   const IntVector& x, const Ring& ring);

/// Compares U(x) \ {P} with the face classifications it must match:
///   k = 1,  x outside P:        the invisible faces Inv(x);
///   k = 0,  x != 0:             the upper faces Up(-x);
///   k = -1, x outside int(-P):  the faces F with -F a front face of -P at x.
/// `negated` must be the face lattice of -P. Throws ToricError for other k
/// or for x outside the stated domain.
bool classification_crosscheck(const FaceLattice& l, const FaceLattice& negated, int k, const IntVector& x);
bool classification_crosscheck(const FaceLattice& l, int k, const IntVector& x);

struct Contributor {
  IntVector x;
  int degree = 0;
  DegreeGroup group;
};

struct ScanOptions {
  int margin = 2;
  unsigned threads = 0;             // 0 = hardware concurrency
  std::size_t distant_samples = 32;  // random points far outside the box
  long distant_radius = 50;
  std::uint64_t seed = 20240101;
};

struct GlobalCohomology {
  Integer k;
  Ring ring = Ring::integers();
  CohomologyResult total;                 // degreewise sum over contributors
  std::vector<Contributor> contributors;  // sorted by x
  std::vector<Integer> box_lo, box_hi;
  std::size_t points_scanned = 0;
  std::size_t sign_classes = 0;  // distinct facet-sign vectors among scanned points
  bool shell_certified = false;
  bool distant_certified = false;
};

/// Sums graded cohomology over the bounding box of kP (of {0} when k = 0)
/// inflated by `margin`. Points are grouped by their facet-sign vector,
/// which determines U(x). Throws ToricError("margin too small") if a point
/// on the outer shell of the box or a sampled distant point has nonzero
/// graded cohomology.
GlobalCohomology global_cohomology(const FaceLattice& l, const Integer& k, const Ring& ring,
                                   const ScanOptions& options = {});

}  // namespace toric
