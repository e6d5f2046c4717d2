/**
 * The boundary complex F(P)_0^1 as a poset: order filters, combinatorial
 * closure, stars, links, antistars and nerves.
 *
 * Every set here is a set of face ids of one FaceLattice; no geometric
 * realisation is built.
 */
#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "toric/polytope.hpp"

namespace toric {

/// A subset of the proper non-empty faces of a polytope.
class FaceSubset {
 public:
  FaceSubset(const FaceLattice& lattice, std::set<FaceId> members);
  explicit FaceSubset(const FaceLattice& lattice) : lattice_(&lattice) {}

  const FaceLattice& lattice() const { return *lattice_; }
  const std::set<FaceId>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(FaceId f) const { return members_.count(f) != 0; }

  FaceSubset operator|(const FaceSubset& other) const;
  FaceSubset operator&(const FaceSubset& other) const;
  FaceSubset operator-(const FaceSubset& other) const;
  friend bool operator==(const FaceSubset& a, const FaceSubset& b) { return a.members_ == b.members_; }

 private:
  const FaceLattice* lattice_;
  std::set<FaceId> members_;
};

/// All faces except P.
FaceSubset boundary_complex(const FaceLattice& lattice);
/// Members together with all their non-empty faces.
FaceSubset closure(const FaceSubset& s);
/// Upward closed among proper faces.
bool is_order_filter(const FaceSubset& s);
/// Fixed by closure.
bool is_subcomplex(const FaceSubset& s);

enum class StarMode { Definitional, Combinatorial };

/// Star-type sets of a proper face A inside F(P)_0^1. Definitional mode
/// follows the poset definitions; combinatorial mode decides membership by
/// joins (F v A = P or not). Throws ToricError if A = P or A is not a face id.
FaceSubset star(const FaceLattice& l, FaceId a, StarMode mode = StarMode::Definitional);
FaceSubset closed_star(const FaceLattice& l, FaceId a, StarMode mode = StarMode::Definitional);
FaceSubset open_antistar(const FaceLattice& l, FaceId a, StarMode mode = StarMode::Definitional);
FaceSubset closed_antistar(const FaceLattice& l, FaceId a, StarMode mode = StarMode::Definitional);
FaceSubset link(const FaceLattice& l, FaceId a, StarMode mode = StarMode::Definitional);

/// Closed star of A computed inside the complex `within` (e.g. a link).
FaceSubset closed_star_within(const FaceSubset& within, FaceId a);

/// Order complex: simplices are strictly increasing chains F0 < ... < Fk.
struct NerveComplex {
  std::vector<FaceId> vertices;
  /// simplices[k] lists the k-simplices as id tuples sorted increasingly,
  /// which is also the chain order since ids extend the face order.
  std::vector<std::vector<std::vector<FaceId>>> simplices;

  std::size_t dimension() const { return simplices.empty() ? 0 : simplices.size() - 1; }
  std::size_t count() const;
};

/// Throws ToricError for an empty subset.
NerveComplex nerve(const FaceSubset& s);

}  // namespace toric
