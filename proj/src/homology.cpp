#include "toric/homology.hpp"

#include <algorithm>
#include <map>

namespace toric {

OrientationAssignment orient_faces(const FaceLattice& l) {
  const auto& verts = l.polytope().vertices();
  OrientationAssignment out;
  out.bases.reserve(l.size());
  for (const auto& face : l.faces()) {
    // Vertices are stored in lexicographic order, so the first index is the least vertex.
    const IntVector& base = verts[face.vertices.front()];
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < face.vertices.size(); ++i) {
      IntVector d(base.size());
      for (std::size_t c = 0; c < d.size(); ++c) d[c] = verts[face.vertices[i]][c] - base[c];
      diffs.push_back(std::move(d));
    }
    auto basis = hermite_rows(std::move(diffs));
    if (basis.size() != face.dim) throw ToricError("face basis does not match face dimension");
    out.bases.push_back(std::move(basis));
  }
  return out;
}

int incidence(const FaceLattice& l, const OrientationAssignment& orient, FaceId f, FaceId g) {
  if (f >= l.size() || g >= l.size() || f == g || !l.leq(f, g) || l.face(g).dim != l.face(f).dim + 1)
    throw ToricError("incidence number needs a covering pair of faces");
  const std::size_t n = l.polytope().dim();
  const std::size_t d = l.face(g).dim;

  std::vector<RatVector> cols;
  for (const auto& b : orient.bases[f]) cols.push_back(to_rational(b));
  RatVector w = l.barycenter(g);
  const RatVector bf = l.barycenter(f);
  for (std::size_t i = 0; i < n; ++i) w[i] -= bf[i];
  cols.push_back(std::move(w));
  const auto& target = orient.bases[g];

  // Both column sets span the direction space of G. Restricted to rows on
  // which basis(G) is invertible, det(coords) = det(V_rows) / det(B_rows).
  std::vector<std::size_t> rows(d);
  for (std::size_t i = 0; i < d; ++i) rows[i] = i;
  for (;;) {
    RatMatrix b(d, d), v(d, d);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) {
        b(r, c) = target[c][rows[r]];
        v(r, c) = cols[c][rows[r]];
      }
    const Rational db = determinant(b);
    if (db != 0) {
      const Rational dv = determinant(v);
      if (dv == 0) throw ToricError("degenerate incidence frame");
      return sign(dv) * sign(db);
    }
    std::size_t i = d;
    while (i > 0 && rows[i - 1] == n - d + i - 1) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < d; ++j) rows[j] = rows[j - 1] + 1;
  }
  throw ToricError("face basis is not of full rank");
}

std::size_t IntegerChainComplex::rank(int degree) const {
  if (degree < lowest_degree || degree > highest_degree()) return 0;
  return basis[static_cast<std::size_t>(degree - lowest_degree)].size();
}

IntMatrix IntegerChainComplex::outgoing(int degree) const {
  if (degree < lowest_degree || degree > highest_degree()) return IntMatrix(0, 0);
  return maps[static_cast<std::size_t>(degree - lowest_degree)];
}

IntMatrix IntegerChainComplex::incoming(int degree) const {
  const int source = direction == Direction::Cochain ? degree - 1 : degree + 1;
  if (source < lowest_degree || source > highest_degree()) return IntMatrix(rank(degree), 0);
  return outgoing(source);
}

bool IntegerChainComplex::squares_to_zero() const {
  const int step = direction == Direction::Cochain ? 1 : -1;
  for (int d = lowest_degree; d <= highest_degree(); ++d) {
    const int next = d + step;
    if (next < lowest_degree || next > highest_degree()) continue;
    const IntMatrix first = outgoing(d), second = outgoing(next);
    if (second.rows() == 0 || first.cols() == 0) continue;
    if (!(second * first).is_zero()) return false;
  }
  return true;
}

const DegreeGroup& CohomologyResult::at(int degree) const {
  static const DegreeGroup zero;
  if (degree < lowest_degree || degree >= lowest_degree + static_cast<int>(groups.size())) return zero;
  return groups[static_cast<std::size_t>(degree - lowest_degree)];
}

bool CohomologyResult::is_zero() const {
  return std::all_of(groups.begin(), groups.end(), [](const DegreeGroup& g) { return g.is_zero(); });
}

bool CohomologyResult::is_free() const {
  return std::all_of(groups.begin(), groups.end(), [](const DegreeGroup& g) { return g.torsion.empty(); });
}

std::size_t CohomologyResult::total_rank() const {
  std::size_t total = 0;
  for (const auto& g : groups) total += g.free_rank;
  return total;
}

bool CohomologyResult::concentrated(int degree, std::size_t rank) const {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    const int d = lowest_degree + static_cast<int>(i);
    if (!groups[i].torsion.empty()) return false;
    if (groups[i].free_rank != (d == degree ? rank : 0)) return false;
  }
  if (rank > 0 && (degree < lowest_degree || degree >= lowest_degree + static_cast<int>(groups.size())))
    return false;
  return true;
}

IntegerChainComplex face_cochain_subcomplex(const FaceLattice& l, const OrientationAssignment& orient,
                                            const std::vector<bool>& keep) {
  const std::size_t n = l.polytope().dim();
  IntegerChainComplex c;
  c.direction = IntegerChainComplex::Direction::Cochain;
  c.lowest_degree = 0;
  c.basis.resize(n + 1);
  std::vector<std::size_t> position(l.size(), 0);
  for (const auto& face : l.faces()) {
    if (!keep.at(face.id)) continue;
    position[face.id] = c.basis[face.dim].size();
    c.basis[face.dim].push_back({face.id});
  }
  for (std::size_t j = 0; j <= n; ++j) {
    const std::size_t target_rank = j < n ? c.basis[j + 1].size() : 0;
    c.maps.emplace_back(target_rank, c.basis[j].size());
  }
  for (const auto& [f, g] : l.hasse()) {
    if (!keep[f] || !keep[g]) continue;
    const std::size_t j = l.face(f).dim;
    c.maps[j](position[g], position[f]) = incidence(l, orient, f, g);
  }
  return c;
}

IntegerChainComplex face_cochain_complex(const FaceLattice& l, const OrientationAssignment& orient) {
  return face_cochain_subcomplex(l, orient, std::vector<bool>(l.size(), true));
}

IntegerChainComplex simplicial_chain_complex(const NerveComplex& nerve, bool reduced) {
  IntegerChainComplex c;
  c.direction = IntegerChainComplex::Direction::Chain;
  c.lowest_degree = reduced ? -1 : 0;
  if (reduced) {
    c.basis.push_back({{}});
    c.maps.emplace_back(0, 1);
  }
  for (std::size_t k = 0; k < nerve.simplices.size(); ++k) {
    const auto& cells = nerve.simplices[k];
    std::vector<std::vector<std::size_t>> labels(cells.begin(), cells.end());
    if (k == 0) {
      IntMatrix m(reduced ? 1 : 0, cells.size());
      if (reduced)
        for (std::size_t i = 0; i < cells.size(); ++i) m(0, i) = 1;
      c.maps.push_back(std::move(m));
    } else {
      const auto& faces = nerve.simplices[k - 1];
      std::map<std::vector<FaceId>, std::size_t> index;
      for (std::size_t i = 0; i < faces.size(); ++i) index.emplace(faces[i], i);
      IntMatrix m(faces.size(), cells.size());
      for (std::size_t s = 0; s < cells.size(); ++s)
        for (std::size_t drop = 0; drop < cells[s].size(); ++drop) {
          std::vector<FaceId> facet;
          for (std::size_t i = 0; i < cells[s].size(); ++i)
            if (i != drop) facet.push_back(cells[s][i]);
          m(index.at(facet), s) = (drop % 2 == 0) ? 1 : -1;
        }
      c.maps.push_back(std::move(m));
    }
    c.basis.push_back(std::move(labels));
  }
  return c;
}

CohomologyResult cohomology(const IntegerChainComplex& c, const Ring& ring) {
  if (!c.squares_to_zero()) throw ToricError("differentials do not square to zero");
  CohomologyResult out;
  out.ring = ring;
  out.lowest_degree = c.lowest_degree;

  // Rank and elementary divisors of each differential, computed once.
  std::vector<SmithForm> forms;
  for (const auto& m : c.maps) {
    if (ring.is_field()) {
      SmithForm f;
      f.rank = rank_over_field(m, ring);
      forms.push_back(std::move(f));
    } else {
      forms.push_back(smith_normal_form(m));
    }
  }
  const int step = c.direction == IntegerChainComplex::Direction::Cochain ? 1 : -1;
  for (int d = c.lowest_degree; d <= c.highest_degree(); ++d) {
    const std::size_t i = static_cast<std::size_t>(d - c.lowest_degree);
    const int source = d - step;
    const bool has_incoming = source >= c.lowest_degree && source <= c.highest_degree();
    const SmithForm* in = has_incoming ? &forms[static_cast<std::size_t>(source - c.lowest_degree)] : nullptr;
    DegreeGroup g;
    g.free_rank = c.rank(d) - forms[i].rank - (in ? in->rank : 0);
    if (in && !ring.is_field())
      for (const auto& div : in->divisors)
        if (div > 1) g.torsion.push_back(div);
    out.groups.push_back(std::move(g));
  }
  return out;
}

CohomologyResult reduced_homology(const FaceSubset& s, const Ring& ring) {
  return cohomology(simplicial_chain_complex(nerve(s), true), ring);
}

bool is_acyclic(const CohomologyResult& reduced) { return reduced.is_zero(); }

bool is_sphere(const CohomologyResult& reduced, int d) { return reduced.concentrated(d, 1); }

}  // namespace toric
