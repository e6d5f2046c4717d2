#include "toric/complex.hpp"

#include <algorithm>
#include <functional>
#include <iterator>

namespace toric {

FaceSubset::FaceSubset(const FaceLattice& lattice, std::set<FaceId> members)
    : lattice_(&lattice), members_(std::move(members)) {
  for (FaceId f : members_)
    if (!lattice.is_proper(f)) throw ToricError("face subsets hold proper non-empty faces only");
}

FaceSubset FaceSubset::operator|(const FaceSubset& other) const {
  std::set<FaceId> out;
  std::set_union(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                 std::inserter(out, out.end()));
  return FaceSubset(*lattice_, std::move(out));
}

FaceSubset FaceSubset::operator&(const FaceSubset& other) const {
  std::set<FaceId> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                        std::inserter(out, out.end()));
  return FaceSubset(*lattice_, std::move(out));
}

FaceSubset FaceSubset::operator-(const FaceSubset& other) const {
  std::set<FaceId> out;
  std::set_difference(members_.begin(), members_.end(), other.members_.begin(), other.members_.end(),
                      std::inserter(out, out.end()));
  return FaceSubset(*lattice_, std::move(out));
}

namespace {

FaceSubset select(const FaceLattice& l, const std::function<bool(FaceId)>& pred) {
  std::set<FaceId> out;
  for (FaceId f = 0; f < l.top(); ++f)
    if (pred(f)) out.insert(f);
  return FaceSubset(l, std::move(out));
}

void require_proper(const FaceLattice& l, FaceId a) {
  if (a >= l.size()) throw ToricError("invalid face id " + std::to_string(a));
  if (a == l.top()) throw ToricError("stars and links need a proper face, not P");
}

}  // namespace

FaceSubset boundary_complex(const FaceLattice& lattice) {
  return select(lattice, [](FaceId) { return true; });
}

FaceSubset closure(const FaceSubset& s) {
  const auto& l = s.lattice();
  return select(l, [&](FaceId f) {
    return std::any_of(s.members().begin(), s.members().end(), [&](FaceId g) { return l.leq(f, g); });
  });
}

bool is_order_filter(const FaceSubset& s) {
  const auto& l = s.lattice();
  for (FaceId f : s.members())
    for (FaceId g = 0; g < l.top(); ++g)
      if (l.leq(f, g) && !s.contains(g)) return false;
  return true;
}

bool is_subcomplex(const FaceSubset& s) { return closure(s) == s; }

FaceSubset star(const FaceLattice& l, FaceId a, StarMode mode) {
  require_proper(l, a);
  if (mode == StarMode::Definitional) return select(l, [&](FaceId f) { return l.leq(a, f); });
  return select(l, [&](FaceId f) { return l.join(f, a) == f; });
}

FaceSubset closed_star(const FaceLattice& l, FaceId a, StarMode mode) {
  require_proper(l, a);
  if (mode == StarMode::Definitional) return closure(star(l, a, mode));
  return select(l, [&](FaceId f) { return l.join(f, a) != l.top(); });
}

FaceSubset open_antistar(const FaceLattice& l, FaceId a, StarMode mode) {
  require_proper(l, a);
  if (mode == StarMode::Definitional) return boundary_complex(l) - closed_star(l, a, mode);
  return select(l, [&](FaceId f) { return l.join(f, a) == l.top(); });
}

FaceSubset closed_antistar(const FaceLattice& l, FaceId a, StarMode mode) {
  require_proper(l, a);
  if (mode == StarMode::Definitional) return boundary_complex(l) - star(l, a, mode);
  return select(l, [&](FaceId f) { return l.join(f, a) != f; });
}

FaceSubset link(const FaceLattice& l, FaceId a, StarMode mode) {
  require_proper(l, a);
  if (mode == StarMode::Definitional) return closed_star(l, a, mode) & closed_antistar(l, a, mode);
  return select(l, [&](FaceId f) { return l.join(f, a) != l.top() && !l.leq(a, f); });
}

FaceSubset closed_star_within(const FaceSubset& within, FaceId a) {
  const auto& l = within.lattice();
  return select(l, [&](FaceId f) {
    if (!within.contains(f)) return false;
    return std::any_of(within.members().begin(), within.members().end(),
                       [&](FaceId g) { return l.leq(f, g) && l.leq(a, g); });
  });
}

std::size_t NerveComplex::count() const {
  std::size_t total = 0;
  for (const auto& level : simplices) total += level.size();
  return total;
}

NerveComplex nerve(const FaceSubset& s) {
  if (s.empty()) throw ToricError("nerve of an empty face set");
  const auto& l = s.lattice();
  NerveComplex out;
  out.vertices.assign(s.members().begin(), s.members().end());
  std::vector<std::vector<FaceId>> level;
  for (FaceId f : out.vertices) level.push_back({f});
  while (!level.empty()) {
    std::vector<std::vector<FaceId>> next;
    for (const auto& chain : level)
      for (FaceId g : out.vertices)
        if (g > chain.back() && l.leq(chain.back(), g)) {
          auto longer = chain;
          longer.push_back(g);
          next.push_back(std::move(longer));
        }
    out.simplices.push_back(std::move(level));
    level = std::move(next);
  }
  return out;
}

}  // namespace toric
