#pragma once

#include <array>
#include <optional>
#include <vector>

#include "aslkit/poset.hpp"

namespace aslkit {

// Meet and join tables of a poset. Entries are absent where the infimum or
// supremum does not exist, so a LatticeView can be built from any poset.
class LatticeView {
 public:
  explicit LatticeView(Poset base);

  const Poset& base() const { return base_; }
  std::optional<ElementId> meet(ElementId a, ElementId b) const;  // UnknownElement
  std::optional<ElementId> join(ElementId a, ElementId b) const;  // UnknownElement
  bool is_lattice() const;

  // Total versions for code that already established is_lattice().
  ElementId meet_of(ElementId a, ElementId b) const;  // NotALattice
  ElementId join_of(ElementId a, ElementId b) const;  // NotALattice

 private:
  Poset base_;
  std::vector<std::optional<ElementId>> meet_;
  std::vector<std::optional<ElementId>> join_;
};

bool is_lattice(const Poset& p);

struct DistributivityResult {
  bool distributive = true;
  std::optional<std::array<ElementId, 3>> witness;  // a, b, c violating an identity
};

// Brute force over all triples, testing both distributive identities.
DistributivityResult is_distributive(const LatticeView& l);  // NotALattice

}  // namespace aslkit
