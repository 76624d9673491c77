#include "aslkit/lattice.hpp"

#include "aslkit/error.hpp"

namespace aslkit {

namespace {

// The unique bound in `bounds` that dominates (or is dominated by) all others.
std::optional<ElementId> extremal(const Poset& p, const std::vector<ElementId>& bounds, bool greatest) {
  for (ElementId m : bounds) {
    bool ok = true;
    for (ElementId x : bounds) {
      if (greatest ? !p.leq(x, m) : !p.leq(m, x)) {
        ok = false;
        break;
      }
    }
    if (ok) return m;
  }
  return std::nullopt;
}

}  // namespace

LatticeView::LatticeView(Poset base) : base_(std::move(base)) {
  const auto n = static_cast<ElementId>(base_.size());
  meet_.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  join_.assign(static_cast<std::size_t>(n) * n, std::nullopt);
  std::vector<ElementId> lower, upper;
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a; b < n; ++b) {
      lower.clear();
      upper.clear();
      for (ElementId c = 0; c < n; ++c) {
        if (base_.leq(c, a) && base_.leq(c, b)) lower.push_back(c);
        if (base_.leq(a, c) && base_.leq(b, c)) upper.push_back(c);
      }
      auto m = extremal(base_, lower, true);
      auto j = extremal(base_, upper, false);
      meet_[a * n + b] = meet_[b * n + a] = m;
      join_[a * n + b] = join_[b * n + a] = j;
    }
  }
}

std::optional<ElementId> LatticeView::meet(ElementId a, ElementId b) const {
  base_.check(a);
  base_.check(b);
  return meet_[static_cast<std::size_t>(a) * base_.size() + b];
}

std::optional<ElementId> LatticeView::join(ElementId a, ElementId b) const {
  base_.check(a);
  base_.check(b);
  return join_[static_cast<std::size_t>(a) * base_.size() + b];
}

ElementId LatticeView::meet_of(ElementId a, ElementId b) const {
  if (auto m = meet(a, b)) return *m;
  throw Error(ErrorCode::NotALattice, "no meet for '" + base_.label(a) + "' and '" + base_.label(b) + "'",
              base_.label(a) + "," + base_.label(b));
}

ElementId LatticeView::join_of(ElementId a, ElementId b) const {
  if (auto j = join(a, b)) return *j;
  throw Error(ErrorCode::NotALattice, "no join for '" + base_.label(a) + "' and '" + base_.label(b) + "'",
              base_.label(a) + "," + base_.label(b));
}

bool LatticeView::is_lattice() const {
  if (base_.empty()) return false;
  for (std::size_t i = 0; i < meet_.size(); ++i) {
    if (!meet_[i] || !join_[i]) return false;
  }
  return true;
}

bool is_lattice(const Poset& p) { return LatticeView(p).is_lattice(); }

DistributivityResult is_distributive(const LatticeView& l) {
  if (!l.is_lattice()) throw Error(ErrorCode::NotALattice, "distributivity requires a lattice");
  const auto n = static_cast<ElementId>(l.base().size());
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      for (ElementId c = 0; c < n; ++c) {
        bool meet_over_join = l.meet_of(a, l.join_of(b, c)) == l.join_of(l.meet_of(a, b), l.meet_of(a, c));
        bool join_over_meet = l.join_of(a, l.meet_of(b, c)) == l.meet_of(l.join_of(a, b), l.join_of(a, c));
        if (!meet_over_join || !join_over_meet) {
          return DistributivityResult{false, std::array<ElementId, 3>{a, b, c}};
        }
      }
    }
  }
  return {};
}

}  // namespace aslkit
