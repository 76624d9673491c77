#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace aslkit {

using ElementId = int;

// A totally ordered subset, listed bottom to top.
struct Chain {
  std::vector<ElementId> ids;
  std::size_t length() const { return ids.size(); }
  auto operator<=>(const Chain&) const = default;
};

// A weakly increasing sequence of elements (repetitions allowed).
struct MultiChain {
  std::vector<ElementId> ids;
  std::size_t length() const { return ids.size(); }
  auto operator<=>(const MultiChain&) const = default;
};

using ElementSet = std::set<ElementId>;

// Finite poset on ids 0..n-1. Stores the irredundant cover relation, the
// dense reflexive-transitive order matrix and per-element heights. Values are
// immutable once built.
class Poset {
 public:
  Poset() = default;

  // Builds from explicit covers a -> b (a covered by b). Redundant pairs are
  // accepted and dropped from the stored cover relation.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<ElementId, ElementId>>& covers);

  // Builds from an order predicate evaluated on every ordered pair. Throws
  // NotPartialOrder (with a witness) unless the predicate is reflexive,
  // antisymmetric and transitive.
  static Poset from_order(std::vector<std::string> labels,
                          const std::function<bool(ElementId, ElementId)>& leq);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }

  const std::string& label(ElementId a) const;
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> find(std::string_view label) const;
  ElementId id_of(std::string_view label) const;  // UnknownElement

  bool leq(ElementId a, ElementId b) const;  // UnknownElement
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  bool comparable(ElementId a, ElementId b) const { return leq(a, b) || leq(b, a); }
  int height(ElementId a) const;  // UnknownElement

  const std::vector<std::pair<ElementId, ElementId>>& covers() const { return covers_; }
  const std::vector<ElementId>& upper_covers(ElementId a) const;
  const std::vector<ElementId>& lower_covers(ElementId a) const;

  void check(ElementId a) const;  // UnknownElement when out of range

 private:
  void finalize();  // derives covers/heights from order_

  std::vector<std::string> labels_;
  std::vector<std::pair<ElementId, ElementId>> covers_;
  std::vector<std::uint8_t> order_;  // row-major n*n, order_[a*n+b] = a <= b
  std::vector<int> heights_;
  std::vector<std::vector<ElementId>> up_;
  std::vector<std::vector<ElementId>> down_;
};

// Label-based construction: covers are (lower, upper) label pairs.
Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& covers);

std::size_t rank(const Poset& p);  // EmptyPoset
std::vector<MultiChain> multichains(const Poset& p, std::size_t m);
std::vector<Chain> maximal_chains(const Poset& p);
bool is_poset_ideal(const Poset& p, const ElementSet& s);
std::vector<ElementId> linear_extension(const Poset& p);
ElementSet minimal_elements(const Poset& p);  // EmptyPoset
ElementSet maximal_elements(const Poset& p);  // EmptyPoset
bool unique_minimal(const Poset& p);
ElementSet support(const MultiChain& mc);
std::vector<std::pair<ElementId, ElementId>> incomparable_pairs(const Poset& p);

bool is_chain(const Poset& p, const std::vector<ElementId>& ids);
bool is_multichain(const Poset& p, const MultiChain& mc);

// Order isomorphism search. Returns map[i] = image of element i of `p` in `q`.
std::optional<std::vector<ElementId>> is_isomorphic(const Poset& p, const Poset& q);

std::string dot_export(const Poset& p, std::string_view graph_name = "P");

}  // namespace aslkit
