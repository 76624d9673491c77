#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aslkit/poset.hpp"
#include "aslkit/report.hpp"

namespace aslkit {

// A poset whose elements are integer tuples: multichains of a base poset for
// the zig-zag and rank-3 constructions, 1-based coordinate vectors for H_n(d).
struct TuplePoset {
  Poset poset;
  std::vector<std::vector<ElementId>> tuples;  // element id -> tuple
  std::map<std::vector<ElementId>, ElementId> index;

  std::size_t size() const { return tuples.size(); }
  std::optional<ElementId> find(const std::vector<ElementId>& tuple) const;
  ElementId id_of(const std::vector<ElementId>& tuple) const;  // UnknownElement
};

// Multichain rendered top element first ("31" for (1,3)); labels are joined
// with ',' unless every base label is a single character.
std::string multichain_label(const Poset& base, const MultiChain& mc);

// ---- zig-zag poset Z_d(P) -------------------------------------------------

// a <= b iff a_k <= b_k for odd k and a_k >= b_k for even k (1-based).
bool zigzag_leq(const Poset& base, const MultiChain& a, const MultiChain& b);
TuplePoset zigzag(const Poset& base, std::size_t d);

// A bijection between md-multichains of a base poset and m-multichains of a
// constructed poset whose elements are d-multichains of the base.
struct MultichainBijection {
  TuplePoset constructed;
  std::vector<MultiChain> source;    // md-multichains of the base
  std::vector<MultiChain> target;    // m-multichains of `constructed.poset`
  std::vector<std::size_t> forward;  // source index -> target index
  std::vector<std::size_t> backward;  // target index -> source index
};

// Column-wise snake reading of an m x d array: coordinates 1, 3, ... are read
// left to right, coordinates 2, 4, ... right to left.
MultiChain snake_read(const TuplePoset& z, const MultiChain& vertices);
MultiChain snake_split(const TuplePoset& z, const MultiChain& long_chain, std::size_t m);

MultichainBijection zigzag_correspondence(const Poset& base, std::size_t d, std::size_t m);

// ---- H_n(d) ---------------------------------------------------------------

struct HVector {
  std::vector<int> coords;  // entries in 1..n
  auto operator<=>(const HVector&) const = default;
};

bool in_h_poset(const HVector& v, int n);
// d-tuples over {1..n} with coordinate sum <= n+d-1, component-wise order.
TuplePoset h_poset(int n, int d);
std::string hvector_label(const HVector& v, int n);

// ---- rank-3 construction P^(d) --------------------------------------------

struct HeightGapVector {
  std::vector<int> gaps;
  int total() const;
  bool operator<=(const HeightGapVector& other) const;  // component-wise
  bool operator==(const HeightGapVector&) const = default;
};

struct VeroneseElement {
  MultiChain chain;
  HeightGapVector v;
};

HeightGapVector height_gap_vector(const Poset& base, const MultiChain& mc);  // InvalidMultiChain
VeroneseElement make_veronese_element(const Poset& base, const MultiChain& mc);

// Union of both chains totally ordered and v(a) <= v(b) component-wise.
bool rank3_leq(const Poset& base, const VeroneseElement& a, const VeroneseElement& b);
bool rank3_leq(const Poset& base, const MultiChain& a, const MultiChain& b);

// First (a, b, c) with a <= b <= c but not a <= c, scanning in enumeration order.
std::optional<std::array<MultiChain, 3>> rank3_transitivity_witness(const Poset& base, std::size_t d);

// Refuses rank(P) > 3 with RankTooLarge unless `force`; in forced mode the
// relation is checked exhaustively and RelationNotTransitive carries the
// offending triple.
TuplePoset rank3_veronese(const Poset& base, std::size_t d, bool force = false);

// Canonical support-class matching. `chain` must be totally ordered.
MultichainBijection chain_bijection(const Poset& chain, std::size_t d, std::size_t m);

// Chain-wise bijection M_md(P) -> M_m(P^(d)): each class is mapped through
// the bijection of a maximal chain containing its support, and all maximal
// chains containing a support must agree.
MultichainBijection global_bijection(const Poset& base, std::size_t d, std::size_t m);

// Checks that a unique minimum, the rank and the multichain counts transfer
// from P to P^(d) (counts for m up to m_max), plus the bijection and the
// exhaustive order-axiom check.
Report check_properties(const Poset& base, std::size_t d, std::size_t m_max);

// Rank and multichain-count transfer for Z_d(P), plus the minimal-element
// facts of the zig-zag construction.
Report check_zigzag_properties(const Poset& base, std::size_t d, std::size_t m_max);

}  // namespace aslkit
