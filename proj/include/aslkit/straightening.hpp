#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "aslkit/lattice.hpp"
#include "aslkit/poset.hpp"
#include "aslkit/report.hpp"

namespace aslkit {

// Multiset of host elements; degree 0 is the monomial 1. Factors are kept
// sorted by position in the owning system's linear extension.
struct PosetMonomial {
  std::vector<ElementId> factors;
  std::size_t degree() const { return factors.size(); }
  auto operator<=>(const PosetMonomial&) const = default;
};

bool is_standard(const Poset& p, const PosetMonomial& m);  // UnknownElement

// Finite linear combination with exact rational coefficients; zero terms are
// never stored.
class LinComb {
 public:
  LinComb() = default;
  static LinComb monomial(PosetMonomial m, mpq_class c = 1);

  void add(const PosetMonomial& m, const mpq_class& c);
  LinComb& operator+=(const LinComb& other);
  LinComb& operator-=(const LinComb& other);
  LinComb scaled(const mpq_class& c) const;

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::map<PosetMonomial, mpq_class>& terms() const { return terms_; }
  bool operator==(const LinComb&) const = default;

 private:
  std::map<PosetMonomial, mpq_class> terms_;
};

LinComb operator-(LinComb a, const LinComb& b);

struct StraighteningRelation {
  PosetMonomial lhs;  // two incomparable factors
  LinComb rhs;
};

enum class SystemKind { Discrete, Hibi, DiscreteVeronese2, HibiVeronese2 };
std::string to_string(SystemKind k);

struct StraighteningSystem {
  SystemKind kind = SystemKind::Discrete;
  Poset host;
  std::vector<int> ext_pos;  // element id -> position in a linear extension
  std::map<std::pair<ElementId, ElementId>, StraighteningRelation> relations;

  // Veronese kinds only: the base poset and, per host element, its 2-multichain.
  std::optional<Poset> base;
  std::vector<std::vector<ElementId>> vertex_tuples;

  bool veronese() const { return base.has_value(); }
  PosetMonomial monomial(std::vector<ElementId> factors) const;  // sorts by ext_pos
  // Relation for an incomparable pair, in either order.
  const StraighteningRelation& relation(ElementId a, ElementId b) const;  // InvalidArgument
  // Base-poset factors of a monomial (identity for non-Veronese kinds).
  std::vector<ElementId> flatten(const PosetMonomial& m) const;
};

StraighteningSystem discrete_system(const Poset& p);
StraighteningSystem hibi_system(const LatticeView& l);  // NotDistributive
StraighteningSystem veronese2_discrete_system(const Poset& p);
// Straightening laws on Z_2(L) built from meets and joins; each relation is
// checked against the three proof obligations as it is built.
StraighteningSystem veronese2_hibi_system(const LatticeView& l);  // NotDistributive, ProofObligationFailed

// Hibi right-hand side for (a b)(c d) with a <= b, c <= d, as two base pairs.
std::pair<std::pair<ElementId, ElementId>, std::pair<ElementId, ElementId>> hibi_veronese_rhs(
    const LatticeView& l, ElementId a, ElementId b, ElementId c, ElementId d);

// One rewrite of the factor pair (i, j) of `m` (indices into m.factors).
LinComb rewrite_at(const StraighteningSystem& s, const PosetMonomial& m, std::size_t i, std::size_t j);

// Positions (i, j) of the least incomparable factor pair, if any.
std::optional<std::pair<std::size_t, std::size_t>> least_incomparable_pair(const StraighteningSystem& s,
                                                                           const PosetMonomial& m);

// Normal forms along the canonical strategy, memoized across calls.
class Straightener {
 public:
  explicit Straightener(const StraighteningSystem& s) : s_(s) {}
  // NonTermination when a rewrite path exceeds 4*deg^2 steps or revisits a
  // monomial.
  const LinComb& normal_form(const PosetMonomial& m);
  LinComb normal_form(const LinComb& c);
  // Longest canonical rewrite path met while reducing `m`.
  std::size_t depth(const PosetMonomial& m);

 private:
  struct Entry {
    LinComb nf;
    std::size_t depth = 0;
  };
  const Entry& reduce(const PosetMonomial& m, std::vector<PosetMonomial>& path);

  const StraighteningSystem& s_;
  std::map<PosetMonomial, Entry> cache_;
};

LinComb straighten(const StraighteningSystem& s, const PosetMonomial& m);

// Strictly decreasing along every rewrite of the built-in kinds, compared
// lexicographically: ascending heights of the flattened factors, then (for
// Veronese kinds) the sum over factors of the product of the base positions
// of their two entries.
std::vector<std::int64_t> termination_measure(const StraighteningSystem& s, const PosetMonomial& m);

// All monomials of the given degree over the host, in lexicographic order.
std::vector<PosetMonomial> monomials_of_degree(const StraighteningSystem& s, std::size_t degree);

Report verify_asl2(const StraighteningSystem& s);

// Every rewrite choice at every monomial reaches the canonical normal form,
// and every step decreases the termination measure. Exhaustive up to
// `exhaustive_degree`, otherwise `samples` seeded random monomials.
Report audit_confluence(const StraighteningSystem& s, std::size_t degree, std::size_t exhaustive_degree = 3,
                        std::size_t samples = 200, std::uint64_t seed = 1);

Report verify_asl1_by_count(const StraighteningSystem& s, std::size_t m_max);
Report verify_identity_in_base(const StraighteningSystem& veronese, const StraighteningSystem& base_system);
Report verify_minor_relations(const Poset& p);
// Shortcut forms of the Hibi laws on Z_2(L) against the general formula.
Report verify_hibi_special_cases(const LatticeView& l, const StraighteningSystem& veronese);

std::size_t hilbert_function(const Poset& p, std::size_t i);

std::string monomial_text(const Poset& host, const PosetMonomial& m);
std::string lincomb_text(const Poset& host, const LinComb& c);
// "[a,b] -> 1*[c,d]" or "[a,b] -> 0".
std::string relation_text(const StraighteningSystem& s, const StraighteningRelation& r);
std::vector<std::string> relations_text(const StraighteningSystem& s);

}  // namespace aslkit
