#include <doctest.h>

#include "aslkit/catalog.hpp"
#include "aslkit/error.hpp"
#include "aslkit/lattice.hpp"
#include "oracles.hpp"

using namespace aslkit;

TEST_CASE("divisor lattice of 12: meet and join are gcd and lcm") {
  LatticeView l(catalog::divisor_lattice(12));
  const auto& p = l.base();
  CHECK(l.meet(p.id_of("4"), p.id_of("6")) == p.id_of("2"));
  CHECK(l.join(p.id_of("4"), p.id_of("6")) == p.id_of("12"));
  for (int a = 0; a < static_cast<int>(p.size()); ++a) CHECK(l.meet(a, a) == a);
}

TEST_CASE("antichain has no meet") {
  LatticeView l(catalog::antichain(2));
  CHECK_FALSE(l.meet(0, 1).has_value());
  CHECK_FALSE(l.is_lattice());
  CHECK_THROWS_AS(l.meet(0, 5), Error);
}

TEST_CASE("lattice recognition") {
  CHECK(is_lattice(catalog::chain_product({2, 2})));
  CHECK_FALSE(is_lattice(catalog::antichain(2)));
  auto fork = catalog::forked_chain();
  LatticeView lf(fork);
  CHECK_FALSE(lf.join(2, 3).has_value());
  CHECK_FALSE(lf.is_lattice());
}

TEST_CASE("distributivity") {
  for (std::size_t n = 1; n <= 5; ++n) CHECK(is_distributive(LatticeView(catalog::chain(n))).distributive);
  for (auto p : {catalog::chain_product({2, 2}), catalog::chain_product({2, 3}), catalog::chain_product({2, 2, 2}),
                 catalog::divisor_lattice(12), catalog::divisor_lattice(36)}) {
    CHECK(is_distributive(LatticeView(p)).distributive);
  }
  for (auto p : {catalog::diamond_m3(), catalog::pentagon_n5()}) {
    LatticeView l(p);
    auto r = is_distributive(l);
    CHECK_FALSE(r.distributive);
    REQUIRE(r.witness);
    auto [a, b, c] = *r.witness;
    const bool first = l.meet_of(a, l.join_of(b, c)) == l.join_of(l.meet_of(a, b), l.meet_of(a, c));
    const bool second = l.join_of(a, l.meet_of(b, c)) == l.meet_of(l.join_of(a, b), l.join_of(a, c));
    CHECK_FALSE((first && second));
  }
  try {
    is_distributive(LatticeView(catalog::forked_chain()));
    FAIL("expected NotALattice");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotALattice);
  }
}

TEST_CASE("M3 fails distributivity on the atoms") {
  // Independent check over all 125 triples: the atoms a, b, c give
  // a /\ (b \/ c) = a but (a /\ b) \/ (a /\ c) = 0.
  LatticeView l(catalog::diamond_m3());
  const auto& p = l.base();
  int violations = 0;
  for (int a = 0; a < 5; ++a)
    for (int b = 0; b < 5; ++b)
      for (int c = 0; c < 5; ++c)
        violations += l.meet_of(a, l.join_of(b, c)) != l.join_of(l.meet_of(a, b), l.meet_of(a, c));
  CHECK(violations > 0);
  const int x = p.id_of("a"), y = p.id_of("b"), z = p.id_of("c");
  CHECK(l.meet_of(x, l.join_of(y, z)) == x);
  CHECK(l.join_of(l.meet_of(x, y), l.meet_of(x, z)) == p.id_of("0"));
}

TEST_CASE("property: lattice laws and the rank identity") {
  std::vector<Poset> lattices = {catalog::chain(4), catalog::chain_product({2, 2}), catalog::chain_product({2, 3}),
                                 catalog::chain_product({2, 2, 2}), catalog::divisor_lattice(12),
                                 catalog::divisor_lattice(36), catalog::diamond_m3(), catalog::pentagon_n5()};
  for (const auto& p : lattices) {
    LatticeView l(p);
    REQUIRE(l.is_lattice());
    const int n = static_cast<int>(p.size());
    const bool dist = is_distributive(l).distributive;
    for (int a = 0; a < n; ++a) {
      CHECK(l.meet_of(a, a) == a);
      CHECK(l.join_of(a, a) == a);
      for (int b = 0; b < n; ++b) {
        CHECK(l.meet_of(a, b) == l.meet_of(b, a));
        CHECK(l.join_of(a, b) == l.join_of(b, a));
        CHECK(l.meet_of(a, l.join_of(a, b)) == a);
        CHECK(l.join_of(a, l.meet_of(a, b)) == a);
        if (dist) CHECK(p.height(a) + p.height(b) == p.height(l.meet_of(a, b)) + p.height(l.join_of(a, b)));
        for (int c = 0; c < n; ++c) {
          CHECK(l.meet_of(a, l.meet_of(b, c)) == l.meet_of(l.meet_of(a, b), c));
          CHECK(l.join_of(a, l.join_of(b, c)) == l.join_of(l.join_of(a, b), c));
        }
      }
    }
  }
}
