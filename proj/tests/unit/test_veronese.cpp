#include <doctest.h>

#include <set>

#include "aslkit/catalog.hpp"
#include "aslkit/error.hpp"
#include "aslkit/veronese.hpp"
#include "oracles.hpp"

using namespace aslkit;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;

EdgeSet edges(const Poset& p) {
  EdgeSet out;
  for (auto [a, b] : p.covers()) out.emplace(p.label(a), p.label(b));
  return out;
}

MultiChain mc(std::vector<int> ids) { return MultiChain{std::move(ids)}; }

std::vector<Poset> rank3_corpus() {
  std::vector<Poset> out = {catalog::chain(1), catalog::chain(2), catalog::chain(3), catalog::antichain(2),
                            catalog::forked_chain(), catalog::diamond_m3(),
                            catalog::chain_product({2, 2})};
  for (std::uint64_t seed = 100; seed < 110; ++seed) out.push_back(catalog::random_poset(seed, 2, 6, 3));
  return out;
}

}  // namespace

TEST_CASE("H_3(2) has the expected Hasse diagram") {
  auto h = h_poset(3, 2);
  CHECK(h.size() == 6);
  EdgeSet expected = {{"11", "21"}, {"11", "12"}, {"21", "31"}, {"21", "22"}, {"12", "22"}, {"12", "13"}};
  CHECK(edges(h.poset) == expected);
}

TEST_CASE("H_3(3) has the expected Hasse diagram") {
  auto h = h_poset(3, 3);
  CHECK(h.size() == 10);
  EdgeSet expected = {{"111", "112"}, {"111", "121"}, {"111", "211"}, {"112", "113"},
                      {"112", "122"}, {"112", "212"}, {"121", "122"}, {"121", "131"},
                      {"121", "221"}, {"211", "212"}, {"211", "221"}, {"211", "311"}};
  CHECK(edges(h.poset) == expected);
}

TEST_CASE("H_n(1) is the n-chain and |H_n(d)| = binomial(n+d-1, d)") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(is_isomorphic(h_poset(n, 1).poset, catalog::chain(n)).has_value());
    for (int d = 1; d <= 4; ++d) CHECK(h_poset(n, d).size() == oracle::binomial(n + d - 1, d));
  }
  CHECK(in_h_poset(HVector{{1, 3}}, 3));
  CHECK_FALSE(in_h_poset(HVector{{2, 3}}, 3));
}

TEST_CASE("zig-zag of the 3-chain is H_3(2)") {
  auto z = zigzag(catalog::chain(3), 2);
  CHECK(z.size() == 6);
  CHECK(is_isomorphic(z.poset, h_poset(3, 2).poset).has_value());
  CHECK(is_isomorphic(zigzag(catalog::forked_chain(), 1).poset, catalog::forked_chain()).has_value());
}

TEST_CASE("zig-zag of the six-element example matches the expected Hasse diagram") {
  auto z = zigzag(catalog::nonpure_six(), 2);
  CHECK(z.size() == 16);
  EdgeSet expected = {{"61", "62"}, {"62", "64"}, {"64", "66"}, {"61", "41"}, {"41", "21"}, {"21", "11"},
                      {"41", "42"}, {"42", "44"}, {"62", "42"}, {"42", "22"}, {"21", "22"}, {"64", "44"},
                      {"63", "64"}, {"63", "43"}, {"63", "65"}, {"63", "53"}, {"43", "44"}, {"43", "33"},
                      {"65", "66"}, {"65", "55"}, {"53", "55"}, {"53", "33"}};
  CHECK(edges(z.poset) == expected);
}

TEST_CASE("Z_3 has two minima once P has a comparable pair") {
  CHECK(minimal_elements(zigzag(catalog::chain(2), 3).poset).size() >= 2);
  CHECK(minimal_elements(zigzag(catalog::forked_chain(), 3).poset).size() >= 2);
  CHECK(minimal_elements(zigzag(catalog::antichain(2), 3).poset).size() == 2);
}

TEST_CASE("snake reading for m = 3, d = 4") {
  // alpha = (0,5,6,11), beta = (1,4,7,10), gamma = (2,3,8,9) read column-wise
  // gives alpha1 <= beta1 <= gamma1 <= gamma2 <= beta2 <= alpha2 <= ... = 0..11.
  TuplePoset z;
  z.tuples = {{0, 5, 6, 11}, {1, 4, 7, 10}, {2, 3, 8, 9}};
  for (int i = 0; i < 3; ++i) z.index[z.tuples[i]] = i;
  auto read = snake_read(z, mc({0, 1, 2}));
  CHECK(read.ids == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11});
  CHECK(snake_split(z, read, 3).ids == std::vector<int>{0, 1, 2});
}

TEST_CASE("zig-zag correspondence is a bijection") {
  auto c3 = catalog::chain(3);
  auto bij = zigzag_correspondence(c3, 2, 2);
  CHECK(bij.source.size() == 15);
  CHECK(bij.target.size() == 15);
  for (std::size_t i = 0; i < bij.source.size(); ++i) CHECK(bij.backward[bij.forward[i]] == i);
  // d = 1 is the identity on m-multichains.
  auto id = zigzag_correspondence(catalog::forked_chain(), 1, 3);
  for (std::size_t i = 0; i < id.source.size(); ++i) {
    const auto& t = id.target[id.forward[i]];
    std::vector<int> flat;
    for (int v : t.ids) flat.push_back(id.constructed.tuples[v][0]);
    CHECK(flat == id.source[i].ids);
  }
}

TEST_CASE("property: zig-zag transfers rank and multichain counts") {
  auto corpus = rank3_corpus();
  corpus.push_back(catalog::nonpure_six());
  corpus.push_back(catalog::random_poset(7, 3, 6, 5));
  for (const auto& p : corpus) {
    for (std::size_t d = 1; d <= 3; ++d) {
      auto z = zigzag(p, d);
      CHECK(rank(z.poset) == rank(p));
      for (std::size_t m = 1; m <= 3; ++m) {
        if (m * d > 6) continue;
        CHECK(oracle::multichain_count(z.poset, m) == oracle::multichain_count(p, m * d));
      }
    }
  }
}

TEST_CASE("height-gap vectors") {
  auto c3 = catalog::chain(3);
  CHECK(height_gap_vector(c3, mc({2, 2})).gaps == std::vector<int>{2, 0});
  CHECK(height_gap_vector(c3, mc({0, 1})).gaps == std::vector<int>{0, 1});
  CHECK(height_gap_vector(c3, mc({0, 0, 0})).gaps == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(height_gap_vector(c3, mc({2, 1})), Error);
  CHECK_THROWS_AS(height_gap_vector(c3, mc({})), Error);
}

TEST_CASE("rank-3 relation examples") {
  auto c3 = catalog::chain(3);
  CHECK_FALSE(rank3_leq(c3, mc({2, 2}), mc({0, 1})));
  CHECK_FALSE(rank3_leq(c3, mc({0, 1}), mc({2, 2})));
  CHECK(rank3_leq(c3, mc({0, 1}), mc({0, 1})));
  auto c4 = catalog::chain(4);
  CHECK_FALSE(rank3_leq(c4, mc({0, 2}), mc({2, 3})));
  CHECK_FALSE(rank3_leq(c4, mc({2, 3}), mc({0, 2})));
  auto q = build_poset({"0", "2", "3"}, {{"0", "2"}, {"2", "3"}});
  CHECK(rank3_leq(q, mc({0, 1}), mc({1, 2})));
}

TEST_CASE("rank-3 construction on chains gives H_3(d)") {
  for (std::size_t d = 2; d <= 4; ++d) {
    auto v = rank3_veronese(catalog::chain(3), d);
    CHECK(is_isomorphic(v.poset, h_poset(3, static_cast<int>(d)).poset).has_value());
  }
}

TEST_CASE("rank-3 construction on the forked chain matches the expected Hasse diagram") {
  auto v = rank3_veronese(catalog::forked_chain(), 2);
  CHECK(v.size() == 9);
  EdgeSet expected = {{"00", "11"}, {"00", "10"}, {"11", "22"}, {"11", "21"}, {"11", "33"},
                      {"11", "31"}, {"10", "30"}, {"10", "31"}, {"10", "20"}, {"10", "21"}};
  CHECK(edges(v.poset) == expected);
}

TEST_CASE("rank-3 construction refuses rank 4 without the override") {
  try {
    rank3_veronese(catalog::chain(4), 2);
    FAIL("expected RankTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RankTooLarge);
  }
  // A chain stays a partial order under the override.
  CHECK(rank3_veronese(catalog::chain(4), 2, true).size() == 10);
}

TEST_CASE("override reports an intransitive triple on a rank-4 poset") {
  // Two height-1 elements under the same rank-3 element: (0,1) <= (0,2) <= (4,3)
  // while 1 and 4 are incomparable.
  auto p = build_poset({"0", "1", "2", "3", "4"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"0", "4"}, {"4", "2"}});
  CHECK(rank3_leq(p, mc({0, 1}), mc({0, 2})));
  CHECK(rank3_leq(p, mc({0, 2}), mc({4, 3})));
  CHECK_FALSE(rank3_leq(p, mc({0, 1}), mc({4, 3})));
  auto w = rank3_transitivity_witness(p, 2);
  REQUIRE(w);
  const auto& [a, b, c] = *w;
  CHECK(rank3_leq(p, a, b));
  CHECK(rank3_leq(p, b, c));
  CHECK_FALSE(rank3_leq(p, a, c));
  try {
    rank3_veronese(p, 2, true);
    FAIL("expected RelationNotTransitive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RelationNotTransitive);
    CHECK_FALSE(e.witness().empty());
  }
}

TEST_CASE("property: rank-3 relation") {
  for (const auto& p : rank3_corpus()) {
    for (std::size_t d = 2; d <= 3; ++d) {
      auto chains = multichains(p, d);
      for (const auto& a : chains) {
        CHECK(height_gap_vector(p, a).total() <= 2);
        for (const auto& b : chains) {
          const bool ab = rank3_leq(p, a, b);
          if (ab && a != b) {
            CHECK(height_gap_vector(p, a).total() < height_gap_vector(p, b).total());
            CHECK_FALSE(rank3_leq(p, b, a));
            for (std::size_t k = 0; k < d; ++k) CHECK(p.leq(a.ids[k], b.ids[k]));
          }
        }
      }
      CHECK_FALSE(rank3_transitivity_witness(p, d).has_value());
      CHECK_NOTHROW(rank3_veronese(p, d));
    }
  }
}

TEST_CASE("chain bijection: constant multichains and the two-element chain") {
  auto c3 = catalog::chain(3);
  auto bij = chain_bijection(c3, 2, 2);
  for (int i = 0; i < 3; ++i) {
    auto it = std::find(bij.source.begin(), bij.source.end(), mc({i, i, i, i}));
    REQUIRE(it != bij.source.end());
    const auto& t = bij.target[bij.forward[it - bij.source.begin()]];
    CHECK(t.ids.size() == 2);
    CHECK(bij.constructed.tuples[t.ids[0]] == std::vector<int>{i, i});
    CHECK(bij.constructed.tuples[t.ids[1]] == std::vector<int>{i, i});
  }

  auto c2 = catalog::chain(2);
  auto b2 = chain_bijection(c2, 2, 2);
  auto image = [&](std::vector<int> src) {
    auto it = std::find(b2.source.begin(), b2.source.end(), mc(src));
    REQUIRE(it != b2.source.end());
    std::vector<std::vector<int>> out;
    for (int v : b2.target[b2.forward[it - b2.source.begin()]].ids) out.push_back(b2.constructed.tuples[v]);
    return out;
  };
  using V = std::vector<std::vector<int>>;
  CHECK(image({0, 0, 0, 1}) == V{{0, 0}, {0, 1}});
  CHECK(image({0, 0, 1, 1}) == V{{0, 0}, {1, 1}});
  CHECK(image({0, 1, 1, 1}) == V{{0, 1}, {0, 1}});

  auto one = chain_bijection(c3, 1, 1);
  for (std::size_t i = 0; i < one.source.size(); ++i) {
    CHECK(one.constructed.tuples[one.target[one.forward[i]].ids[0]] == one.source[i].ids);
  }
  CHECK_THROWS_AS(chain_bijection(catalog::forked_chain(), 2, 1), Error);
}

TEST_CASE("global bijection") {
  auto f = catalog::forked_chain();
  auto b1 = global_bijection(f, 2, 1);
  CHECK(b1.source.size() == 9);
  CHECK(b1.target.size() == 9);
  auto b2 = global_bijection(f, 2, 2);
  CHECK(b2.source.size() == oracle::multichain_count(f, 4));
  CHECK(b2.target.size() == oracle::multichain_count(b2.constructed.poset, 2));
  for (std::size_t i = 0; i < b2.source.size(); ++i) CHECK(b2.backward[b2.forward[i]] == i);
  for (std::size_t j = 0; j < b2.target.size(); ++j) CHECK(b2.forward[b2.backward[j]] == j);

  // On a chain it coincides with the chain bijection.
  auto c3 = catalog::chain(3);
  auto g = global_bijection(c3, 2, 2);
  auto c = chain_bijection(c3, 2, 2);
  CHECK(g.forward == c.forward);
}

TEST_CASE("property: global bijection is support preserving on the rank-3 corpus") {
  for (const auto& p : rank3_corpus()) {
    for (std::size_t d = 2; d <= 3; ++d) {
      for (std::size_t m = 1; m <= 2; ++m) {
        auto bij = global_bijection(p, d, m);
        for (std::size_t i = 0; i < bij.source.size(); ++i) {
          ElementSet s;
          for (int v : bij.target[bij.forward[i]].ids)
            for (int a : bij.constructed.tuples[v]) s.insert(a);
          CHECK(s == support(bij.source[i]));
          CHECK(bij.backward[bij.forward[i]] == i);
        }
      }
    }
  }
}

TEST_CASE("check_properties") {
  auto r1 = check_properties(catalog::chain(3), 3, 2);
  CHECK(r1.passed());
  auto r2 = check_properties(catalog::forked_chain(), 2, 3);
  CHECK(r2.passed());
  CHECK(r2.find("unique_minimum")->status == CheckStatus::Pass);
  auto r3 = check_properties(catalog::antichain(2), 2, 2);
  CHECK(r3.passed());
  CHECK(r3.find("unique_minimum")->status == CheckStatus::Skip);
  CHECK(r3.find("rank")->status == CheckStatus::Pass);
  CHECK(r3.find("multichain_count.m2")->status == CheckStatus::Pass);
}

TEST_CASE("check_zigzag_properties") {
  auto r = check_zigzag_properties(catalog::chain(3), 2, 3);
  CHECK(r.passed());
  CHECK(r.find("minimality")->status == CheckStatus::Pass);
  auto r3 = check_zigzag_properties(catalog::forked_chain(), 3, 2);
  CHECK(r3.passed());
  CHECK(r3.find("minimality")->status == CheckStatus::Pass);
}
