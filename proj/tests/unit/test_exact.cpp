#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "aslkit/error.hpp"
#include "aslkit/exact.hpp"
#include "aslkit/linalg.hpp"
#include "aslkit/polynomial.hpp"

using namespace aslkit;

namespace {

// Leibniz expansion over all permutations.
ExactScalar leibniz(const std::vector<std::vector<ExactScalar>>& m, const FieldSpec& f) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  ExactScalar total = ExactScalar::zero(f);
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (perm[a] > perm[b]) ++inversions;
    ExactScalar term = ExactScalar::one(f);
    for (std::size_t r = 0; r < n; ++r) term = term * m[r][perm[r]];
    total = inversions % 2 ? total - term : total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

std::vector<std::vector<ExactScalar>> random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                                                    const FieldSpec& f, int spread) {
  std::vector<std::vector<ExactScalar>> m(rows);
  for (auto& row : m)
    for (std::size_t c = 0; c < cols; ++c)
      row.push_back(ExactScalar::from_int(static_cast<std::int64_t>(rng() % (2 * spread + 1)) - spread, f));
  return m;
}

}  // namespace

TEST_CASE("field specs") {
  CHECK(FieldSpec::parse("fp:32003").p == 32003);
  CHECK(FieldSpec::parse("rational").kind == FieldSpec::Kind::Rational);
  for (const char* bad : {"fp:4", "fp:1009x", "fp:", "fp:997", "fp:1001", "real"}) {
    try {
      FieldSpec::parse(bad);
      FAIL("expected InvalidField for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::InvalidField);
    }
  }
  CHECK(FieldSpec::parse("fp:1009").to_string() == "fp:1009");
  CHECK(is_prime(2147483647ull));
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
  int small = 0;
  for (std::uint64_t k = 0; k < 1000; ++k) small += is_prime(k);
  CHECK(small == 168);
}

TEST_CASE("modular and rational arithmetic") {
  const auto f = FieldSpec::prime(32003);
  auto a = ExactScalar::from_int(-1, f);
  CHECK(a.to_string() == "32002");
  CHECK((a * a) == ExactScalar::one(f));
  auto b = ExactScalar::from_int(12345, f);
  CHECK(((ExactScalar::one(f) / b) * b) == ExactScalar::one(f));
  CHECK_THROWS_AS(b / ExactScalar::zero(f), Error);
  const auto q = FieldSpec::rational();
  auto h = ExactScalar::one(q) / ExactScalar::from_int(2, q);
  CHECK(h.to_string() == "1/2");
  CHECK((h + h) == ExactScalar::one(q));
}

TEST_CASE("determinants agree with the Leibniz expansion") {
  std::mt19937_64 rng(5);
  for (const auto& f : {FieldSpec::rational(), FieldSpec::prime(32003), FieldSpec::prime(1009)}) {
    const auto zero = ExactScalar::zero(f), one = ExactScalar::one(f);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        auto m = random_matrix(rng, n, n, f, rep % 2 ? 1 : 9);
        CHECK(determinant(m, zero, one) == leibniz(m, f));
      }
    }
  }
}

TEST_CASE("rank and span") {
  const auto f = FieldSpec::rational();
  const auto zero = ExactScalar::zero(f), one = ExactScalar::one(f);
  auto v = [&](std::vector<int> xs) {
    std::vector<ExactScalar> out;
    for (int x : xs) out.push_back(ExactScalar::from_int(x, f));
    return out;
  };
  std::vector<std::vector<ExactScalar>> rows = {v({1, 2, 3}), v({2, 4, 6}), v({0, 1, 1})};
  auto ech = row_echelon(rows, zero, one);
  CHECK(ech.rank() == 2);
  REQUIRE(ech.dependent == std::vector<std::size_t>{1});
  // The recorded relation really vanishes.
  for (std::size_t col = 0; col < 3; ++col) {
    ExactScalar s = zero;
    for (std::size_t k = 0; k < 3; ++k) s = s + ech.relations[0][k] * rows[k][col];
    CHECK(s.is_zero());
  }
  auto sol = solve_in_span(rows, v({1, 3, 4}), zero, one);
  REQUIRE(sol);
  for (std::size_t col = 0; col < 3; ++col) {
    ExactScalar s = zero;
    for (std::size_t k = 0; k < 3; ++k) s = s + (*sol)[k] * rows[k][col];
    CHECK(s == v({1, 3, 4})[col]);
  }
  CHECK_FALSE(solve_in_span(rows, v({0, 0, 1}), zero, one));

  // Rank equals the size of the largest nonzero minor on small random matrices.
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 30; ++rep) {
    auto m = random_matrix(rng, 3, 4, f, 1);
    std::size_t best = 0;
    for (std::size_t k = 1; k <= 3; ++k) {
      std::vector<bool> rsel(3, false), csel(4, false);
      std::fill(rsel.begin(), rsel.begin() + k, true);
      do {
        std::fill(csel.begin(), csel.end(), false);
        std::fill(csel.begin(), csel.begin() + k, true);
        do {
          std::vector<std::vector<ExactScalar>> sub;
          for (std::size_t r = 0; r < 3; ++r) {
            if (!rsel[r]) continue;
            sub.emplace_back();
            for (std::size_t c = 0; c < 4; ++c)
              if (csel[c]) sub.back().push_back(m[r][c]);
          }
          if (!leibniz(sub, f).is_zero()) best = std::max(best, k);
        } while (std::prev_permutation(csel.begin(), csel.end()));
      } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    CHECK(matrix_rank(m, zero, one) == best);
  }
}

TEST_CASE("polynomials") {
  const auto f = FieldSpec::prime(32003);
  auto c = [&](int x) { return ExactScalar::from_int(x, f); };
  auto x = MultiPoly::linear({c(1), c(0)}, f);
  auto y = MultiPoly::linear({c(0), c(1)}, f);
  auto sq = (x + y) * (x + y);
  CHECK(sq.coefficient({1, 1}) == c(2));
  CHECK(sq.homogeneous_degree() == 2);
  CHECK((sq - x * x - y * y - x * y - x * y).is_zero());
  CHECK((x * y) == (y * x));
  CHECK(MultiPoly(2, f).homogeneous_degree() == -1);
  CHECK((x + MultiPoly::constant(2, f, c(1))).homogeneous_degree() == -1);

  auto basis = monomial_basis(3, 2);
  CHECK(basis.size() == 6);
  CHECK(basis.front() == Exponent{2, 0, 0});
  CHECK(basis.back() == Exponent{0, 0, 2});
  CHECK(std::is_sorted(basis.rbegin(), basis.rend()));
  CHECK(monomial_basis(3, 8).size() == 45);
  CHECK(monomial_basis(1, 4).size() == 1);
}
