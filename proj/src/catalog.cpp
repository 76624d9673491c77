#include "aslkit/catalog.hpp"

#include <numeric>
#include <random>
#include <string>

namespace aslkit::catalog {

Poset chain(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<ElementId, ElementId>> covers;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i > 0) covers.emplace_back(static_cast<ElementId>(i - 1), static_cast<ElementId>(i));
  }
  return Poset::from_covers(labels, covers);
}

Poset antichain(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("a" + std::to_string(i));
  return Poset::from_covers(labels, {});
}

Poset chain_product(const std::vector<std::size_t>& sizes) {
  std::vector<std::vector<std::size_t>> coords{{}};
  for (std::size_t s : sizes) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : coords) {
      for (std::size_t v = 0; v < s; ++v) {
        auto e = c;
        e.push_back(v);
        next.push_back(std::move(e));
      }
    }
    coords = std::move(next);
  }
  std::vector<std::string> labels;
  for (const auto& c : coords) {
    std::string l;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k > 0 && sizes[k] > 10) l += ',';
      l += std::to_string(c[k]);
    }
    labels.push_back(l);
  }
  return Poset::from_order(labels, [&](ElementId a, ElementId b) {
    for (std::size_t k = 0; k < sizes.size(); ++k) {
      if (coords[a][k] > coords[b][k]) return false;
    }
    return true;
  });
}

Poset divisor_lattice(unsigned n) {
  std::vector<unsigned> divs;
  for (unsigned k = 1; k <= n; ++k) {
    if (n % k == 0) divs.push_back(k);
  }
  std::vector<std::string> labels;
  for (unsigned k : divs) labels.push_back(std::to_string(k));
  return Poset::from_order(labels, [&](ElementId a, ElementId b) { return divs[b] % divs[a] == 0; });
}

Poset diamond_m3() {
  return build_poset({"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

Poset pentagon_n5() {
  return build_poset({"0", "a", "b", "c", "1"},
                     {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

Poset forked_chain() { return build_poset({"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"1", "3"}}); }

Poset nonpure_six() {
  return build_poset({"1", "2", "3", "4", "5", "6"},
                     {{"1", "2"}, {"2", "4"}, {"4", "6"}, {"3", "4"}, {"3", "5"}, {"5", "6"}});
}

Poset random_poset(std::uint64_t seed, std::size_t min_elements, std::size_t max_elements,
                   std::size_t max_rank) {
  std::mt19937_64 rng(seed);
  const std::size_t n = min_elements + rng() % (max_elements - min_elements + 1);
  std::vector<std::size_t> level(n);
  for (auto& l : level) l = rng() % max_rank;
  std::vector<ElementId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);

  std::vector<std::pair<ElementId, ElementId>> covers;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (level[a] < level[b] && rng() % 2 == 0) covers.emplace_back(perm[a], perm[b]);
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return Poset::from_covers(labels, covers);
}

}  // namespace aslkit::catalog
