#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "aslkit/poset.hpp"

namespace aslkit::catalog {

Poset chain(std::size_t n);      // labels "0".."n-1"
Poset antichain(std::size_t n);  // labels "a0".."a{n-1}"
// Product of chains of the given sizes; labels are coordinate digits, e.g. "01".
Poset chain_product(const std::vector<std::size_t>& sizes);
Poset divisor_lattice(unsigned n);  // labels are the divisors
Poset diamond_m3();                 // 0 < a, b, c < 1
Poset pentagon_n5();                // 0 < a < b < 1, 0 < c < 1

// 0 < 1 < 2 and 1 < 3.
Poset forked_chain();
// Six elements "1".."6": 1<2<4<6, 3<4, 3<5<6 (two minima, one maximum).
Poset nonpure_six();

// Seeded random poset built from a random layering into at most `max_rank`
// levels, so its rank never exceeds `max_rank`. Element ids are shuffled.
Poset random_poset(std::uint64_t seed, std::size_t min_elements, std::size_t max_elements,
                   std::size_t max_rank);

}  // namespace aslkit::catalog
