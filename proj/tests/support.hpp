#ifndef AGTK_TESTS_SUPPORT_HPP_
#define AGTK_TESTS_SUPPORT_HPP_

#include <cstddef>
#include <random>
#include <vector>

#include "agtk/iso.hpp"
#include "agtk/magma.hpp"

namespace agtk::testing {

  inline Magma random_magma(std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<element_type> pick(0, n - 1);
    std::vector<element_type> table(n * n);
    for (auto& e : table) {
      e = pick(rng);
    }
    return Magma(n, std::move(table));
  }

  inline Permutation random_permutation(std::mt19937& rng, std::size_t n) {
    auto p = identity_permutation(n);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  }

  // Calls f on every table of order n (n^(n*n) of them).
  template <typename F>
  void for_each_table(std::size_t n, F&& f) {
    std::vector<element_type> table(n * n, 0);
    while (true) {
      f(Magma(n, table));
      std::size_t i = table.size();
      while (i > 0 && ++table[i - 1] == n) {
        table[--i] = 0;
      }
      if (i == 0) {
        return;
      }
    }
  }

}  // namespace agtk::testing

#endif  // AGTK_TESTS_SUPPORT_HPP_
