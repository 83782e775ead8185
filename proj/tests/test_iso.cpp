#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "agtk/enumerate.hpp"
#include "agtk/fixtures.hpp"
#include "agtk/iso.hpp"
#include "support.hpp"

namespace {

  // Tries every map f with f(ab) = f(a)f(b); independent of the library.
  bool brute_force_isomorphic(agtk::Magma const& x, agtk::Magma const& y) {
    if (x.order() != y.order()) {
      return false;
    }
    std::size_t const        n = x.order();
    std::vector<std::size_t> f(n);
    for (std::size_t i = 0; i < n; ++i) {
      f[i] = i;
    }
    do {
      bool ok = true;
      for (std::size_t a = 0; a < n && ok; ++a) {
        for (std::size_t b = 0; b < n && ok; ++b) {
          ok = f[x(a, b)] == y(f[a], f[b]);
        }
      }
      if (ok) {
        return true;
      }
    } while (std::next_permutation(f.begin(), f.end()));
    return false;
  }

}  // namespace

TEST_CASE("relabel follows the relabelling rule") {
  auto const t1 = agtk::fixture("table1").magma;
  CHECK(agtk::relabel(t1, agtk::identity_permutation(3)) == t1);

  auto const c = agtk::Magma::constant(3);
  CHECK(agtk::relabel(c, {0, 2, 1}) == c);

  auto const swapped = agtk::relabel(t1, {0, 2, 1});
  CHECK(agtk::render_magma(swapped) == "3:0,0,0,0,1,0,0,0,2");
  CHECK(agtk::classify(swapped) == agtk::classify(t1));

  auto const t4 = agtk::fixture("table4").magma;
  agtk::Permutation const p{1, 2, 0};
  auto const r = agtk::relabel(t4, p);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      CHECK(r(p[a], p[b]) == p[t4(a, b)]);
    }
  }
  CHECK_THROWS_AS(agtk::relabel(t4, {0, 0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(agtk::relabel(t4, {0, 1}), std::invalid_argument);
}

TEST_CASE("canonical key examples") {
  CHECK(agtk::canonical_key(agtk::Magma::constant(1)).to_string() == "1:0");
  for (std::size_t n = 1; n <= 5; ++n) {
    auto const c = agtk::Magma::constant(n);
    CHECK(agtk::canonical_key(c).magma() == c);
  }
  std::mt19937 rng(5);
  auto const t5  = agtk::fixture("table5").magma;
  auto const key = agtk::canonical_key(t5);
  for (int i = 0; i < 50; ++i) {
    auto const p = agtk::testing::random_permutation(rng, 4);
    CHECK(agtk::canonical_key(agtk::relabel(t5, p)) == key);
  }
}

TEST_CASE("canonical key is the least relabelled table") {
  std::mt19937 rng(9);
  for (int i = 0; i < 200; ++i) {
    auto const m = agtk::testing::random_magma(rng, 1 + i % 4);
    auto       best = m;
    auto       p    = agtk::identity_permutation(m.order());
    do {
      best = std::min(best, agtk::relabel(m, p));
    } while (std::next_permutation(p.begin(), p.end()));
    auto const key = agtk::canonical_key(m);
    CHECK(key.magma() == best);
    CHECK(agtk::canonical_key(key.magma()) == key);
    CHECK(agtk::is_canonical(key.magma()));
  }
}

TEST_CASE("isomorphism agrees with brute force") {
  std::mt19937 rng(13);
  auto const t1 = agtk::fixture("table1").magma;
  CHECK(agtk::are_isomorphic(t1, agtk::relabel(t1, {2, 0, 1})));
  CHECK_FALSE(agtk::are_isomorphic(t1, agtk::Magma::constant(3)));
  CHECK_FALSE(
      agtk::are_isomorphic(agtk::Magma::constant(2), agtk::Magma::constant(3)));

  auto const ag4 = agtk::all_ag_groupoids(4);
  for (int i = 0; i < 400; ++i) {
    auto const& x = ag4[rng() % ag4.size()];
    // Half the pairs are relabelled copies, half are arbitrary.
    auto const y = i % 2 == 0
                       ? agtk::relabel(ag4[rng() % ag4.size()],
                                       agtk::testing::random_permutation(rng, 4))
                       : agtk::relabel(x, agtk::testing::random_permutation(rng, 4));
    CHECK(agtk::are_isomorphic(x, y) == brute_force_isomorphic(x, y));
  }
  for (int i = 0; i < 400; ++i) {
    std::size_t const n = 1 + i % 3;
    auto const x = agtk::testing::random_magma(rng, n);
    auto const y = agtk::testing::random_magma(rng, n);
    CHECK(agtk::are_isomorphic(x, y) == brute_force_isomorphic(x, y));
  }
}

TEST_CASE("classification is invariant under relabelling") {
  std::mt19937 rng(17);
  std::vector<agtk::Magma> pool;
  for (auto const& f : agtk::fixture_list()) {
    if (f.magma.order() <= 5) {
      pool.push_back(f.magma);
    }
  }
  for (auto const& m : agtk::all_ag_groupoids(4)) {
    pool.push_back(m);
  }
  for (int i = 0; i < 300; ++i) {
    auto const& m = pool[rng() % pool.size()];
    auto const  r = agtk::relabel(m, agtk::testing::random_permutation(rng, m.order()));
    CHECK(agtk::classify(r) == agtk::classify(m));
    CHECK(agtk::canonical_key(r) == agtk::canonical_key(m));
  }
}
