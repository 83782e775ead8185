#include <catch_amalgamated.hpp>

#include <algorithm>
#include <chrono>
#include <set>
#include <vector>

#include "agtk/enumerate.hpp"
#include "agtk/iso.hpp"
#include "agtk/properties.hpp"
#include "support.hpp"

namespace {

  std::set<agtk::Magma> oracle(std::size_t n) {
    std::set<agtk::Magma> classes;
    agtk::testing::for_each_table(n, [&](agtk::Magma const& m) {
      if (agtk::check_property(m, agtk::PropertyId::ag).holds) {
        classes.insert(agtk::canonical_key(m).magma());
      }
    });
    return classes;
  }

}  // namespace

TEST_CASE("matches the filter-then-canonicalise oracle for n <= 3") {
  for (std::size_t n = 1; n <= 3; ++n) {
    auto const list = agtk::all_ag_groupoids(n);
    std::set<agtk::Magma> const found(list.begin(), list.end());
    CHECK(found.size() == list.size());
    CHECK(found == oracle(n));
  }
  CHECK(agtk::all_ag_groupoids(1).size() == 1);
  CHECK(agtk::all_ag_groupoids(2).size() == 3);
  CHECK(agtk::all_ag_groupoids(3).size() == 20);
}

TEST_CASE("emitted tables are canonical AG-groupoids") {
  auto const list = agtk::all_ag_groupoids(4);
  CHECK(list.size() == 331);
  std::set<agtk::Magma> distinct(list.begin(), list.end());
  CHECK(distinct.size() == list.size());
  for (auto const& m : list) {
    CHECK(agtk::check_property(m, agtk::PropertyId::ag).holds);
    CHECK(agtk::canonical_key(m).magma() == m);
  }
  CHECK(agtk::enumerate_ag(1, nullptr) == 1);
  CHECK(agtk::all_ag_groupoids(1).front() == agtk::Magma::constant(1));
}

TEST_CASE("order five count") {
  CHECK(agtk::enumerate_ag(5, nullptr) == 31913);
}

TEST_CASE("single job output is deterministic and multi job agrees") {
  auto const a = agtk::all_ag_groupoids(4);
  auto const b = agtk::all_ag_groupoids(4);
  CHECK(a == b);
  auto c = agtk::all_ag_groupoids(4, 3);
  auto sa = a;
  std::sort(sa.begin(), sa.end());
  std::sort(c.begin(), c.end());
  CHECK(sa == c);
}

TEST_CASE("prefix ranges partition the count") {
  for (std::size_t n : {3, 4, 5}) {
    auto const prefixes = agtk::first_row_prefixes(n);
    REQUIRE(!prefixes.empty());
    std::uint64_t sum   = 0;
    // Three uneven ranges covering the whole index space.
    std::vector<std::uint64_t> cuts{0, 1,
                                    std::max<std::uint64_t>(
                                        1, prefixes[prefixes.size() / 2].index),
                                    agtk::prefix_space(n)};
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      agtk::EnumerationOptions options;
      options.prefixes = agtk::PrefixRange{cuts[i], cuts[i + 1]};
      sum += agtk::enumerate_ag(n, nullptr, options);
    }
    CHECK(sum == agtk::enumerate_ag(n, nullptr));
  }
}

TEST_CASE("prefix reports add up") {
  agtk::EnumerationOptions options;
  std::uint64_t            total = 0, calls = 0;
  options.on_prefix = [&](agtk::PrefixDone const& d) {
    total += d.count;
    ++calls;
    CHECK(d.completed == calls);
  };
  CHECK(agtk::enumerate_ag(4, nullptr, options) == 331);
  CHECK(total == 331);
  CHECK(calls == agtk::first_row_prefixes(4).size());
}

TEST_CASE("budget exhaustion reports progress") {
  agtk::EnumerationOptions options;
  options.budget = std::chrono::nanoseconds(1);
  try {
    (void)agtk::enumerate_ag(5, nullptr, options);
    FAIL("budget not enforced");
  } catch (agtk::budget_exceeded const& e) {
    auto const& p = e.progress();
    CHECK(p.completed_prefixes < p.total_prefixes);
    CHECK(p.unfinished.size() == p.total_prefixes - p.completed_prefixes);
    // Finishing just the unfinished prefixes completes the count.
    std::uint64_t rest = 0;
    for (auto index : p.unfinished) {
      agtk::EnumerationOptions one;
      one.prefixes = agtk::PrefixRange{index, index + 1};
      rest += agtk::enumerate_ag(5, nullptr, one);
    }
    CHECK(p.count + rest == 31913);
  }
}

TEST_CASE("order bounds") {
  CHECK_THROWS_AS(agtk::enumerate_ag(0, nullptr), std::invalid_argument);
  CHECK_THROWS_AS(agtk::enumerate_ag(agtk::max_search_order + 1, nullptr),
                  std::invalid_argument);
}
