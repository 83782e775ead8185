#include <catch_amalgamated.hpp>

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "agtk/ca_test.hpp"
#include "agtk/enumerate.hpp"
#include "agtk/fixtures.hpp"
#include "support.hpp"

namespace {

  bool triple_scan(agtk::Magma const& m) {
    std::size_t const n = m.order();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t c = 0; c < n; ++c) {
          if (m(a, m(b, c)) != m(c, m(a, b))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::vector<std::string> lines(std::string const& s) {
    std::vector<std::string> out;
    std::istringstream       in(s);
    for (std::string line; std::getline(in, line);) {
      out.push_back(line);
    }
    return out;
  }

  // The cells of one table row of the extended table: text between the
  // '|' separators, split on blanks. Marked cells keep their brackets.
  std::vector<std::vector<std::string>> blocks(std::string const& line) {
    std::vector<std::vector<std::string>> out;
    std::string                           cur;
    std::vector<std::string>              block;
    auto flush_cell = [&] {
      if (!cur.empty()) {
        block.push_back(cur);
        cur.clear();
      }
    };
    for (char c : line) {
      if (c == '|') {
        flush_cell();
        out.push_back(block);
        block.clear();
      } else if (c == ' ') {
        flush_cell();
      } else {
        cur += c;
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("verdict agrees with the triple scan") {
  std::vector<agtk::Magma> universe;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (auto const& m : agtk::all_ag_groupoids(n)) {
      universe.push_back(m);
    }
  }
  for (auto const& f : agtk::fixture_list()) {
    universe.push_back(f.magma);
  }
  std::mt19937 rng(11);
  for (int i = 0; i < 300; ++i) {
    universe.push_back(agtk::testing::random_magma(rng, 1 + i % 4));
  }
  for (auto const& m : universe) {
    auto const r = agtk::ca_test(m);
    CHECK(r.verdict() == triple_scan(m));
    CHECK(r.verdict()
          == agtk::check_property(m, agtk::PropertyId::cyclic_associative)
                 .holds);
    for (std::size_t x = 0; x < m.order(); ++x) {
      for (std::size_t a = 0; a < m.order(); ++a) {
        for (std::size_t b = 0; b < m.order(); ++b) {
          CHECK(r.star(x, a, b) == m(a, m(b, x)));
          CHECK(r.circle(x, a, b) == m(x, m(a, b)));
        }
      }
    }
  }
}

TEST_CASE("examples") {
  CHECK(agtk::ca_test(agtk::fixture("table3").magma).verdict());
  CHECK(agtk::ca_test(agtk::Magma::constant(1)).verdict());

  auto const t4 = agtk::ca_test(agtk::fixture("table4").magma);
  CHECK_FALSE(t4.verdict());
  REQUIRE(t4.first_mismatch());
  // x = 2, a = b = 3 in the 1-based labels of the table.
  CHECK(*t4.first_mismatch() == agtk::CaMismatch{1, 2, 2});
  CHECK(t4.star(1, 2, 2) == 1);
  CHECK(t4.circle(1, 2, 2) == 0);
}

TEST_CASE("extended table for a CA-AG-groupoid") {
  auto const m    = agtk::fixture("table3").magma;
  auto const text = agtk::render_extended_table(m, agtk::ca_test(m));
  auto const ls   = lines(text);
  CHECK(text.find('[') == std::string::npos);

  // Index row: the base labels, then column x of the table for each x.
  auto const head = blocks(ls[0]);
  REQUIRE(head.size() == 6);
  CHECK(head[1] == std::vector<std::string>{"1", "2", "3", "4"});
  for (std::size_t x = 0; x < 4; ++x) {
    std::vector<std::string> column;
    for (std::size_t b = 0; b < 4; ++b) {
      column.push_back(std::to_string(m(b, x) + 1));
    }
    CHECK(head[2 + x] == column);
  }
  CHECK(head[5] == std::vector<std::string>{"1", "1", "1", "3"});

  // Upper band rows 2..5, lower band rows after the x= headers.
  std::size_t lower = 0;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].find("x=1") != std::string::npos) {
      lower = i + 2;
    }
  }
  REQUIRE(lower != 0);
  for (std::size_t a = 0; a < 4; ++a) {
    auto const up   = blocks(ls[2 + a]);
    auto const down = blocks(ls[lower + a]);
    REQUIRE(up.size() == 6);
    REQUIRE(down.size() == 5);
    for (std::size_t x = 0; x < 4; ++x) {
      CHECK(up[2 + x] == down[1 + x]);
      for (std::size_t b = 0; b < 4; ++b) {
        bool const two = a == 3 && b == 3 && x == 3;
        CHECK(up[2 + x][b] == (two ? "2" : "1"));
      }
    }
  }
}

TEST_CASE("extended table marks the mismatching block") {
  auto const m    = agtk::fixture("table4").magma;
  auto const text = agtk::render_extended_table(m, agtk::ca_test(m));
  auto const ls   = lines(text);
  std::size_t lower = 0;
  for (std::size_t i = 0; i < ls.size(); ++i) {
    if (ls[i].find("x=2") != std::string::npos) {
      lower = i + 2;
    }
  }
  REQUIRE(lower != 0);
  // Row 3 of the x = 2 block: star has 2, circle has 1, both marked.
  auto const up   = blocks(ls[2 + 2]);
  auto const down = blocks(ls[lower + 2]);
  CHECK(up[3][2] == "[2]");
  CHECK(down[2][2] == "[1]");
  // x = 1 is not marked anywhere.
  for (std::size_t a = 0; a < 3; ++a) {
    auto const row = blocks(ls[2 + a]);
    for (auto const& cell : row[2]) {
      CHECK(cell.front() != '[');
    }
  }
}

TEST_CASE("order one renders single cells") {
  auto const m    = agtk::Magma::constant(1);
  auto const text = agtk::render_extended_table(m, agtk::ca_test(m));
  CHECK(text.find('[') == std::string::npos);
  CHECK(lines(text).size() == 8);
  CHECK(blocks(lines(text)[2]) == std::vector<std::vector<std::string>>{
                                      {"1"}, {"1"}, {"1"}});
}
