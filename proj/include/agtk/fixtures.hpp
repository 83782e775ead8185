// The example tables from the CA-AG-groupoid literature, transcribed
// 0-based (the first symbol of each published table maps to 0), together
// with the property combinations and falsified instances stated for them.

#ifndef AGTK_FIXTURES_HPP_
#define AGTK_FIXTURES_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magma.hpp"
#include "properties.hpp"

namespace agtk {

  // An instance of a law the text says fails in the fixture, variables
  // 0-based in the order (a, b, c, d) of the law's definition.
  struct StatedFailure {
    PropertyId                law;
    std::vector<element_type> values;
  };

  struct Fixture {
    std::string                name;
    Magma                      magma;
    std::string                assertion;  // a property expression
    std::vector<StatedFailure> stated_failures;
    std::string                description;
  };

  inline std::vector<Fixture> const& fixture_list() {
    using enum PropertyId;
    static std::vector<Fixture> const list = {
        {"table1",
         parse_magma("3:0,0,0,0,1,0,0,0,2"),
         "ag & cyclic_associative",
         {},
         "CA-AG-groupoid of lowest order"},
        {"table3",
         parse_magma("4:0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,2"),
         "ag & cyclic_associative",
         {},
         "AG-groupoid passing the CA-test"},
        {"table4",
         parse_magma("3:0,0,0,0,0,0,0,1,0"),
         "ag & !cyclic_associative",
         {},
         "AG-groupoid failing the CA-test"},
        {"table5",
         parse_magma("4:1,2,2,2,3,2,2,2,2,2,2,2,2,2,2,2"),
         "ag & cyclic_associative & !associative",
         {},
         "non-associative CA-AG-groupoid of lowest order"},
        {"table6",
         parse_magma("3:0,1,2,2,0,1,1,2,0"),
         "ag & bol_star & !cyclic_associative",
         {{cyclic_associative, {0, 1, 2}}},
         "Bol*-AG-groupoid that is not CA"},
        {"table7",
         parse_magma("3:0,0,0,0,0,0,0,1,0"),
         "ag & paramedial & !cyclic_associative",
         {{cyclic_associative, {2, 2, 1}}},
         "paramedial AG-groupoid that is not CA"},
        {"table8",
         parse_magma("3:0,0,0,0,0,0,0,1,0"),
         "ag & left_nuclear_square & !cyclic_associative",
         {{cyclic_associative, {2, 2, 1}}},
         "left nuclear square AG-groupoid that is not CA"},
        {"table9",
         parse_magma("3:0,0,0,0,0,2,0,1,0"),
         "ag & right_nuclear_square & !cyclic_associative",
         {{cyclic_associative, {2, 2, 1}}},
         "right nuclear square AG-groupoid that is not CA"},
        {"table10",
         parse_magma("3:0,0,0,0,0,0,0,1,1"),
         "ag & middle_nuclear_square & !cyclic_associative",
         {{cyclic_associative, {2, 2, 1}}},
         "middle nuclear square AG-groupoid that is not CA"},
        {"table11",
         parse_magma("5:0,0,0,0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,0,1,0,0,0,2,3"),
         "ag & cyclic_associative & !middle_nuclear_square",
         {{middle_nuclear_square, {4, 4, 4}}},
         "CA-AG-groupoid that is not middle nuclear square"},
        {"table12",
         parse_magma("4:1,2,2,2,3,2,2,2,2,2,2,2,2,2,2,2"),
         "ag & cyclic_associative & !ag_star",
         {{ag_star, {0, 0, 0}}},
         "CA-AG-groupoid that is not AG*"},
        {"table13",
         parse_magma("8:3,3,5,3,3,3,7,3,"
                     "4,3,3,3,3,7,3,3,"
                     "3,6,3,3,7,3,3,3,"
                     "3,3,3,3,3,3,3,3,"
                     "3,3,3,3,3,3,3,3,"
                     "3,3,3,3,3,3,3,3,"
                     "3,3,3,3,3,3,3,3,"
                     "3,3,3,3,3,3,3,3"),
         "ag & cyclic_associative & !ag_star_star & !right_commutative",
         {{ag_star_star, {2, 1, 0}}, {right_commutative, {0, 1, 2}}},
         "CA-AG-groupoid of order 8 that is neither AG** nor right "
         "commutative"},
        {"table14",
         parse_magma("3:0,0,0,0,0,2,0,1,0"),
         "ag & ag_star_star & !cyclic_associative",
         {{cyclic_associative, {1, 1, 2}}},
         "AG**-groupoid that is not CA"},
        {"table15",
         parse_magma("3:0,0,0,0,0,0,1,1,1"),
         "ag & right_commutative & !cyclic_associative",
         {{cyclic_associative, {2, 2, 0}}},
         "right commutative AG-groupoid that is not CA"},
        {"table16",
         parse_magma("3:0,0,0,0,0,0,1,1,1"),
         "ag & right_commutative & !ag_star_star",
         {{ag_star_star, {0, 2, 1}}},
         "right commutative AG-groupoid that is not AG**"},
        {"table17",
         parse_magma("3:0,0,0,0,0,2,0,1,0"),
         "ag & ag_star_star & !right_commutative",
         {{right_commutative, {2, 1, 2}}},
         "AG**-groupoid that is not right commutative"},
        {"table18",
         parse_magma("4:0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,2"),
         "ag & cyclic_associative & !ag_star & !band",
         {{ag_star, {3, 3, 3}}, {band, {1}}},
         "CA-AG-groupoid that is not an AG*-band"},
        {"table19",
         parse_magma("3:0,0,0,0,0,0,1,1,0"),
         "ag & left_commutative & !cyclic_associative",
         {{cyclic_associative, {2, 1, 0}}},
         "left commutative AG-groupoid that is not CA"},
        {"table20",
         parse_magma("4:0,0,0,0,0,0,0,0,0,0,0,1,0,0,0,2"),
         "ag & left_commutative & cyclic_associative & !ag_star",
         {{ag_star, {3, 3, 3}}},
         "left commutative CA-AG-groupoid that is not AG*"},
        {"table21",
         parse_magma("4:0,0,2,2,0,0,3,3,2,2,0,0,2,2,0,0"),
         "ag & bicommutative & !cyclic_associative & !ag_star",
         {},
         "bicommutative AG-groupoid that is neither CA nor AG*"},
        {"table22",
         parse_magma("4:2,2,2,2,3,2,2,2,2,2,2,2,2,2,2,2"),
         "ag & cyclic_associative & ag_star & !commutative",
         {},
         "non-commutative CA-AG*-groupoid"},
    };
    return list;
  }

  inline std::map<std::string, Magma> fixtures() {
    std::map<std::string, Magma> result;
    for (auto const& f : fixture_list()) {
      result.emplace(f.name, f.magma);
    }
    return result;
  }

  inline Fixture const& fixture(std::string_view name) {
    for (auto const& f : fixture_list()) {
      if (f.name == name) {
        return f;
      }
    }
    throw std::invalid_argument("no fixture named '" + std::string(name)
                                + "'");
  }

}  // namespace agtk

#endif  // AGTK_FIXTURES_HPP_
