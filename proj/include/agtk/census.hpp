// Per-order classification counts of AG-groupoids, and the published
// reference census they are compared against.

#ifndef AGTK_CENSUS_HPP_
#define AGTK_CENSUS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "enumerate.hpp"
#include "expression.hpp"
#include "properties.hpp"

namespace agtk {

  // Row keys of the census, in report order.
  inline constexpr std::array<std::string_view, 8> census_rows = {
      "AG",
      "CA",
      "associative",
      "non-associative",
      "CA & non-associative",
      "associative & !CA",
      "CA & associative",
      "associative & !commutative & CA"};

  class EnumerationReport {
   public:
    EnumerationReport() = default;
    explicit EnumerationReport(std::size_t n) : _order(n) {
      for (auto row : census_rows) {
        _counts.emplace_back(std::string(row), 0);
      }
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] std::uint64_t count(std::string_view key) const {
      for (auto const& [k, v] : _counts) {
        if (k == key) {
          return v;
        }
      }
      throw std::out_of_range("no census row '" + std::string(key) + "'");
    }

    void set(std::string_view key, std::uint64_t value) {
      for (auto& [k, v] : _counts) {
        if (k == key) {
          v = value;
          return;
        }
      }
      _counts.emplace_back(std::string(key), value);
    }

    [[nodiscard]] std::vector<std::pair<std::string, std::uint64_t>> const&
    counts() const noexcept {
      return _counts;
    }

    // The three additive identities between rows.
    [[nodiscard]] bool consistent() const {
      return count("AG") == count("associative") + count("non-associative")
             && count("CA")
                    == count("CA & associative")
                           + count("CA & non-associative")
             && count("associative")
                    == count("CA & associative") + count("associative & !CA");
    }

   private:
    std::size_t                                      _order = 0;
    std::vector<std::pair<std::string, std::uint64_t>> _counts;
  };

  namespace detail {
    struct CensusAccumulator {
      std::uint64_t ag          = 0;
      std::uint64_t ca          = 0;
      std::uint64_t assoc       = 0;
      std::uint64_t ca_assoc    = 0;
      std::uint64_t ca_assoc_nc = 0;
      std::vector<PropertyExpr> const* filters = nullptr;
      std::vector<std::uint64_t>       filter_counts;

      [[nodiscard]] CensusAccumulator fresh() const {
        CensusAccumulator result;
        result.filters = filters;
        return result;
      }

      void add(TableView const& m) {
        bool const is_ca
            = check_property(m, PropertyId::cyclic_associative).holds;
        bool const is_assoc = check_property(m, PropertyId::associative).holds;
        ++ag;
        ca += is_ca;
        assoc += is_assoc;
        ca_assoc += is_ca && is_assoc;
        if (is_ca && is_assoc
            && !check_property(m, PropertyId::commutative).holds) {
          ++ca_assoc_nc;
        }
        if (filters != nullptr && !filters->empty()) {
          filter_counts.resize(filters->size(), 0);
          auto const v = classify(m);
          for (std::size_t i = 0; i < filters->size(); ++i) {
            filter_counts[i] += (*filters)[i].evaluate(v);
          }
        }
      }

      void merge(CensusAccumulator&& o) {
        ag += o.ag;
        ca += o.ca;
        assoc += o.assoc;
        ca_assoc += o.ca_assoc;
        ca_assoc_nc += o.ca_assoc_nc;
        filter_counts.resize(std::max(filter_counts.size(),
                                      o.filter_counts.size()),
                             0);
        for (std::size_t i = 0; i < o.filter_counts.size(); ++i) {
          filter_counts[i] += o.filter_counts[i];
        }
      }
    };

    inline EnumerationReport to_report(std::size_t n,
                                       CensusAccumulator const& acc) {
      EnumerationReport report(n);
      report.set("AG", acc.ag);
      report.set("CA", acc.ca);
      report.set("associative", acc.assoc);
      report.set("non-associative", acc.ag - acc.assoc);
      report.set("CA & non-associative", acc.ca - acc.ca_assoc);
      report.set("associative & !CA", acc.assoc - acc.ca_assoc);
      report.set("CA & associative", acc.ca_assoc);
      report.set("associative & !commutative & CA", acc.ca_assoc_nc);
      return report;
    }
  }  // namespace detail

  // The budget ran out during a census; partial() counts only the completed
  // prefixes.
  class partial_census : public budget_exceeded {
   public:
    partial_census(budget_exceeded const& cause, EnumerationReport partial)
        : budget_exceeded(cause), _partial(std::move(partial)) {}

    [[nodiscard]] EnumerationReport const& partial() const noexcept {
      return _partial;
    }

   private:
    EnumerationReport _partial;
  };

  // Enumerates the AG-groupoids of order n and counts the census rows. Each
  // extra expression adds a row keyed by its rendering.
  inline EnumerationReport
  classify_census(std::size_t                      n,
                  EnumerationOptions const&        options = {},
                  std::vector<PropertyExpr> const& extra   = {}) {
    detail::CensusAccumulator total;
    total.filters = &extra;
    auto report_of = [&] {
      auto report = detail::to_report(n, total);
      for (std::size_t i = 0; i < extra.size(); ++i) {
        report.set(extra[i].to_string(),
                   i < total.filter_counts.size() ? total.filter_counts[i]
                                                  : 0);
      }
      return report;
    };
    try {
      enumerate_ag_into(n, total, options);
    } catch (budget_exceeded const& e) {
      throw partial_census(e, report_of());
    }
    return report_of();
  }

  // Published census values for orders 2..6, one per census row.
  struct PublishedRow {
    std::string_view             key;
    std::string_view             label;
    std::array<std::uint64_t, 5> values;
  };

  inline constexpr std::size_t published_min_order = 2;
  inline constexpr std::size_t published_max_order = 6;

  inline constexpr std::array<PublishedRow, 8> published_census = {{
      {"AG", "AG-groupoids", {3, 20, 331, 31913, 40104513}},
      {"CA", "CA-AG-groupoids", {3, 12, 64, 491, 9068}},
      {"associative", "Associative AG-groupoids", {3, 12, 62, 446, 7510}},
      {"non-associative",
       "Non-associative AG-groupoids",
       {0, 8, 269, 31467, 40097003}},
      {"CA & non-associative", "CA, Non-associative", {0, 0, 2, 45, 1565}},
      {"associative & !CA", "Associative, Non-CA", {0, 0, 0, 0, 7}},
      {"CA & associative", "CA and Associative", {0, 12, 62, 446, 7503}},
      {"associative & !commutative & CA",
       "Associative & non-commutative, CA",
       {0, 0, 4, 121, 5360}},
  }};

  // A published cell that contradicts the published row arithmetic.
  struct PublishedDiscrepancy {
    std::size_t      order;
    std::string_view key;
    std::uint64_t    published;
    std::uint64_t    derived;
    std::string_view note;
  };

  inline constexpr std::array<PublishedDiscrepancy, 1> published_discrepancies
      = {{{2,
           "CA & associative",
           0,
           3,
           "published 0 contradicts CA = (CA & associative) + "
           "(CA & non-associative) = 3 + 0 and associative = 3 with "
           "(associative & !CA) = 0"}}};

  inline std::optional<PublishedDiscrepancy>
  published_discrepancy(std::size_t n, std::string_view key) {
    for (auto const& d : published_discrepancies) {
      if (d.order == n && d.key == key) {
        return d;
      }
    }
    return std::nullopt;
  }

  inline std::optional<std::uint64_t> published_value(std::size_t      n,
                                                      std::string_view key) {
    if (n < published_min_order || n > published_max_order) {
      return std::nullopt;
    }
    for (auto const& row : published_census) {
      if (row.key == key) {
        return row.values[n - published_min_order];
      }
    }
    return std::nullopt;
  }

  // The value a correct census must produce: the published value, or the
  // arithmetic-consistent value where the published cell is flagged.
  inline std::optional<std::uint64_t> expected_value(std::size_t      n,
                                                     std::string_view key) {
    if (auto d = published_discrepancy(n, key)) {
      return d->derived;
    }
    return published_value(n, key);
  }

  struct CensusComparison {
    std::string_view             key;
    std::string_view             label;
    std::uint64_t                computed;
    std::optional<std::uint64_t> published;
    std::optional<std::uint64_t> expected;
    std::optional<PublishedDiscrepancy> discrepancy;

    [[nodiscard]] bool pass() const noexcept {
      return expected && computed == *expected;
    }
  };

  inline std::vector<CensusComparison>
  compare_with_published(EnumerationReport const& report) {
    std::vector<CensusComparison> result;
    for (auto const& row : published_census) {
      result.push_back({row.key,
                        row.label,
                        report.count(row.key),
                        published_value(report.order(), row.key),
                        expected_value(report.order(), row.key),
                        published_discrepancy(report.order(), row.key)});
    }
    return result;
  }

}  // namespace agtk

#endif  // AGTK_CENSUS_HPP_
