// Finite-scale checks of the theorems about CA-AG-groupoids.
//
// Each claim is a list of legs. An implication leg must hold on every magma
// of its universe up to the requested order; a witness leg names a fixture
// that must satisfy an expression, and where the fixture's order is small
// the enumerated AG-groupoids of that order are searched for another
// instance. Substructure legs check the idempotent lemmas directly.

#ifndef AGTK_THEOREMS_HPP_
#define AGTK_THEOREMS_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "enumerate.hpp"
#include "expression.hpp"
#include "fixtures.hpp"
#include "magma.hpp"
#include "properties.hpp"

namespace agtk {

  enum class ClaimKind { implication, equivalence, witness_exists, substructure };

  enum class ClaimStatus {
    verified,
    counterexample,
    witness_found,
    witness_missing
  };

  inline constexpr std::string_view to_string(ClaimKind k) noexcept {
    switch (k) {
      case ClaimKind::implication:
        return "implication";
      case ClaimKind::equivalence:
        return "equivalence";
      case ClaimKind::witness_exists:
        return "witness-exists";
      case ClaimKind::substructure:
        return "substructure";
    }
    return "";
  }

  inline constexpr std::string_view to_string(ClaimStatus s) noexcept {
    switch (s) {
      case ClaimStatus::verified:
        return "verified";
      case ClaimStatus::counterexample:
        return "counterexample";
      case ClaimStatus::witness_found:
        return "witness-found";
      case ClaimStatus::witness_missing:
        return "witness-missing";
    }
    return "";
  }

  // Where an implication leg is checked.
  enum class Universe {
    ag_groupoids,       // enumerated AG-groupoids plus the fixtures
    commutative_magmas  // every commutative table, not only AG
  };

  // The two idempotent lemmas for CA magmas.
  enum class Substructure {
    idempotents_semilattice,  // E(S) is closed and a semilattice
    idempotent_identity       // e is a two-sided identity on eS and Se
  };

  struct ClaimLeg {
    // Implication legs: every magma satisfying premise satisfies conclusion.
    std::string premise;
    std::string conclusion;
    // Extra premise: some element is both left and right cancellative.
    bool needs_cancellative = false;
    // Witness legs.
    std::string fixture;
    std::string expression;
    // Substructure legs (premise cyclic_associative).
    std::optional<Substructure> substructure;
  };

  struct Claim {
    std::string           id;
    ClaimKind             kind;
    std::string           statement;
    std::vector<ClaimLeg> legs;
    Universe              universe = Universe::ag_groupoids;
    // The statement rests on a result quoted from elsewhere.
    bool                  external_premise = false;
  };

  struct Evidence {
    std::optional<Magma>      magma;
    std::string               fixture;  // set when the magma is a fixture
    std::vector<element_type> tuple;
    std::optional<PropertyId> law;      // the law the tuple falsifies
    std::string               note;
  };

  struct LegResult {
    std::string             description;
    ClaimStatus             status;
    std::size_t             scope   = 0;  // largest order examined
    std::uint64_t           checked = 0;  // magmas examined
    std::optional<Evidence> evidence;
  };

  struct ClaimResult {
    std::string            id;
    ClaimKind              kind;
    ClaimStatus            status;
    std::size_t            scope   = 0;
    std::uint64_t          checked = 0;
    bool                   external_premise = false;
    std::vector<LegResult> legs;

    [[nodiscard]] bool passed() const noexcept {
      return status == ClaimStatus::verified
             || status == ClaimStatus::witness_found;
    }
  };

  inline constexpr std::size_t default_claim_order = 4;
  inline constexpr std::size_t max_claim_order     = 5;
  // Largest order for the witness search around a fixture.
  inline constexpr std::size_t max_witness_search_order = 5;
  // Commutative magmas are generated without isomorph rejection.
  inline constexpr std::size_t max_commutative_order = 4;

  // The requested order is beyond what the checker enumerates.
  class claim_budget_error : public std::runtime_error {
   public:
    claim_budget_error(std::string const& claim, std::size_t order)
        : std::runtime_error("claim " + claim + ": order " + std::to_string(order)
                             + " exceeds the enumeration budget (at most "
                             + std::to_string(max_claim_order) + ")"),
          _claim(claim) {}

    [[nodiscard]] std::string const& claim() const noexcept {
      return _claim;
    }

   private:
    std::string _claim;
  };

  inline std::vector<Claim> const& claim_registry() {
    using K = ClaimKind;
    auto imp = [](std::string p, std::string c) {
      return ClaimLeg{std::move(p), std::move(c), false, {}, {}, {}};
    };
    auto wit = [](std::string f, std::string e) {
      return ClaimLeg{{}, {}, false, std::move(f), std::move(e), {}};
    };
    auto sub = [](Substructure s) {
      return ClaimLeg{"cyclic_associative", {}, false, {}, {}, s};
    };
    static std::vector<Claim> const registry = {
        {"C1", K::implication, "Every CA-AG-groupoid is Bol*",
         {imp("cyclic_associative", "bol_star")}},
        {"C2", K::witness_exists, "A Bol*-AG-groupoid of order 3 that is not CA",
         {wit("table6", "ag & bol_star & !cyclic_associative")}},
        {"C3", K::implication, "Every Bol*-AG-band is a commutative semigroup",
         {imp("bol_star & band", "commutative & associative")}},
        {"C4", K::implication, "Every CA-AG-band is a commutative semigroup",
         {imp("cyclic_associative & band", "commutative & associative")}},
        {"C5", K::implication, "Every CA-AG-groupoid is paramedial",
         {imp("cyclic_associative", "paramedial")},
         Universe::ag_groupoids, true},
        {"C6", K::witness_exists,
         "A paramedial AG-groupoid of order 3 that is not CA",
         {wit("table7", "ag & paramedial & !cyclic_associative")}},
        {"C7", K::implication, "Every paramedial AG-band is CA",
         {imp("paramedial & band", "cyclic_associative")},
         Universe::ag_groupoids, true},
        {"C8", K::implication,
         "Every CA-AG-groupoid is left and right nuclear square",
         {imp("cyclic_associative",
              "left_nuclear_square & right_nuclear_square")}},
        {"C9", K::witness_exists,
         "Nuclear square classes and CA are independent",
         {wit("table8", "ag & left_nuclear_square & !cyclic_associative"),
          wit("table9", "ag & right_nuclear_square & !cyclic_associative"),
          wit("table10", "ag & middle_nuclear_square & !cyclic_associative"),
          wit("table11", "ag & cyclic_associative & !middle_nuclear_square")}},
        {"C10", K::implication,
         "Every left alternative CA-AG-groupoid is middle nuclear square",
         {imp("left_alternative & cyclic_associative",
              "middle_nuclear_square")}},
        {"C11", K::implication,
         "Every left alternative CA-AG-groupoid is nuclear square",
         {imp("left_alternative & cyclic_associative", "nuclear_square")}},
        {"C12", K::implication,
         "Every right alternative CA-AG-groupoid is nuclear square",
         {imp("right_alternative & cyclic_associative", "nuclear_square")},
         Universe::ag_groupoids, true},
        {"C13", K::witness_exists, "CA is independent of AG* and AG**",
         {wit("table12", "ag & cyclic_associative & !ag_star"),
          wit("table13", "ag & cyclic_associative & !ag_star_star"),
          wit("table14", "ag & ag_star_star & !cyclic_associative")}},
        {"C14", K::implication,
         "Every right commutative AG**-groupoid is CA",
         {imp("right_commutative & ag_star_star", "cyclic_associative")}},
        {"C15", K::witness_exists,
         "Right commutativity, AG** and CA are pairwise independent",
         {wit("table15", "ag & right_commutative & !cyclic_associative"),
          wit("table16", "ag & right_commutative & !ag_star_star"),
          wit("table13", "ag & cyclic_associative & !right_commutative"),
          wit("table17", "ag & ag_star_star & !right_commutative")}},
        {"C16", K::equivalence,
         "A CA-AG-groupoid is right commutative iff it is AG**",
         {imp("cyclic_associative", "right_commutative <-> ag_star_star")}},
        {"C17", K::implication, "An AG*-band is CA",
         {imp("ag_star & band", "cyclic_associative")}},
        {"C18", K::implication, "An AG*-band is a semigroup",
         {imp("ag_star & band", "associative")}},
        {"C19", K::implication, "Every AG**-band and AG**-3-band is CA",
         {imp("ag_star_star & band", "cyclic_associative"),
          imp("ag_star_star & three_band", "cyclic_associative")},
         Universe::ag_groupoids, true},
        {"C20", K::implication, "Every AG-band with a left identity is CA",
         {imp("band & has_left_identity & ag", "cyclic_associative")},
         Universe::ag_groupoids, true},
        {"C21", K::implication,
         "Every CA-AG-3-band is a commutative semigroup",
         {imp("cyclic_associative & three_band",
              "commutative & associative")}},
        {"C22", K::substructure,
         "In a CA-AG-groupoid E(S) is a semilattice",
         {sub(Substructure::idempotents_semilattice)}},
        {"C23", K::substructure,
         "In a CA-AG-groupoid each idempotent e is the identity of eS and Se",
         {sub(Substructure::idempotent_identity)}},
        {"C24", K::witness_exists,
         "A left commutative AG-groupoid of order 3 that is not CA",
         {wit("table19", "ag & left_commutative & !cyclic_associative")}},
        {"C25", K::implication,
         "Every left commutative AG*-groupoid is CA",
         {imp("left_commutative & ag_star", "cyclic_associative")}},
        {"C26", K::witness_exists,
         "A left commutative CA-AG-groupoid that is not AG*",
         {wit("table20",
              "ag & left_commutative & cyclic_associative & !ag_star")}},
        {"C27", K::implication,
         "Every CA-AG*-groupoid is bicommutative and a semigroup",
         {imp("cyclic_associative & ag_star",
              "left_commutative & right_commutative"),
          imp("cyclic_associative & ag_star", "associative")}},
        {"C28", K::witness_exists,
         "Bicommutativity does not give CA, and CA-AG* need not commute",
         {wit("table21",
              "ag & bicommutative & !cyclic_associative & !ag_star"),
          wit("table22", "ag & cyclic_associative & ag_star & !commutative")}},
        {"C29", K::implication, "Every commutative semigroup is CA",
         {imp("commutative & associative", "cyclic_associative")},
         Universe::commutative_magmas},
        {"C30", K::implication,
         "Every commutative AG-groupoid is associative",
         {imp("commutative & ag", "associative")}},
        {"X1", K::implication,
         "Every right commutative CA-AG-groupoid with a cancellative element "
         "is T1 and T3",
         {ClaimLeg{"right_commutative & cyclic_associative", "t1 & t3", true,
                   {}, {}, {}}},
         Universe::ag_groupoids, true},
        {"X2", K::implication, "Every CA-T1-AG-groupoid is right commutative",
         {imp("cyclic_associative & t1", "right_commutative")},
         Universe::ag_groupoids, true},
        {"X3", K::implication,
         "Every CA-T1-AG-3-band is bicommutative and a semigroup",
         {imp("cyclic_associative & t1 & three_band",
              "bicommutative & associative")},
         Universe::ag_groupoids, true},
    };
    return registry;
  }

  inline Claim const& find_claim(std::string_view id) {
    for (auto const& c : claim_registry()) {
      if (c.id == id) {
        return c;
      }
    }
    throw std::invalid_argument("unknown claim '" + std::string(id) + "'");
  }

  // Sorted canonical AG-groupoids per order, enumerated once and shared.
  class UniverseCache {
   public:
    explicit UniverseCache(unsigned jobs = 1) : _jobs(jobs) {}

    std::vector<Magma> const& ag(std::size_t n) {
      std::lock_guard lock(_mtx);
      auto it = _ag.find(n);
      if (it == _ag.end()) {
        auto all = all_ag_groupoids(n, _jobs);
        std::sort(all.begin(), all.end());
        it = _ag.emplace(n, std::move(all)).first;
      }
      return it->second;
    }

   private:
    unsigned                                _jobs;
    std::mutex                              _mtx;
    std::map<std::size_t, std::vector<Magma>> _ag;
  };

  namespace detail {
    // Property lookups computed on first use.
    class LazyProperties {
     public:
      explicit LazyProperties(Magma const& m) : _m(m) {}

      bool operator()(PropertyId p) {
        auto& slot = _known[static_cast<std::size_t>(p)];
        if (!slot) {
          slot = check_property(_m, p).holds;
        }
        return *slot;
      }

     private:
      Magma const&                                     _m;
      std::array<std::optional<bool>, property_count> _known{};
    };

    inline bool has_cancellative_element(Magma const& m) {
      auto const c = cancellative_elements(m);
      return std::any_of(c.left.begin(), c.left.end(), [&](element_type a) {
        return std::find(c.right.begin(), c.right.end(), a) != c.right.end();
      });
    }

    struct ParsedLeg {
      PropertyExpr premise;
      PropertyExpr conclusion;
      bool         needs_cancellative;
    };

    inline bool premise_holds(ParsedLeg const& leg, Magma const& m,
                              LazyProperties& props) {
      return leg.premise.evaluate(std::ref(props))
             && (!leg.needs_cancellative || has_cancellative_element(m));
    }

    // Evidence for an implication failure: the magma and, where one exists,
    // a falsifying tuple of a conclusion atom that fails.
    inline Evidence implication_evidence(ParsedLeg const& leg, Magma const& m,
                                         std::string fixture) {
      Evidence e;
      e.magma   = m;
      e.fixture = std::move(fixture);
      for (auto p : leg.conclusion.atoms()) {
        auto r = check_property(m, p);
        if (!r.holds && r.witness) {
          e.law   = r.witness->law;
          e.tuple = r.witness->values;
          e.note  = "fails " + std::string(name(r.witness->law));
          break;
        }
      }
      return e;
    }

    // Calls f on every commutative table of order n until it returns false.
    inline void for_each_commutative(std::size_t n,
                                     std::function<bool(Magma const&)> const& f) {
      std::vector<std::size_t> cells;
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
          cells.push_back(a * n + b);
        }
      }
      std::vector<element_type> table(n * n, 0);
      std::vector<element_type> digits(cells.size(), 0);
      while (true) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          auto const a = cells[i] / n, b = cells[i] % n;
          table[a * n + b] = digits[i];
          table[b * n + a] = digits[i];
        }
        if (!f(Magma(n, table))) {
          return;
        }
        std::size_t i = cells.size();
        while (i > 0) {
          --i;
          if (++digits[i] < n) {
            break;
          }
          digits[i] = 0;
          if (i == 0) {
            return;
          }
        }
      }
    }

    // The first violation of a substructure lemma, if any.
    inline std::optional<Evidence> substructure_failure(Magma const& m,
                                                        Substructure s) {
      auto const e_set = idempotents(m);
      auto in_e = [&](std::size_t a) {
        return std::find(e_set.begin(), e_set.end(), a) != e_set.end();
      };
      auto fail = [&](std::vector<element_type> tuple, std::string note) {
        Evidence ev;
        ev.magma = m;
        ev.tuple = std::move(tuple);
        ev.note  = std::move(note);
        return ev;
      };
      if (s == Substructure::idempotents_semilattice) {
        for (auto e : e_set) {
          for (auto f : e_set) {
            if (!in_e(m(e, f))) {
              return fail({e, f}, "E(S) not closed");
            }
            if (m(e, f) != m(f, e)) {
              return fail({e, f}, "E(S) not commutative");
            }
            for (auto g : e_set) {
              if (m(m(e, f), g) != m(e, m(f, g))) {
                return fail({e, f, g}, "E(S) not associative");
              }
            }
          }
        }
        return std::nullopt;
      }
      std::size_t const n = m.order();
      for (auto e : e_set) {
        for (std::size_t a = 0; a < n; ++a) {
          for (element_type t : {m(e, a), m(a, e)}) {
            if (m(e, t) != t || m(t, e) != t) {
              return fail({e, t}, "e is not an identity on eS and Se");
            }
          }
        }
      }
      return std::nullopt;
    }

    inline ParsedLeg parse_leg(ClaimLeg const& leg) {
      return {PropertyExpr::parse(leg.premise),
              PropertyExpr::parse(leg.conclusion),
              leg.needs_cancellative};
    }
  }  // namespace detail

  inline std::string describe(ClaimLeg const& leg) {
    if (!leg.fixture.empty()) {
      return leg.fixture + ": " + leg.expression;
    }
    if (leg.substructure) {
      return *leg.substructure == Substructure::idempotents_semilattice
                 ? "cyclic_associative -> E(S) is a semilattice"
                 : "cyclic_associative -> e is the identity of eS and Se";
    }
    return leg.premise + (leg.needs_cancellative ? " & cancellative element" : "")
           + " -> " + leg.conclusion;
  }

  namespace detail {
    inline LegResult check_implication(Claim const& claim, ClaimLeg const& leg,
                                       std::size_t max_order,
                                       UniverseCache& cache) {
      LegResult result{describe(leg), ClaimStatus::verified, 0, 0, {}};
      auto const parsed = parse_leg(leg);
      auto violates = [&](Magma const& m) {
        LazyProperties props(m);
        if (!premise_holds(parsed, m, props)) {
          return false;
        }
        return !parsed.conclusion.evaluate(std::ref(props));
      };

      if (claim.universe == Universe::commutative_magmas) {
        result.scope = std::min(max_order, max_commutative_order);
        for (std::size_t n = 1; n <= result.scope && !result.evidence; ++n) {
          for_each_commutative(n, [&](Magma const& m) {
            ++result.checked;
            if (violates(m)) {
              result.evidence = implication_evidence(parsed, m, "");
              return false;
            }
            return true;
          });
        }
      } else {
        result.scope = max_order;
        for (auto const& f : fixture_list()) {
          ++result.checked;
          if (violates(f.magma)) {
            result.evidence = implication_evidence(parsed, f.magma, f.name);
            break;
          }
        }
        for (std::size_t n = 1; n <= max_order && !result.evidence; ++n) {
          for (auto const& m : cache.ag(n)) {
            ++result.checked;
            if (violates(m)) {
              result.evidence = implication_evidence(parsed, m, "");
              break;
            }
          }
        }
      }
      if (result.evidence) {
        result.status = ClaimStatus::counterexample;
      }
      return result;
    }

    inline LegResult check_witness(ClaimLeg const& leg, UniverseCache& cache) {
      auto const& fx   = fixture(leg.fixture);
      auto const  expr = PropertyExpr::parse(leg.expression);
      LegResult   result{describe(leg), ClaimStatus::witness_found,
                       fx.magma.order(), 1, {}};
      Evidence    ev;
      ev.magma   = fx.magma;
      ev.fixture = fx.name;
      if (!expr.evaluate(classify(fx.magma))) {
        ev.note         = "fixture does not satisfy the expression";
        result.status   = ClaimStatus::witness_missing;
        result.evidence = std::move(ev);
        return result;
      }
      std::size_t const n = fx.magma.order();
      if (n <= max_witness_search_order) {
        auto const& universe = cache.ag(n);
        auto const  it = std::find_if(
            universe.begin(), universe.end(), [&](Magma const& m) {
              detail::LazyProperties props(m);
              return expr.evaluate(std::ref(props));
            });
        result.checked += static_cast<std::uint64_t>(
            std::distance(universe.begin(), it)
            + (it != universe.end() ? 1 : 0));
        if (it == universe.end()) {
          ev.note = "no enumerated AG-groupoid of order " + std::to_string(n)
                    + " satisfies the expression";
          result.status = ClaimStatus::witness_missing;
        } else {
          ev.note = "enumerated instance " + render_magma(*it);
        }
      }
      result.evidence = std::move(ev);
      return result;
    }

    inline LegResult check_substructure(ClaimLeg const& leg,
                                        std::size_t     max_order,
                                        UniverseCache&  cache) {
      LegResult result{describe(leg), ClaimStatus::verified, max_order, 0, {}};
      auto visit = [&](Magma const& m, std::string const& name) {
        if (!check_property(m, PropertyId::cyclic_associative).holds) {
          return true;
        }
        ++result.checked;
        if (auto ev = substructure_failure(m, *leg.substructure)) {
          ev->fixture     = name;
          result.evidence = std::move(ev);
          result.status   = ClaimStatus::counterexample;
          return false;
        }
        return true;
      };
      for (auto const& f : fixture_list()) {
        if (!visit(f.magma, f.name)) {
          return result;
        }
      }
      for (std::size_t n = 1; n <= max_order; ++n) {
        for (auto const& m : cache.ag(n)) {
          if (!visit(m, "")) {
            return result;
          }
        }
      }
      return result;
    }
  }  // namespace detail

  inline ClaimResult verify_claim(Claim const&   claim,
                                  std::size_t    max_order,
                                  UniverseCache& cache) {
    if (max_order == 0) {
      throw std::invalid_argument("max order must be at least 1");
    }
    if (max_order > max_claim_order && claim.kind != ClaimKind::witness_exists) {
      throw claim_budget_error(claim.id, max_order);
    }
    ClaimResult result{claim.id, claim.kind, ClaimStatus::verified, 0, 0,
                       claim.external_premise, {}};
    bool const witness = claim.kind == ClaimKind::witness_exists;
    result.status = witness ? ClaimStatus::witness_found : ClaimStatus::verified;
    for (auto const& leg : claim.legs) {
      LegResult r = !leg.fixture.empty() ? detail::check_witness(leg, cache)
                    : leg.substructure
                        ? detail::check_substructure(leg, max_order, cache)
                        : detail::check_implication(claim, leg, max_order, cache);
      result.scope = std::max(result.scope, r.scope);
      result.checked += r.checked;
      if (r.status == ClaimStatus::counterexample
          || r.status == ClaimStatus::witness_missing) {
        result.status = r.status;
      }
      result.legs.push_back(std::move(r));
    }
    return result;
  }

  // Verifies the claims with the given ids (all of them when ids is empty).
  inline std::vector<ClaimResult>
  verify_claims(std::size_t                     max_order = default_claim_order,
                std::vector<std::string> const& ids       = {},
                UniverseCache*                  cache     = nullptr) {
    UniverseCache local;
    UniverseCache& universe = cache != nullptr ? *cache : local;
    std::vector<Claim const*> selected;
    if (ids.empty()) {
      for (auto const& c : claim_registry()) {
        selected.push_back(&c);
      }
    } else {
      for (auto const& id : ids) {
        selected.push_back(&find_claim(id));
      }
    }
    if (max_order > max_claim_order) {
      for (auto const* c : selected) {
        if (c->kind != ClaimKind::witness_exists) {
          throw claim_budget_error(c->id, max_order);
        }
      }
    }
    std::vector<ClaimResult> results;
    for (auto const* c : selected) {
      results.push_back(verify_claim(*c, max_order, universe));
    }
    return results;
  }

  // Re-derives a leg's status from its evidence alone, using the raw
  // property definitions. Verified legs carry no evidence and recheck
  // trivially.
  inline bool recheck(Claim const& claim, ClaimLeg const& leg,
                      LegResult const& result) {
    if (result.status == ClaimStatus::verified) {
      return !result.evidence;
    }
    if (!result.evidence || !result.evidence->magma) {
      return false;
    }
    auto const& ev = *result.evidence;
    Magma const& m = *ev.magma;
    if (!leg.fixture.empty()) {
      bool const holds = PropertyExpr::parse(leg.expression).evaluate(
          classify(m));
      return result.status == ClaimStatus::witness_found
                 ? holds
                 : !holds || m.order() <= max_witness_search_order;
    }
    if (leg.substructure) {
      auto again = detail::substructure_failure(m, *leg.substructure);
      return check_property(m, PropertyId::cyclic_associative).holds && again
             && again->tuple == ev.tuple;
    }
    auto const parsed = detail::parse_leg(leg);
    auto const v      = classify(m);
    bool const premise
        = parsed.premise.evaluate(v)
          && (!leg.needs_cancellative || detail::has_cancellative_element(m));
    bool const falsified = premise && !parsed.conclusion.evaluate(v);
    if (ev.law && !falsifies(m, Witness{*ev.law, ev.tuple})) {
      return false;
    }
    if (claim.universe == Universe::commutative_magmas
        && !check_property(m, PropertyId::commutative).holds) {
      return false;
    }
    return falsified;
  }

  inline bool recheck(ClaimResult const& result) {
    auto const& claim = find_claim(result.id);
    if (claim.legs.size() != result.legs.size()) {
      return false;
    }
    for (std::size_t i = 0; i < claim.legs.size(); ++i) {
      if (!recheck(claim, claim.legs[i], result.legs[i])) {
        return false;
      }
    }
    return true;
  }

}  // namespace agtk

#endif  // AGTK_THEOREMS_HPP_
