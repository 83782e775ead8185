// Membership of a magma in the named identity classes of AG-groupoid
// theory, with falsifying witnesses.
//
// Every predicate is evaluated on the raw table; none presupposes the left
// invertive law, so arbitrary magmas can be classified.

#ifndef AGTK_PROPERTIES_HPP_
#define AGTK_PROPERTIES_HPP_

#include <array>
#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "magma.hpp"

namespace agtk {

  enum class PropertyId : std::uint8_t {
    ag,
    right_ag,
    cyclic_associative,
    associative,
    commutative,
    medial,
    paramedial,
    ag_star,
    ag_star_star,
    left_nuclear_square,
    middle_nuclear_square,
    right_nuclear_square,
    nuclear_square,
    bol_star,
    t1,
    t3_left,
    t3_right,
    t3,
    left_alternative,
    right_alternative,
    alternative,
    left_commutative,
    right_commutative,
    bicommutative,
    band,
    three_band,
    semilattice,
    has_left_identity
  };

  inline constexpr std::size_t property_count = 28;

  struct PropertyInfo {
    PropertyId       id;
    std::string_view name;
    // Number of universally quantified variables; 0 for composites and for
    // has_left_identity.
    std::size_t      arity;
    std::string_view definition;
  };

  inline constexpr std::array<PropertyInfo, property_count> property_catalog
      = {{
          {PropertyId::ag, "ag", 3, "(ab)c = (cb)a"},
          {PropertyId::right_ag, "right_ag", 3, "a(bc) = c(ba)"},
          {PropertyId::cyclic_associative,
           "cyclic_associative",
           3,
           "a(bc) = c(ab)"},
          {PropertyId::associative, "associative", 3, "(ab)c = a(bc)"},
          {PropertyId::commutative, "commutative", 2, "ab = ba"},
          {PropertyId::medial, "medial", 4, "(ab)(cd) = (ac)(bd)"},
          {PropertyId::paramedial, "paramedial", 4, "(ab)(cd) = (db)(ca)"},
          {PropertyId::ag_star, "ag_star", 3, "(ab)c = b(ac)"},
          {PropertyId::ag_star_star, "ag_star_star", 3, "a(bc) = b(ac)"},
          {PropertyId::left_nuclear_square,
           "left_nuclear_square",
           3,
           "(aa)(bc) = ((aa)b)c"},
          {PropertyId::middle_nuclear_square,
           "middle_nuclear_square",
           3,
           "a((bb)c) = (a(bb))c"},
          {PropertyId::right_nuclear_square,
           "right_nuclear_square",
           3,
           "a(b(cc)) = (ab)(cc)"},
          {PropertyId::nuclear_square,
           "nuclear_square",
           0,
           "left, middle and right nuclear square"},
          {PropertyId::bol_star, "bol_star", 4, "a((bc)d) = ((ab)c)d"},
          {PropertyId::t1, "t1", 4, "ab = cd implies ba = dc"},
          {PropertyId::t3_left, "t3_left", 3, "ab = ac implies ba = ca"},
          {PropertyId::t3_right, "t3_right", 3, "ba = ca implies ab = ac"},
          {PropertyId::t3, "t3", 0, "t3_left and t3_right"},
          {PropertyId::left_alternative,
           "left_alternative",
           2,
           "(aa)b = a(ab)"},
          {PropertyId::right_alternative,
           "right_alternative",
           2,
           "b(aa) = (ba)a"},
          {PropertyId::alternative,
           "alternative",
           0,
           "left and right alternative"},
          {PropertyId::left_commutative,
           "left_commutative",
           3,
           "(ab)c = (ba)c"},
          {PropertyId::right_commutative,
           "right_commutative",
           3,
           "a(bc) = a(cb)"},
          {PropertyId::bicommutative,
           "bicommutative",
           0,
           "left and right commutative"},
          {PropertyId::band, "band", 1, "aa = a"},
          {PropertyId::three_band, "three_band", 1, "(aa)a = a(aa) = a"},
          {PropertyId::semilattice, "semilattice", 0, "commutative band"},
          {PropertyId::has_left_identity,
           "has_left_identity",
           0,
           "some e has ea = a for all a"},
      }};

  inline constexpr PropertyInfo const& info(PropertyId p) noexcept {
    return property_catalog[static_cast<std::size_t>(p)];
  }

  inline constexpr std::string_view name(PropertyId p) noexcept {
    return info(p).name;
  }

  class unknown_property : public std::invalid_argument {
   public:
    explicit unknown_property(std::string const& name)
        : std::invalid_argument("unknown property '" + name + "'") {}
  };

  inline std::optional<PropertyId> find_property(std::string_view name) {
    for (auto const& entry : property_catalog) {
      if (entry.name == name) {
        return entry.id;
      }
    }
    return std::nullopt;
  }

  inline PropertyId property_from_name(std::string_view name) {
    if (auto p = find_property(name)) {
      return *p;
    }
    throw unknown_property(std::string(name));
  }

  // The components a composite property is the conjunction of.
  inline std::vector<PropertyId> components(PropertyId p) {
    using enum PropertyId;
    switch (p) {
      case nuclear_square:
        return {left_nuclear_square,
                middle_nuclear_square,
                right_nuclear_square};
      case t3:
        return {t3_left, t3_right};
      case alternative:
        return {left_alternative, right_alternative};
      case bicommutative:
        return {left_commutative, right_commutative};
      case semilattice:
        return {commutative, band};
      default:
        return {};
    }
  }

  // A falsifying assignment. values holds the variables (a, b, c, d) in
  // order for identities and implications. For has_left_identity it holds,
  // for every candidate e, the least a with ea != a.
  struct Witness {
    PropertyId                law;
    std::vector<element_type> values;

    friend bool operator==(Witness const&, Witness const&) = default;
  };

  struct CheckResult {
    bool                   holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const noexcept {
      return holds;
    }
  };

  // Whether the instance of the atomic property p at the given variable
  // assignment holds.
  template <MagmaLike M>
  bool instance_holds(M const&                       m,
                      PropertyId                     p,
                      std::span<element_type const>  v) {
    auto mul = [&m](std::size_t x, std::size_t y) -> std::size_t {
      return m(x, y);
    };
    auto at = [&v](std::size_t i) -> std::size_t {
      if (i >= v.size()) {
        throw std::invalid_argument("witness has too few values");
      }
      return v[i];
    };
    using enum PropertyId;
    switch (p) {
      case ag:
        return mul(mul(at(0), at(1)), at(2)) == mul(mul(at(2), at(1)), at(0));
      case right_ag:
        return mul(at(0), mul(at(1), at(2))) == mul(at(2), mul(at(1), at(0)));
      case cyclic_associative:
        return mul(at(0), mul(at(1), at(2))) == mul(at(2), mul(at(0), at(1)));
      case associative:
        return mul(mul(at(0), at(1)), at(2)) == mul(at(0), mul(at(1), at(2)));
      case commutative:
        return mul(at(0), at(1)) == mul(at(1), at(0));
      case medial:
        return mul(mul(at(0), at(1)), mul(at(2), at(3)))
               == mul(mul(at(0), at(2)), mul(at(1), at(3)));
      case paramedial:
        return mul(mul(at(0), at(1)), mul(at(2), at(3)))
               == mul(mul(at(3), at(1)), mul(at(2), at(0)));
      case ag_star:
        return mul(mul(at(0), at(1)), at(2)) == mul(at(1), mul(at(0), at(2)));
      case ag_star_star:
        return mul(at(0), mul(at(1), at(2))) == mul(at(1), mul(at(0), at(2)));
      case left_nuclear_square: {
        auto const aa = mul(at(0), at(0));
        return mul(aa, mul(at(1), at(2))) == mul(mul(aa, at(1)), at(2));
      }
      case middle_nuclear_square: {
        auto const bb = mul(at(1), at(1));
        return mul(at(0), mul(bb, at(2))) == mul(mul(at(0), bb), at(2));
      }
      case right_nuclear_square: {
        auto const cc = mul(at(2), at(2));
        return mul(at(0), mul(at(1), cc)) == mul(mul(at(0), at(1)), cc);
      }
      case bol_star:
        return mul(at(0), mul(mul(at(1), at(2)), at(3)))
               == mul(mul(mul(at(0), at(1)), at(2)), at(3));
      case t1:
        return mul(at(0), at(1)) != mul(at(2), at(3))
               || mul(at(1), at(0)) == mul(at(3), at(2));
      case t3_left:
        return mul(at(0), at(1)) != mul(at(0), at(2))
               || mul(at(1), at(0)) == mul(at(2), at(0));
      case t3_right:
        return mul(at(1), at(0)) != mul(at(2), at(0))
               || mul(at(0), at(1)) == mul(at(0), at(2));
      case left_alternative: {
        auto const aa = mul(at(0), at(0));
        return mul(aa, at(1)) == mul(at(0), mul(at(0), at(1)));
      }
      case right_alternative: {
        auto const aa = mul(at(0), at(0));
        return mul(at(1), aa) == mul(mul(at(1), at(0)), at(0));
      }
      case left_commutative:
        return mul(mul(at(0), at(1)), at(2)) == mul(mul(at(1), at(0)), at(2));
      case right_commutative:
        return mul(at(0), mul(at(1), at(2))) == mul(at(0), mul(at(2), at(1)));
      case band:
        return mul(at(0), at(0)) == at(0);
      case three_band: {
        auto const aa = mul(at(0), at(0));
        return mul(aa, at(0)) == at(0) && mul(at(0), aa) == at(0);
      }
      case has_left_identity: {
        // Holds unless every e in 0..n-1 is refuted at the given a.
        if (v.size() != m.order()) {
          throw std::invalid_argument("left identity witness needs one value "
                                      "per element");
        }
        for (std::size_t e = 0; e < m.order(); ++e) {
          if (mul(e, at(e)) == at(e)) {
            return true;
          }
        }
        return false;
      }
      default:
        throw std::invalid_argument("instance_holds: '" + std::string(name(p))
                                    + "' is a composite property");
    }
  }

  template <MagmaLike M>
  bool falsifies(M const& m, Witness const& w) {
    return !instance_holds(m, w.law, w.values);
  }

  namespace detail {
    // Scans all assignments of arity variables in lexicographic order and
    // returns the first one at which p fails.
    template <MagmaLike M>
    std::optional<std::vector<element_type>>
    first_failure(M const& m, PropertyId p, std::size_t arity) {
      std::size_t const         n = m.order();
      std::vector<element_type> v(arity, 0);
      while (true) {
        if (!instance_holds(m, p, v)) {
          return v;
        }
        std::size_t i = arity;
        while (i > 0) {
          --i;
          if (++v[i] < n) {
            break;
          }
          v[i] = 0;
          if (i == 0) {
            return std::nullopt;
          }
        }
        if (arity == 0) {
          return std::nullopt;
        }
      }
    }

    template <MagmaLike M>
    CheckResult check_left_identity(M const& m) {
      std::size_t const         n = m.order();
      std::vector<element_type> refutations(n);
      for (std::size_t e = 0; e < n; ++e) {
        bool identity = true;
        for (std::size_t a = 0; a < n; ++a) {
          if (static_cast<std::size_t>(m(e, a)) != a) {
            refutations[e] = static_cast<element_type>(a);
            identity       = false;
            break;
          }
        }
        if (identity) {
          return {};
        }
      }
      return {false, Witness{PropertyId::has_left_identity, refutations}};
    }
  }  // namespace detail

  // Whether m belongs to the class p; on failure the witness is the
  // lexicographically least falsifying tuple (for composites, that of the
  // first failing component).
  template <MagmaLike M>
  CheckResult check_property(M const& m, PropertyId p) {
    if (static_cast<std::size_t>(p) >= property_count) {
      throw std::invalid_argument("check_property: invalid property id");
    }
    if (p == PropertyId::has_left_identity) {
      return detail::check_left_identity(m);
    }
    if (auto const parts = components(p); !parts.empty()) {
      for (auto part : parts) {
        auto result = check_property(m, part);
        if (!result.holds) {
          return result;
        }
      }
      return {};
    }
    if (auto fail = detail::first_failure(m, p, info(p).arity)) {
      return {false, Witness{p, std::move(*fail)}};
    }
    return {};
  }

  inline CheckResult check_property(Magma const& m, std::string_view p) {
    return check_property(m, property_from_name(p));
  }

  class PropertyVector {
   public:
    PropertyVector() = default;

    [[nodiscard]] bool operator[](PropertyId p) const {
      return _bits[static_cast<std::size_t>(p)];
    }

    void set(PropertyId p, bool value = true) {
      _bits[static_cast<std::size_t>(p)] = value;
    }

    [[nodiscard]] std::vector<PropertyId> members() const {
      std::vector<PropertyId> result;
      for (auto const& entry : property_catalog) {
        if ((*this)[entry.id]) {
          result.push_back(entry.id);
        }
      }
      return result;
    }

    [[nodiscard]] std::bitset<property_count> const& bits() const noexcept {
      return _bits;
    }

    friend bool operator==(PropertyVector const&, PropertyVector const&)
        = default;

   private:
    std::bitset<property_count> _bits;
  };

  template <MagmaLike M>
  PropertyVector classify(M const& m) {
    PropertyVector result;
    for (auto const& entry : property_catalog) {
      if (components(entry.id).empty()) {
        result.set(entry.id, check_property(m, entry.id).holds);
      }
    }
    for (auto const& entry : property_catalog) {
      auto const parts = components(entry.id);
      if (!parts.empty()) {
        bool all = true;
        for (auto part : parts) {
          all = all && result[part];
        }
        result.set(entry.id, all);
      }
    }
    return result;
  }

  template <MagmaLike M>
  std::vector<element_type> idempotents(M const& m) {
    std::vector<element_type> result;
    for (std::size_t a = 0; a < m.order(); ++a) {
      if (static_cast<std::size_t>(m(a, a)) == a) {
        result.push_back(static_cast<element_type>(a));
      }
    }
    return result;
  }

  struct CancellativeElements {
    std::vector<element_type> left;
    std::vector<element_type> right;
  };

  // a is left cancellative iff row a is a permutation, right cancellative
  // iff column a is.
  template <MagmaLike M>
  CancellativeElements cancellative_elements(M const& m) {
    std::size_t const    n = m.order();
    CancellativeElements result;
    std::vector<bool>    seen_row(n), seen_col(n);
    for (std::size_t a = 0; a < n; ++a) {
      std::fill(seen_row.begin(), seen_row.end(), false);
      std::fill(seen_col.begin(), seen_col.end(), false);
      bool row_ok = true, col_ok = true;
      for (std::size_t x = 0; x < n; ++x) {
        std::size_t const r = m(a, x);
        std::size_t const c = m(x, a);
        row_ok              = row_ok && !seen_row[r];
        col_ok              = col_ok && !seen_col[c];
        seen_row[r]         = true;
        seen_col[c]         = true;
      }
      if (row_ok) {
        result.left.push_back(static_cast<element_type>(a));
      }
      if (col_ok) {
        result.right.push_back(static_cast<element_type>(a));
      }
    }
    return result;
  }

  template <MagmaLike M>
  std::vector<element_type> left_identities(M const& m) {
    std::vector<element_type> result;
    for (std::size_t e = 0; e < m.order(); ++e) {
      bool identity = true;
      for (std::size_t a = 0; a < m.order() && identity; ++a) {
        identity = static_cast<std::size_t>(m(e, a)) == a;
      }
      if (identity) {
        result.push_back(static_cast<element_type>(e));
      }
    }
    return result;
  }

}  // namespace agtk

#endif  // AGTK_PROPERTIES_HPP_
