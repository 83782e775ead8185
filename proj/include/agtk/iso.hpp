// Relabelling, canonical forms and isomorphism testing for magmas.
//
// The canonical form of a magma is the lexicographically least row-major
// table among all n! relabelled copies. Anti-isomorphisms are not identified.

#ifndef AGTK_ISO_HPP_
#define AGTK_ISO_HPP_

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "magma.hpp"

namespace agtk {

  using Permutation = std::vector<element_type>;

  // n! grows quickly; canonical forms beyond this order are refused.
  inline constexpr std::size_t max_canonical_order = 10;

  inline Permutation identity_permutation(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), element_type(0));
    return p;
  }

  inline bool is_permutation_of(Permutation const& p, std::size_t n) {
    if (p.size() != n) {
      return false;
    }
    std::vector<bool> seen(n, false);
    for (auto x : p) {
      if (x >= n || seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  }

  inline Permutation inverse(Permutation const& p) {
    Permutation q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[p[i]] = static_cast<element_type>(i);
    }
    return q;
  }

  // The isomorphic copy of m obtained by renaming every x to p[x], so that
  // result(p[a], p[b]) = p[m(a, b)].
  template <MagmaLike M>
  Magma relabel(M const& m, Permutation const& p) {
    std::size_t const n = m.order();
    if (!is_permutation_of(p, n)) {
      throw std::invalid_argument("relabel: not a permutation of 0.."
                                  + std::to_string(n - 1));
    }
    std::vector<element_type> table(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        table[p[a] * n + p[b]] = p[m(a, b)];
      }
    }
    return Magma(n, std::move(table));
  }

  namespace detail {
    // Compares the table relabelled by p (with inverse q) against the
    // current best table, cell by cell in row-major order. Returns -1, 0 or
    // 1 as the relabelled table is less than, equal to or greater than best.
    template <MagmaLike M>
    int compare_image(M const&                         m,
                      Permutation const&               p,
                      Permutation const&               q,
                      std::vector<element_type> const& best) {
      std::size_t const n = m.order();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          auto const v = p[m(q[i], q[j])];
          auto const w = best[i * n + j];
          if (v != w) {
            return v < w ? -1 : 1;
          }
        }
      }
      return 0;
    }
  }  // namespace detail

  class CanonicalKey {
   public:
    CanonicalKey(Magma canonical) : _canonical(std::move(canonical)) {}

    [[nodiscard]] std::size_t order() const noexcept {
      return _canonical.order();
    }

    [[nodiscard]] Magma const& magma() const noexcept {
      return _canonical;
    }

    [[nodiscard]] std::string to_string() const {
      return render_magma(_canonical);
    }

    friend bool operator==(CanonicalKey const&, CanonicalKey const&)
        = default;
    friend auto operator<=>(CanonicalKey const&, CanonicalKey const&)
        = default;

   private:
    Magma _canonical;
  };

  // Full minimisation over all n! relabellings.
  template <MagmaLike M>
  CanonicalKey canonical_key(M const& m) {
    std::size_t const n = m.order();
    if (n > max_canonical_order) {
      throw std::invalid_argument("canonical_key: order "
                                  + std::to_string(n)
                                  + " exceeds the supported maximum "
                                  + std::to_string(max_canonical_order));
    }
    std::vector<element_type> best(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        best[a * n + b] = static_cast<element_type>(m(a, b));
      }
    }
    // q runs over all permutations; p = q^-1 is the relabelling applied.
    Permutation q = identity_permutation(n);
    Permutation p(n);
    while (std::next_permutation(q.begin(), q.end())) {
      for (std::size_t i = 0; i < n; ++i) {
        p[q[i]] = static_cast<element_type>(i);
      }
      if (detail::compare_image(m, p, q, best) < 0) {
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) {
            best[i * n + j] = p[m(q[i], q[j])];
          }
        }
      }
    }
    return CanonicalKey(Magma(n, std::move(best)));
  }

  template <MagmaLike M>
  bool is_canonical(M const& m) {
    auto const key = canonical_key(m);
    for (std::size_t a = 0; a < m.order(); ++a) {
      for (std::size_t b = 0; b < m.order(); ++b) {
        if (key.magma()(a, b) != m(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  template <MagmaLike M1, MagmaLike M2>
  bool are_isomorphic(M1 const& m1, M2 const& m2) {
    return m1.order() == m2.order() && canonical_key(m1) == canonical_key(m2);
  }

}  // namespace agtk

#endif  // AGTK_ISO_HPP_
