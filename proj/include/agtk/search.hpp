// Depth-first search kernel generating AG-groupoid tables (magmas satisfying
// the left invertive law (xy)z = (zy)x) in canonical form.
//
// Cells are decided in row-major order. Whenever a cell gets a value, every
// instance of the left invertive law involving it is examined: with all
// four cells valued it is checked, and with three valued the fourth is
// forced to the value the law requires. Forced cells are propagated in turn
// until nothing changes or some cell is forced to two different values,
// which prunes the branch. A forced cell is not branched on when the search
// reaches it. When a row is completed, every relabelling whose image is
// determined on a leading segment of the table is compared against the
// partial table; if some relabelling is already
// lexicographically smaller the branch cannot lead to a canonical table and
// is pruned. At the last cell this comparison is the full canonicity test,
// so exactly one table per isomorphism class reaches the leaves.

#ifndef AGTK_SEARCH_HPP_
#define AGTK_SEARCH_HPP_

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "magma.hpp"

namespace agtk {

  // Orders the search kernel accepts; n! relabellings are stored.
  inline constexpr std::size_t max_search_order = 8;

  // Non-owning view of a (possibly partial) table produced by the kernel.
  class TableView {
   public:
    using value_type = std::uint8_t;

    TableView(std::size_t n, std::uint8_t const* cells) noexcept
        : _order(n), _cells(cells) {}

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] std::uint8_t operator()(std::size_t a,
                                          std::size_t b) const noexcept {
      return _cells[a * _order + b];
    }

    [[nodiscard]] std::uint8_t const* data() const noexcept {
      return _cells;
    }

   private:
    std::size_t          _order;
    std::uint8_t const*  _cells;
  };

  namespace detail {

    class AgSearch {
     public:
      explicit AgSearch(std::size_t n) : _n(n), _cells(n * n, none) {
        if (n == 0 || n > max_search_order) {
          throw std::invalid_argument(
              "search order must be in 1.." + std::to_string(max_search_order));
        }
        std::vector<std::uint8_t> q(n);
        std::iota(q.begin(), q.end(), std::uint8_t(0));
        // Skip the identity, it never produces a smaller image.
        while (std::next_permutation(q.begin(), q.end())) {
          Relabelling r{};
          for (std::size_t i = 0; i < n; ++i) {
            r.q[i]    = q[i];
            r.p[q[i]] = static_cast<std::uint8_t>(i);
          }
          _relabellings.push_back(r);
        }
        // Grouped by q[0] so that the row-r check only visits relabellings
        // whose first image row is determined.
        std::stable_sort(
            _relabellings.begin(),
            _relabellings.end(),
            [](Relabelling const& x, Relabelling const& y) {
              return x.q[0] < y.q[0];
            });
        _first_with_q0.assign(n + 1, _relabellings.size());
        for (std::size_t k = _relabellings.size(); k-- > 0;) {
          _first_with_q0[_relabellings[k].q[0]] = k;
        }
        for (std::size_t v = n; v-- > 0;) {
          _first_with_q0[v] = std::min(_first_with_q0[v], _first_with_q0[v + 1]);
        }
        _pending.resize(n);
        _by_value.resize(n);
      }

      [[nodiscard]] std::size_t order() const noexcept {
        return _n;
      }

      [[nodiscard]] TableView view() const noexcept {
        return TableView(_n, _cells.data());
      }

      [[nodiscard]] std::uint8_t* cells() noexcept {
        return _cells.data();
      }

      // Assigns cells [from, to) in every consistent way, calling
      // leaf(*this) each time cell to - 1 has been assigned. The cells
      // before from must have been installed with seed(). leaf may return
      // false to abandon the search, in which case run returns false.
      template <typename Leaf>
      bool run(std::size_t from, std::size_t to, Leaf&& leaf) {
        if (from == to) {
          return leaf(*this);
        }
        return dfs(from, to, leaf);
      }

      // Installs the first prefix.size() cells and replays the checks for
      // them. Returns false if the prefix is inconsistent or provably not
      // canonical.
      bool seed(std::span<std::uint8_t const> prefix) {
        unwind(0);
        for (std::size_t pos = 0; pos < prefix.size(); ++pos) {
          if (_cells[pos] != none) {
            if (_cells[pos] != prefix[pos]) {
              return false;
            }
          } else if (assign(pos, prefix[pos]), !settle()) {
            return false;
          }
          if (pos % _n + 1 == _n && !row_canonical(pos / _n)) {
            return false;
          }
        }
        return true;
      }

     private:
      // Marks a cell without a value.
      static constexpr std::uint8_t none = 0xff;

      struct Relabelling {
        std::array<std::uint8_t, max_search_order> p;
        std::array<std::uint8_t, max_search_order> q;
      };

      // A relabelling whose image agrees with the table on rows 0..row-1
      // and has not yet been compared further.
      struct Pending {
        std::uint32_t index;
        std::uint32_t row;
      };

      template <typename Leaf>
      bool dfs(std::size_t pos, std::size_t to, Leaf& leaf) {
        auto const row_end = pos % _n + 1 == _n;
        auto next = [&] {
          if (row_end && !row_canonical(pos / _n)) {
            return true;
          }
          return pos + 1 == to ? leaf(*this) : dfs(pos + 1, to, leaf);
        };
        if (_cells[pos] != none) {
          return next();
        }
        auto const mark = _trail.size();
        for (std::size_t v = 0; v < _n; ++v) {
          assign(pos, v);
          bool const keep_going = settle() ? next() : true;
          unwind(mark);
          if (!keep_going) {
            return false;
          }
        }
        return true;
      }

      void assign(std::size_t c, std::size_t v) {
        _cells[c] = static_cast<std::uint8_t>(v);
        _by_value[v].push_back(static_cast<std::uint16_t>(c));
        _trail.push_back(static_cast<std::uint16_t>(c));
      }

      // Clears every value set after the trail had length mark.
      void unwind(std::size_t mark) noexcept {
        while (_trail.size() > mark) {
          auto const c = _trail.back();
          _trail.pop_back();
          _by_value[_cells[c]].pop_back();
          _cells[c] = none;
        }
        _settled = std::min(_settled, mark);
      }

      // Requires cell c to hold v. Returns false on a contradiction.
      bool require(std::size_t c, std::size_t v) {
        if (_cells[c] == none) {
          assign(c, v);
          return true;
        }
        return _cells[c] == v;
      }

      // Examines the cells valued since the last call, and those they
      // force, until nothing changes. Returns false on a contradiction.
      bool settle() {
        for (auto next = _settled; next < _trail.size(); ++next) {
          if (!examine(_trail[next])) {
            return false;
          }
        }
        _settled = _trail.size();
        return true;
      }

      // Every instance of (xy)z = (zy)x involving cell c with at least
      // three cells valued. The law is symmetric in x and z, so it suffices
      // to take c as the cell xy or as the cell (xy)z.
      bool examine(std::size_t c) {
        std::size_t const n = _n;
        std::size_t const a = c / n;
        std::size_t const b = c % n;
        std::size_t const v = _cells[c];
        // c = (x, y): x = a, y = b, any z with (z, b) valued.
        for (std::size_t z = 0; z < n; ++z) {
          std::size_t const zb = _cells[z * n + b];
          if (zb == none) {
            continue;
          }
          std::size_t const left  = v * n + z;
          std::size_t const right = zb * n + a;
          if (_cells[left] != none) {
            if (!require(right, _cells[left])) {
              return false;
            }
          } else if (_cells[right] != none && !require(left, _cells[right])) {
            return false;
          }
        }
        // c = (xy, z): xy = a, z = b. Indexed because require may append.
        auto const& with_a = _by_value[a];
        for (std::size_t k = 0; k < with_a.size(); ++k) {
          std::size_t const x  = with_a[k] / n;
          std::size_t const y  = with_a[k] % n;
          std::size_t const by = _cells[b * n + y];
          if (by != none && !require(by * n + x, v)) {
            return false;
          }
        }
        return true;
      }

      // Rows 0..r are assigned. Returns false if some relabelling is
      // already strictly smaller on a determined leading segment. The
      // relabellings still tied with the table are recorded for row r + 1;
      // those found greater are dropped for the whole subtree.
      [[nodiscard]] bool row_canonical(std::size_t r) {
        std::size_t const n     = _n;
        auto const*       cells = _cells.data();
        auto&             out   = _pending[r];
        out.clear();

        // 1 = greater or undetermined, 0 = smaller.
        auto resume = [&](std::uint32_t k, std::size_t i) -> bool {
          auto const& rl = _relabellings[k];
          for (; i <= r; ++i) {
            std::size_t const qi = rl.q[i];
            if (qi > r) {
              out.push_back({k, static_cast<std::uint32_t>(i)});
              return true;
            }
            auto const* src = cells + qi * n;
            auto const* dst = cells + i * n;
            for (std::size_t j = 0; j < n; ++j) {
              auto const v = rl.p[src[rl.q[j]]];
              if (v != dst[j]) {
                return v > dst[j];
              }
            }
          }
          out.push_back({k, static_cast<std::uint32_t>(r + 1)});
          return true;
        };

        if (r > 0) {
          for (auto const& pending : _pending[r - 1]) {
            if (!resume(pending.index, pending.row)) {
              return false;
            }
          }
        }
        for (std::size_t k = _first_with_q0[r], last = _first_with_q0[r + 1];
             k < last;
             ++k) {
          if (!resume(static_cast<std::uint32_t>(k), 0)) {
            return false;
          }
        }
        return true;
      }

      std::size_t                _n;
      std::vector<std::uint8_t>  _cells;
      std::vector<Relabelling>   _relabellings;
      std::vector<std::size_t>   _first_with_q0;
      std::vector<std::vector<Pending>>       _pending;
      std::vector<std::vector<std::uint16_t>> _by_value;
      std::vector<std::uint16_t>              _trail;
      std::size_t                             _settled = 0;
    };

  }  // namespace detail

}  // namespace agtk

#endif  // AGTK_SEARCH_HPP_
