// Finite magmas given by their Cayley tables.
//
// Elements are the indices 0, ..., n - 1 and the table is stored row-major:
// the entry in row a, column b is the product a * b.

#ifndef AGTK_MAGMA_HPP_
#define AGTK_MAGMA_HPP_

#include <cassert>
#include <charconv>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace agtk {

  using element_type = std::uint32_t;

  // Anything that can be read as a finite Cayley table. Both Magma and the
  // enumeration kernel's table views model this.
  template <typename T>
  concept MagmaLike = requires(T const& m, std::size_t a, std::size_t b) {
    { m.order() } -> std::convertible_to<std::size_t>;
    { m(a, b) } -> std::convertible_to<std::size_t>;
  };

  // Raised by parse_magma; position() is the 1-based index of the offending
  // token (0 for the order prefix).
  class parse_error : public std::runtime_error {
   public:
    parse_error(std::string const& what, std::size_t position)
        : std::runtime_error(what), _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  struct Triple {
    element_type a;
    element_type b;
    element_type c;

    friend bool operator==(Triple const&, Triple const&) = default;
  };

  class Magma {
   public:
    using value_type = element_type;

    Magma() : Magma(1, {0}) {}

    Magma(std::size_t n, std::vector<element_type> table)
        : _order(n), _table(std::move(table)) {
      if (n == 0) {
        throw std::invalid_argument("magma order must be at least 1");
      }
      if (_table.size() != n * n) {
        throw std::invalid_argument("expected " + std::to_string(n * n)
                                    + " table entries, found "
                                    + std::to_string(_table.size()));
      }
      for (std::size_t i = 0; i < _table.size(); ++i) {
        if (_table[i] >= n) {
          throw std::invalid_argument("table entry " + std::to_string(i)
                                      + " is out of range");
        }
      }
    }

    // Copies any table-like object into an owning Magma.
    template <MagmaLike M>
      requires(!std::same_as<M, Magma>)
    explicit Magma(M const& other) : _order(other.order()) {
      _table.reserve(_order * _order);
      for (std::size_t a = 0; a < _order; ++a) {
        for (std::size_t b = 0; b < _order; ++b) {
          _table.push_back(static_cast<element_type>(other(a, b)));
        }
      }
    }

    static Magma constant(std::size_t n, element_type value = 0) {
      return Magma(n, std::vector<element_type>(n * n, value));
    }

    [[nodiscard]] std::size_t order() const noexcept {
      return _order;
    }

    [[nodiscard]] element_type operator()(std::size_t a,
                                          std::size_t b) const noexcept {
      assert(a < _order && b < _order);
      return _table[a * _order + b];
    }

    [[nodiscard]] element_type at(std::size_t a, std::size_t b) const {
      if (a >= _order || b >= _order) {
        throw std::out_of_range("element index out of range");
      }
      return _table[a * _order + b];
    }

    [[nodiscard]] std::span<element_type const> table() const noexcept {
      return _table;
    }

    friend bool operator==(Magma const&, Magma const&) = default;
    friend auto operator<=>(Magma const&, Magma const&) = default;

   private:
    std::size_t               _order;
    std::vector<element_type> _table;
  };

  template <MagmaLike M>
  [[nodiscard]] element_type mul(M const& m, std::size_t a, std::size_t b) {
    return static_cast<element_type>(m(a, b));
  }

  enum class RenderStyle { compact, grid_1based };

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      auto const first = s.find_first_not_of(" \t\r\n");
      if (first == std::string_view::npos) {
        return {};
      }
      auto const last = s.find_last_not_of(" \t\r\n");
      return s.substr(first, last - first + 1);
    }

    inline std::size_t parse_unsigned(std::string_view token,
                                      std::size_t      position,
                                      char const*      what) {
      token = trim(token);
      std::size_t value = 0;
      auto const* end   = token.data() + token.size();
      auto [ptr, ec]    = std::from_chars(token.data(), end, value);
      if (token.empty() || ec != std::errc() || ptr != end) {
        std::ostringstream os;
        os << "invalid " << what << " '" << token << "' at position "
           << position;
        throw parse_error(os.str(), position);
      }
      return value;
    }
  }  // namespace detail

  // Parses the line format "n:e1,e2,...,e(n^2)" with 0-based entries.
  inline Magma parse_magma(std::string_view text) {
    text            = detail::trim(text);
    auto const colon = text.find(':');
    if (colon == std::string_view::npos) {
      throw parse_error("missing ':' after the order", 0);
    }
    auto const n = detail::parse_unsigned(text.substr(0, colon), 0, "order");
    if (n == 0) {
      throw parse_error("order must be at least 1", 0);
    }
    std::vector<element_type> table;
    table.reserve(n * n);
    auto rest = text.substr(colon + 1);
    std::size_t position = 1;
    while (true) {
      auto const comma = rest.find(',');
      auto const token = rest.substr(0, comma);
      auto const value = detail::parse_unsigned(token, position, "entry");
      if (value >= n) {
        std::ostringstream os;
        os << "entry " << value << " at position " << position
           << " is not less than the order " << n;
        throw parse_error(os.str(), position);
      }
      table.push_back(static_cast<element_type>(value));
      if (comma == std::string_view::npos) {
        break;
      }
      rest = rest.substr(comma + 1);
      ++position;
    }
    if (table.size() != n * n) {
      std::ostringstream os;
      os << "expected " << n * n << " entries, found " << table.size();
      throw parse_error(os.str(), table.size() < n * n ? table.size() + 1
                                                       : n * n + 1);
    }
    return Magma(n, std::move(table));
  }

  template <MagmaLike M>
  std::string render_magma(M const&    m,
                           RenderStyle style = RenderStyle::compact) {
    std::size_t const  n = m.order();
    std::ostringstream os;
    if (style == RenderStyle::compact) {
      os << n << ':';
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a + b != 0) {
            os << ',';
          }
          os << m(a, b);
        }
      }
      return os.str();
    }
    std::size_t const width = std::to_string(n).size();
    auto cell = [&](std::size_t v) {
      auto s = std::to_string(v);
      return std::string(width - s.size(), ' ') + s;
    };
    os << std::string(width, ' ') << " |";
    for (std::size_t b = 0; b < n; ++b) {
      os << ' ' << cell(b + 1);
    }
    os << '\n' << std::string(width + 1, '-') << '+'
       << std::string(n * (width + 1), '-') << '\n';
    for (std::size_t a = 0; a < n; ++a) {
      os << cell(a + 1) << " |";
      for (std::size_t b = 0; b < n; ++b) {
        os << ' ' << cell(static_cast<std::size_t>(m(a, b)) + 1);
      }
      os << '\n';
    }
    return os.str();
  }

  // Reads every magma from text in the line format; blank lines and lines
  // starting with '#' are skipped.
  inline std::vector<Magma> parse_magma_lines(std::string_view text) {
    std::vector<Magma> result;
    std::size_t        line_no = 0;
    while (!text.empty()) {
      auto const nl   = text.find('\n');
      auto const line = detail::trim(text.substr(0, nl));
      ++line_no;
      if (!line.empty() && line.front() != '#') {
        try {
          result.push_back(parse_magma(line));
        } catch (parse_error const& e) {
          throw parse_error("line " + std::to_string(line_no) + ": "
                                + e.what(),
                            e.position());
        }
      }
      if (nl == std::string_view::npos) {
        break;
      }
      text = text.substr(nl + 1);
    }
    return result;
  }

}  // namespace agtk

#endif  // AGTK_MAGMA_HPP_
