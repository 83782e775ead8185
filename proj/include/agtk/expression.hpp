// Boolean expressions over the property catalog, e.g.
//
//   cyclic_associative & !associative
//   ag_star & band -> cyclic_associative
//
// Operators, loosest first: "<->", "->" (right associative), "|", "&",
// "!". The Unicode forms ⇔ ⇒ ∨ ∧ ¬ and the words and/or/not are accepted as
// well. true and false are literals.

#ifndef AGTK_EXPRESSION_HPP_
#define AGTK_EXPRESSION_HPP_

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "properties.hpp"

namespace agtk {

  class expression_error : public std::invalid_argument {
   public:
    expression_error(std::string const& what, std::size_t position)
        : std::invalid_argument(what + " at offset "
                                + std::to_string(position)),
          _position(position) {}

    [[nodiscard]] std::size_t position() const noexcept {
      return _position;
    }

   private:
    std::size_t _position;
  };

  class PropertyExpr {
   public:
    enum class Op { atom, constant, negation, conjunction, disjunction,
                    implication, equivalence };

    static PropertyExpr parse(std::string_view text);

    static PropertyExpr atom(PropertyId p) {
      PropertyExpr e;
      e._nodes.push_back({Op::atom, p, false, 0, 0});
      e._root = 0;
      return e;
    }

    // Evaluates with truth(p) supplying the value of each atom.
    [[nodiscard]] bool
    evaluate(std::function<bool(PropertyId)> const& truth) const {
      return eval(_root, truth);
    }

    [[nodiscard]] bool evaluate(PropertyVector const& v) const {
      return evaluate([&v](PropertyId p) { return v[p]; });
    }

    [[nodiscard]] std::vector<PropertyId> atoms() const {
      std::vector<PropertyId> result;
      for (auto const& node : _nodes) {
        if (node.op == Op::atom
            && std::find(result.begin(), result.end(), node.property)
                   == result.end()) {
          result.push_back(node.property);
        }
      }
      return result;
    }

    // Fully parenthesised ASCII rendering; parses back to an equal tree.
    [[nodiscard]] std::string to_string() const {
      return render(_root, true);
    }

   private:
    struct Node {
      Op          op;
      PropertyId  property;
      bool        value;
      std::size_t lhs;
      std::size_t rhs;
    };

    class Parser;

    [[nodiscard]] bool eval(std::size_t i,
                            std::function<bool(PropertyId)> const& t) const {
      auto const& node = _nodes[i];
      switch (node.op) {
        case Op::atom:
          return t(node.property);
        case Op::constant:
          return node.value;
        case Op::negation:
          return !eval(node.lhs, t);
        case Op::conjunction:
          return eval(node.lhs, t) && eval(node.rhs, t);
        case Op::disjunction:
          return eval(node.lhs, t) || eval(node.rhs, t);
        case Op::implication:
          return !eval(node.lhs, t) || eval(node.rhs, t);
        case Op::equivalence:
          return eval(node.lhs, t) == eval(node.rhs, t);
      }
      return false;
    }

    [[nodiscard]] std::string render(std::size_t i, bool top) const {
      auto const& node = _nodes[i];
      auto wrap = [top](std::string s) {
        return top ? s : "(" + s + ")";
      };
      switch (node.op) {
        case Op::atom:
          return std::string(name(node.property));
        case Op::constant:
          return node.value ? "true" : "false";
        case Op::negation:
          return "!" + render(node.lhs, false);
        case Op::conjunction:
          return wrap(render(node.lhs, false) + " & "
                      + render(node.rhs, false));
        case Op::disjunction:
          return wrap(render(node.lhs, false) + " | "
                      + render(node.rhs, false));
        case Op::implication:
          return wrap(render(node.lhs, false) + " -> "
                      + render(node.rhs, false));
        case Op::equivalence:
          return wrap(render(node.lhs, false) + " <-> "
                      + render(node.rhs, false));
      }
      return {};
    }

    std::size_t add(Node node) {
      _nodes.push_back(node);
      return _nodes.size() - 1;
    }

    std::vector<Node> _nodes;
    std::size_t       _root = 0;
  };

  class PropertyExpr::Parser {
   public:
    Parser(std::string_view text, PropertyExpr& out)
        : _text(text), _out(out) {}

    std::size_t parse() {
      auto root = equivalence();
      skip_space();
      if (_pos != _text.size()) {
        throw expression_error("unexpected '" + std::string(1, _text[_pos])
                                   + "'",
                               _pos);
      }
      return root;
    }

   private:
    void skip_space() {
      while (_pos < _text.size()
             && std::isspace(static_cast<unsigned char>(_text[_pos]))) {
        ++_pos;
      }
    }

    // Consumes the first matching token, words only when followed by a
    // non-identifier character.
    bool accept(std::initializer_list<std::string_view> tokens) {
      skip_space();
      for (auto token : tokens) {
        if (_text.substr(_pos, token.size()) != token) {
          continue;
        }
        bool const word = std::isalpha(static_cast<unsigned char>(token[0]));
        auto const next = _pos + token.size();
        if (word && next < _text.size() && is_ident(_text[next])) {
          continue;
        }
        _pos = next;
        return true;
      }
      return false;
    }

    static bool is_ident(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    std::size_t binary(Op op, std::size_t lhs, std::size_t rhs) {
      return _out.add({op, PropertyId::ag, false, lhs, rhs});
    }

    std::size_t equivalence() {
      auto lhs = implication();
      while (accept({"<->", "⇔", "iff"})) {
        lhs = binary(Op::equivalence, lhs, implication());
      }
      return lhs;
    }

    std::size_t implication() {
      auto lhs = disjunction();
      if (accept({"->", "⇒", "implies"})) {
        return binary(Op::implication, lhs, implication());
      }
      return lhs;
    }

    std::size_t disjunction() {
      auto lhs = conjunction();
      while (accept({"||", "|", "∨", "or"})) {
        lhs = binary(Op::disjunction, lhs, conjunction());
      }
      return lhs;
    }

    std::size_t conjunction() {
      auto lhs = unary();
      while (accept({"&&", "&", "∧", "and"})) {
        lhs = binary(Op::conjunction, lhs, unary());
      }
      return lhs;
    }

    std::size_t unary() {
      if (accept({"!", "¬", "~", "not"})) {
        return _out.add({Op::negation, PropertyId::ag, false, unary(), 0});
      }
      skip_space();
      auto const start = _pos;
      if (accept({"("})) {
        auto inner = equivalence();
        if (!accept({")"})) {
          throw expression_error("expected ')' to close '(' at offset "
                                     + std::to_string(start),
                                 _pos);
        }
        return inner;
      }
      while (_pos < _text.size() && is_ident(_text[_pos])) {
        ++_pos;
      }
      auto const word = _text.substr(start, _pos - start);
      if (word.empty()) {
        throw expression_error(_pos < _text.size() ? "unexpected '"
                                       + std::string(1, _text[_pos]) + "'"
                                                   : "unexpected end",
                               _pos);
      }
      if (word == "true" || word == "false") {
        return _out.add({Op::constant, PropertyId::ag, word == "true", 0, 0});
      }
      auto p = find_property(word);
      if (!p) {
        throw expression_error("unknown property '" + std::string(word) + "'",
                               start);
      }
      return _out.add({Op::atom, *p, false, 0, 0});
    }

    std::string_view _text;
    PropertyExpr&    _out;
    std::size_t      _pos = 0;
  };

  inline PropertyExpr PropertyExpr::parse(std::string_view text) {
    PropertyExpr result;
    result._root = Parser(text, result).parse();
    return result;
  }

}  // namespace agtk

#endif  // AGTK_EXPRESSION_HPP_
