#include <optional>
#include <sstream>

#include "jref/errors.hpp"
#include "jref/parser.hpp"
#include "jref/unification.hpp"

namespace jref {

  namespace {

    // One side of an equation. A bare identifier has no sort of its own.
    struct Side {
      std::optional<Expr> term;
      std::optional<Expr> formula;
    };

    bool delimiter(TokenKind k) {
      return k == TokenKind::Eq || k == TokenKind::DoubleArrow || k == TokenKind::End;
    }

    Side readSide(Parser& p) {
      const std::size_t start = p.position();
      try {
        Term t = p.term();
        if (delimiter(p.peek().kind)) {
          if (t.kind() == Kind::JustAtom) return Side{t, Expr::prop(t.name())};
          return Side{t, std::nullopt};
        }
      } catch (const ParseError&) {
      }
      p.rewind(start);
      return Side{std::nullopt, p.formula()};
    }

    std::pair<Expr, Expr> resolvePair(const Side& l, const Side& r, Sort fallback, const Parser& p) {
      const bool lAmbiguous = l.term && l.formula;
      const bool rAmbiguous = r.term && r.formula;
      Sort sort = fallback;
      if (!lAmbiguous) sort = l.term ? Sort::Term : Sort::Formula;
      else if (!rAmbiguous) sort = r.term ? Sort::Term : Sort::Formula;
      const auto& lv = sort == Sort::Term ? l.term : l.formula;
      const auto& rv = sort == Sort::Term ? r.term : r.formula;
      if (!lv || !rv) p.fail("the two sides of '=' have different sorts");
      return {*lv, *rv};
    }

    Clause parseLine(std::string_view line) {
      Parser p(line);
      Side a = readSide(p);
      p.expect(TokenKind::Eq, "'='");
      Side b = readSide(p);
      if (p.accept(TokenKind::DoubleArrow)) {
        Side c = readSide(p);
        p.expect(TokenKind::Eq, "'='");
        Side d = readSide(p);
        if (!p.atEnd()) p.fail("unexpected trailing input");
        auto [al, ar] = resolvePair(a, b, Sort::Term, p);
        auto [cl, cr] = resolvePair(c, d, Sort::Formula, p);
        return Clause{al, ar, cl, cr};
      }
      if (!p.atEnd()) p.fail("unexpected trailing input");
      auto [l, r] = resolvePair(a, b, Sort::Formula, p);
      return Clause::unconditional(l, r);
    }

  } // namespace

  ConditionalProblem parseProblem(std::string_view text, UnifMode mode) {
    ConditionalProblem prob({}, mode);
    std::size_t lineNo = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++lineNo;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string_view::npos || line[first] == '#') continue;
      try {
        prob.add(parseLine(line));
      } catch (const ParseError& e) {
        throw ParseError(e.detail(), lineNo, e.column());
      }
    }
    return prob;
  }

} // namespace jref
