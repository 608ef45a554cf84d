// jref :: concrete syntax
//
//   Formula := Impl
//   Impl    := Or ("->" Impl | "<->" Or)?
//   Or      := And ("|" And)*
//   And     := Neg ("&" Neg)*
//   Neg     := "~"* JustF
//   JustF   := Term ":" Atomic | Atomic
//   Atomic  := "false" | ident | "v(" Term ")" | "(" Formula ")"
//   Term    := Factor ("*" Factor)*
//   Factor  := ident | "(" Term ")"
//
// Unicode aliases: ⊥ → · ¬ ∧ ∨ ↔. Sugar is removed while parsing:
//   ~A = A -> false, A & B = ~(A -> ~B), A | B = ~A -> B,
//   A <-> B = (A -> B) & (B -> A).

#ifndef JREF_PARSER_HPP_
#define JREF_PARSER_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "jref/expr.hpp"

namespace jref {

  Formula parseFormula(std::string_view text);
  Term parseTerm(std::string_view text);
  Expr parseExpr(std::string_view text, Sort sort);

  // Sugar constructors, shared with the calculus.
  Formula mkNot(Formula a);
  Formula mkAnd(Formula a, Formula b);
  Formula mkOr(Formula a, Formula b);
  Formula mkIff(Formula a, Formula b);
  // Right-associated conjunction; requires a non-empty list.
  Formula mkConj(const std::vector<Formula>& parts);

  enum class TokenKind {
    Ident, False, V,
    LParen, RParen,
    Arrow, Iff, Or, And, Not,
    Colon, Star,
    Eq, DoubleArrow,
    End,
  };

  struct Token {
    TokenKind kind;
    std::string text;
    std::size_t line;
    std::size_t column;
  };

  // Recursive-descent parser over a token stream. Exposed so that line-based
  // formats (unification problems) can reuse the expression grammar.
  class Parser {
  public:
    explicit Parser(std::string_view text);

    Formula formula();
    Term term();

    const Token& peek() const { return tokens_[pos_]; }
    bool atEnd() const { return peek().kind == TokenKind::End; }
    bool accept(TokenKind kind);
    void expect(TokenKind kind, const char* what);
    [[noreturn]] void fail(const std::string& message) const;

    std::size_t position() const { return pos_; }
    void rewind(std::size_t pos) { pos_ = pos; }

  private:
    Formula impl();
    Formula disj();
    Formula conj();
    Formula neg();
    Formula justF();
    Formula atomicF();
    Term factor();

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
  };

  std::vector<Token> tokenize(std::string_view text);

} // namespace jref

#endif // JREF_PARSER_HPP_
