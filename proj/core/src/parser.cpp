#include "jref/parser.hpp"

#include <cctype>

#include "jref/errors.hpp"

namespace jref {

  ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error("parse error at " + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        detail_(message), line_(line), column_(column) {}

  Formula mkNot(Formula a) { return Expr::implies(std::move(a), Expr::bottom()); }

  Formula mkAnd(Formula a, Formula b) {
    return mkNot(Expr::implies(std::move(a), mkNot(std::move(b))));
  }

  Formula mkOr(Formula a, Formula b) { return Expr::implies(mkNot(std::move(a)), std::move(b)); }

  Formula mkIff(Formula a, Formula b) {
    return mkAnd(Expr::implies(a, b), Expr::implies(b, a));
  }

  Formula mkConj(const std::vector<Formula>& parts) {
    if (parts.empty()) throw SortClash("empty conjunction");
    Formula acc = parts.back();
    for (std::size_t i = parts.size() - 1; i-- > 0;) acc = mkAnd(parts[i], acc);
    return acc;
  }

  namespace {

    struct Alias {
      std::string_view utf8;
      TokenKind kind;
    };

    constexpr Alias kUnicode[] = {
      {"⊥", TokenKind::False}, {"→", TokenKind::Arrow}, {"·", TokenKind::Star},
      {"¬", TokenKind::Not},   {"∧", TokenKind::And},   {"∨", TokenKind::Or},
      {"↔", TokenKind::Iff},   {"⇒", TokenKind::DoubleArrow},
    };

    const char* describe(TokenKind k) {
      switch (k) {
        case TokenKind::Ident: return "identifier";
        case TokenKind::False: return "'false'";
        case TokenKind::V: return "'v'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Arrow: return "'->'";
        case TokenKind::Iff: return "'<->'";
        case TokenKind::Or: return "'|'";
        case TokenKind::And: return "'&'";
        case TokenKind::Not: return "'~'";
        case TokenKind::Colon: return "':'";
        case TokenKind::Star: return "'*'";
        case TokenKind::Eq: return "'='";
        case TokenKind::DoubleArrow: return "'=>'";
        case TokenKind::End: return "end of input";
      }
      return "token";
    }

  } // namespace

  std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1, i = 0;
    auto push = [&](TokenKind k, std::string s, std::size_t c) { out.push_back({k, std::move(s), line, c}); };
    while (i < text.size()) {
      const char c = text[i];
      if (c == '\n') {
        ++line;
        col = 1;
        ++i;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        ++col;
        continue;
      }
      if (std::isalpha(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
        std::string word(text.substr(i, j - i));
        TokenKind k = TokenKind::Ident;
        if (word == "false") k = TokenKind::False;
        else if (word == "v") k = TokenKind::V;
        push(k, word, col);
        col += j - i;
        i = j;
        continue;
      }
      auto rest = text.substr(i);
      auto starts = [&](std::string_view s) { return rest.substr(0, s.size()) == s; };
      std::size_t len = 0;
      TokenKind k = TokenKind::End;
      if (starts("<->")) { k = TokenKind::Iff; len = 3; }
      else if (starts("->")) { k = TokenKind::Arrow; len = 2; }
      else if (starts("=>")) { k = TokenKind::DoubleArrow; len = 2; }
      else if (c == '=') { k = TokenKind::Eq; len = 1; }
      else if (c == '(') { k = TokenKind::LParen; len = 1; }
      else if (c == ')') { k = TokenKind::RParen; len = 1; }
      else if (c == '|') { k = TokenKind::Or; len = 1; }
      else if (c == '&') { k = TokenKind::And; len = 1; }
      else if (c == '~') { k = TokenKind::Not; len = 1; }
      else if (c == ':') { k = TokenKind::Colon; len = 1; }
      else if (c == '*') { k = TokenKind::Star; len = 1; }
      else {
        for (const auto& a : kUnicode) {
          if (starts(a.utf8)) {
            k = a.kind;
            len = a.utf8.size();
            break;
          }
        }
      }
      if (len == 0) throw ParseError(std::string("unexpected character '") + c + "'", line, col);
      push(k, std::string(rest.substr(0, len)), col);
      // One column per code point.
      for (std::size_t b = 0; b < len; ++b) {
        if ((static_cast<unsigned char>(text[i + b]) & 0xC0) != 0x80) ++col;
      }
      i += len;
    }
    out.push_back({TokenKind::End, "", line, col});
    return out;
  }

  Parser::Parser(std::string_view text) : tokens_(tokenize(text)) {}

  bool Parser::accept(TokenKind kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void Parser::expect(TokenKind kind, const char* what) {
    if (!accept(kind)) fail(std::string("expected ") + what + ", found " + describe(peek().kind));
  }

  void Parser::fail(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  Formula Parser::formula() { return impl(); }

  Formula Parser::impl() {
    Formula lhs = disj();
    if (accept(TokenKind::Arrow)) return Expr::implies(std::move(lhs), impl());
    if (accept(TokenKind::Iff)) return mkIff(std::move(lhs), disj());
    return lhs;
  }

  Formula Parser::disj() {
    Formula acc = conj();
    while (accept(TokenKind::Or)) acc = mkOr(std::move(acc), conj());
    return acc;
  }

  Formula Parser::conj() {
    Formula acc = neg();
    while (accept(TokenKind::And)) acc = mkAnd(std::move(acc), neg());
    return acc;
  }

  Formula Parser::neg() {
    std::size_t nots = 0;
    while (accept(TokenKind::Not)) ++nots;
    Formula f = justF();
    while (nots-- > 0) f = mkNot(std::move(f));
    return f;
  }

  Formula Parser::justF() {
    const std::size_t start = pos_;
    const auto k = peek().kind;
    if (k == TokenKind::Ident || k == TokenKind::LParen) {
      // Speculatively read a term and look for ':'.
      try {
        Term t = term();
        if (accept(TokenKind::Colon)) return Expr::holds(std::move(t), atomicF());
      } catch (const ParseError&) {
      }
      pos_ = start;
    }
    return atomicF();
  }

  Formula Parser::atomicF() {
    const Token& tok = peek();
    switch (tok.kind) {
      case TokenKind::False:
        ++pos_;
        return Expr::bottom();
      case TokenKind::Ident:
        ++pos_;
        return Expr::prop(tokens_[pos_ - 1].text);
      case TokenKind::V: {
        ++pos_;
        expect(TokenKind::LParen, "'(' after 'v'");
        Term t = term();
        expect(TokenKind::RParen, "')'");
        return Expr::goal(std::move(t));
      }
      case TokenKind::LParen: {
        ++pos_;
        Formula f = formula();
        expect(TokenKind::RParen, "')'");
        return f;
      }
      default:
        fail(std::string("expected a formula, found ") + describe(tok.kind));
    }
  }

  Term Parser::term() {
    Term acc = factor();
    while (accept(TokenKind::Star)) acc = Expr::app(std::move(acc), factor());
    return acc;
  }

  Term Parser::factor() {
    const Token& tok = peek();
    if (tok.kind == TokenKind::Ident) {
      ++pos_;
      return Expr::justAtom(tokens_[pos_ - 1].text);
    }
    if (tok.kind == TokenKind::LParen) {
      ++pos_;
      Term t = term();
      expect(TokenKind::RParen, "')'");
      return t;
    }
    if (tok.kind == TokenKind::V || tok.kind == TokenKind::False)
      fail(std::string("reserved word ") + describe(tok.kind) + " cannot name a justification");
    fail(std::string("expected a term, found ") + describe(tok.kind));
  }

  Formula parseFormula(std::string_view text) {
    Parser p(text);
    Formula f = p.formula();
    if (!p.atEnd()) p.fail("unexpected trailing input");
    return f;
  }

  Term parseTerm(std::string_view text) {
    Parser p(text);
    Term t = p.term();
    if (!p.atEnd()) p.fail("unexpected trailing input");
    return t;
  }

  Expr parseExpr(std::string_view text, Sort sort) {
    return sort == Sort::Term ? parseTerm(text) : parseFormula(text);
  }

} // namespace jref
