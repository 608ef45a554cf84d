#include <gtest/gtest.h>

#include "jref/errors.hpp"
#include "jref/parser.hpp"
#include "jref/printer.hpp"
#include "jref/random.hpp"

using namespace jref;

namespace {

  Term J(const char* n) { return Expr::justAtom(n); }
  Formula P(const char* n) { return Expr::prop(n); }
  Formula imp(Formula a, Formula b) { return Expr::implies(std::move(a), std::move(b)); }

} // namespace

TEST(Parser, ApplicationAxiomInstance) {
  Formula f = parseFormula("x:(p->q) -> (y:p -> (x*y):q)");
  Formula expected = imp(Expr::holds(J("x"), imp(P("p"), P("q"))),
                         imp(Expr::holds(J("y"), P("p")), Expr::holds(Expr::app(J("x"), J("y")), P("q"))));
  EXPECT_EQ(f, expected);
}

TEST(Parser, FalseIsBottom) {
  EXPECT_EQ(parseFormula("false"), Expr::bottom());
  EXPECT_EQ(parseFormula("⊥"), Expr::bottom());
}

TEST(Parser, NegationDesugars) {
  EXPECT_EQ(parseFormula("~p"), imp(P("p"), Expr::bottom()));
  EXPECT_EQ(parseFormula("~~p"), imp(imp(P("p"), Expr::bottom()), Expr::bottom()));
}

TEST(Parser, ConjunctionDisjunctionIff) {
  Formula p = P("p"), q = P("q");
  EXPECT_EQ(parseFormula("p & q"), mkNot(imp(p, mkNot(q))));
  EXPECT_EQ(parseFormula("p | q"), imp(mkNot(p), q));
  EXPECT_EQ(parseFormula("p <-> q"), mkAnd(imp(p, q), imp(q, p)));
  // & and | are left-associative, & binds tighter than |.
  EXPECT_EQ(parseFormula("p & q & p"), mkAnd(mkAnd(p, q), p));
  EXPECT_EQ(parseFormula("p | q & p"), mkOr(p, mkAnd(q, p)));
}

TEST(Parser, ImplicationIsRightAssociative) {
  EXPECT_EQ(parseFormula("p -> q -> p"), imp(P("p"), imp(P("q"), P("p"))));
  EXPECT_EQ(parseFormula("(p -> q) -> p"), imp(imp(P("p"), P("q")), P("p")));
}

TEST(Parser, ColonBindsTighterThanArrow) {
  EXPECT_EQ(parseFormula("x:p -> q"), imp(Expr::holds(J("x"), P("p")), P("q")));
}

TEST(Parser, ApplicationIsLeftAssociative) {
  EXPECT_EQ(parseTerm("x*y*z"), Expr::app(Expr::app(J("x"), J("y")), J("z")));
  EXPECT_EQ(parseTerm("x*(y*z)"), Expr::app(J("x"), Expr::app(J("y"), J("z"))));
}

TEST(Parser, UnicodeAliases) {
  EXPECT_EQ(parseFormula("x:(p→q) → (y:p → (x·y):q)"), parseFormula("x:(p->q) -> (y:p -> (x*y):q)"));
  EXPECT_EQ(parseFormula("¬p ∧ q ∨ p ↔ q"), parseFormula("~p & q | p <-> q"));
}

TEST(Parser, PositionalSorts) {
  // The same spelling denotes a justification atom and a proposition.
  Formula f = parseFormula("p:p");
  EXPECT_EQ(f, Expr::holds(J("p"), P("p")));
  EXPECT_NE(f.just(), f.stmt());
}

TEST(Parser, GoalNodes) {
  EXPECT_EQ(parseFormula("v(x*y)"), Expr::goal(Expr::app(J("x"), J("y"))));
  EXPECT_EQ(parseFormula("x:v(x)"), Expr::holds(J("x"), Expr::goal(J("x"))));
}

TEST(Parser, StatementOfColonMustBeAtomic) {
  EXPECT_EQ(parseFormula("x:p->q:r"), imp(Expr::holds(J("x"), P("p")), Expr::holds(J("q"), P("r"))));
  EXPECT_THROW(parseFormula("x:y:p"), ParseError);
  EXPECT_EQ(parseFormula("x:(y:p)"), Expr::holds(J("x"), Expr::holds(J("y"), P("p"))));
  EXPECT_THROW(parseFormula("x:~p"), ParseError);
}

TEST(Parser, ErrorsCarryPosition) {
  try {
    parseFormula("p -> (");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 7u);
  }
  try {
    parseFormula("p ->\n  q $");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
}

TEST(Parser, RejectsMalformedInput) {
  for (const char* bad : {"", "p ->", "(p", "p q", "x*y", "v", "v(p->q)", "x:", "false:p", "v:p",
                          "p <-> q <-> p", "x**y:p", "1p"}) {
    EXPECT_THROW(parseFormula(bad), ParseError) << bad;
  }
}

TEST(Printer, MinimalParentheses) {
  EXPECT_EQ(print(Expr::holds(Expr::app(J("x"), J("y")), P("q"))), "(x*y):q");
  EXPECT_EQ(print(Expr::goal(Expr::app(J("x"), J("y")))), "v(x*y)");
  EXPECT_EQ(print(imp(P("p"), imp(P("q"), P("p")))), "p -> q -> p");
  EXPECT_EQ(print(imp(imp(P("p"), P("q")), P("p"))), "(p -> q) -> p");
  EXPECT_EQ(print(Expr::holds(J("x"), imp(P("p"), P("q")))), "x:(p -> q)");
  EXPECT_EQ(print(Expr::app(J("x"), Expr::app(J("y"), J("z")))), "x*(y*z)");
  EXPECT_EQ(print(Expr::bottom()), "false");
}

TEST(Printer, RoundTripOnRandomTrees) {
  ExprSampler gen(20240611);
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen.formula(6);
    const std::string text = print(f);
    ASSERT_EQ(parseFormula(text), f) << text;
    ASSERT_EQ(print(parseFormula(text)), text);
  }
}

TEST(Printer, PrintParseIsIdentityUpToWhitespace) {
  for (const char* s : {"p -> q -> p", "(x*y):q", "x:(p -> q) -> y:p -> (x*y):q", "v(x*(y*z)) -> false"}) {
    EXPECT_EQ(print(parseFormula(s)), s);
  }
  EXPECT_EQ(print(parseFormula("  (x * y) :q->p ")), "(x*y):q -> p");
}

TEST(Syntax, DesugaringUsesOnlyBottomAndArrow) {
  ExprSampler gen(7);
  const char* ops[] = {" & ", " | ", " <-> "};
  for (int i = 0; i < 300; ++i) {
    std::string text = "(" + print(gen.formula(3)) + ")" + ops[i % 3] + "~(" + print(gen.formula(3)) + ")";
    Formula f = parseFormula(text);
    // Whatever came in, only the official constructors come out.
    std::function<void(const Expr&)> check = [&](const Expr& e) {
      switch (e.kind()) {
        case Kind::Implies:
        case Kind::Holds:
        case Kind::App:
          check(e.lhs());
          check(e.rhs());
          break;
        case Kind::Goal:
          check(e.index());
          break;
        default:
          break;
      }
    };
    check(f);
    EXPECT_EQ(parseFormula(print(f)), f);
  }
}

TEST(VarsOf, Examples) {
  EXPECT_EQ(varsOf(parseFormula("(x*y):q")), (VarSet{Var::just("x"), Var::just("y"), Var::prop("q")}));
  EXPECT_EQ(varsOf(parseFormula("v(x)")), (VarSet{Var::goal(J("x")), Var::just("x")}));
  EXPECT_TRUE(varsOf(parseFormula("false")).empty());
}

TEST(TermsOf, Examples) {
  const Term xy = Expr::app(J("x"), J("y"));
  EXPECT_EQ(termsOf(parseFormula("(x*y):q")), (TermSet{J("x"), J("y"), xy}));
  EXPECT_TRUE(termsOf(parseFormula("p -> q")).empty());
  EXPECT_EQ(termsOf(parseFormula("v(x*y) -> x:p")), (TermSet{J("x"), J("y"), xy}));
}

TEST(TermsOf, ClosedUnderSubterms) {
  ExprSampler gen(99);
  for (int i = 0; i < 500; ++i) {
    TermSet ts = termsOf(gen.formula(5));
    for (const Term& t : ts) {
      if (t.kind() == Kind::App) {
        EXPECT_TRUE(ts.contains(t.fun()));
        EXPECT_TRUE(ts.contains(t.arg()));
      }
    }
  }
}

TEST(Expr, SortChecksInConstructors) {
  EXPECT_THROW(Expr::holds(P("p"), P("q")), SortClash);
  EXPECT_THROW(Expr::app(J("x"), P("p")), SortClash);
  EXPECT_THROW(Expr::implies(J("x"), P("p")), SortClash);
  EXPECT_THROW(Expr::goal(P("p")), SortClash);
  EXPECT_THROW(Var::of(Expr::bottom()), SortClash);
}

TEST(Expr, StructuralEqualityAndOrder) {
  Formula a = parseFormula("x:p -> v(x*y)");
  Formula b = parseFormula("x:p -> v(x*y)");
  EXPECT_FALSE(a.sameNode(b));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a <=> b, std::strong_ordering::equal);
  EXPECT_NE(parseFormula("p"), parseFormula("q"));
  EXPECT_EQ(a.size(), 8u);
}
