#include "support/fixtures.hpp"

#include <map>
#include <utility>

#include "jref/parser.hpp"
#include "support/proof_builder.hpp"

namespace jref::support {

  namespace {

    Formula F(const char* text) { return parseFormula(text); }
    Term T(const char* text) { return parseTerm(text); }

    using Just = std::map<std::string, std::vector<const char*>>;
    using Binds = std::map<std::string, const char*>;

    ModelFixture fixture(std::string name, std::vector<const char*> trueAtoms, Just just, Binds props,
                         Binds terms) {
      ModelFixture fx;
      fx.name = std::move(name);
      BasicModel& m = fx.interp.model;
      m.sharp = true;
      for (const char* a : trueAtoms) m.trueAtoms.insert(F(a));
      for (const auto& [atom, fs] : just) {
        for (const char* f : fs) m.justBase[atom].insert(F(f));
      }
      VarSet support;
      std::map<Var, Expr> bindings;
      for (const char* n : {"p", "q", "r", "s", "u"}) {
        support.insert(Var::prop(n));
        auto it = props.find(n);
        bindings.insert_or_assign(Var::prop(n), F(it == props.end() ? "P" : it->second));
      }
      for (const char* n : {"x", "y", "z", "w", "c"}) {
        support.insert(Var::just(n));
        auto it = terms.find(n);
        bindings.insert_or_assign(Var::just(n), T(it == terms.end() ? "a" : it->second));
      }
      fx.interp.subst = Substitution(std::move(support), std::move(bindings));
      return fx;
    }

  } // namespace

  std::vector<NamedFormula> namedCorpus() {
    return {
        {"p->p", true},
        {"x:(p->q) -> (y:p -> (x*y):q)", true},
        {"x:p -> x:v(x)", true},
        {"(x*y):v(x*y) -> x:(v(y) -> v(x*y)) & y:v(y)", true},
        {"x:p -> (x:q -> (p->q))", true},
        {"(x*y):q -> y:v(y)", true},
        {"(x*y):q -> x:(v(y)->q)", true},
        {"p", false},
        {"x:p -> p", false},
        {"x:p -> y:p", false},
        {"x:v(x)", false},
    };
  }

  std::vector<ModelFixture> modelFixtures() {
    std::vector<ModelFixture> out;
    out.push_back(fixture("nothing justified", {"P"}, {}, {{"q", "Q"}}, {{"y", "b"}}));
    out.push_back(fixture("modus ponens pair", {"P", "Q"}, {{"a", {"P->Q"}}, {"b", {"P"}}},
                          {{"p", "P"}, {"q", "Q"}}, {{"x", "a"}, {"y", "b"}}));
    out.push_back(fixture("curried", {"R"}, {{"a", {"P->(Q->R)"}}, {"b", {"P"}}, {"c", {"Q"}}},
                          {{"p", "P"}, {"q", "Q"}, {"r", "R"}}, {{"x", "a*b"}, {"y", "c"}, {"z", "a"}, {"w", "b"}}));
    out.push_back(fixture("falsum justified", {}, {{"a", {"false"}}}, {{"p", "false"}, {"q", "P"}},
                          {{"x", "a"}, {"y", "b"}}));
    out.push_back(fixture("goal constants", {"v(b)"}, {{"a", {"v(b)->P"}}, {"b", {"v(b)"}}},
                          {{"p", "v(b)"}, {"q", "P"}}, {{"x", "a"}, {"y", "b"}, {"z", "a*b"}}));
    out.push_back(fixture("all true", {"P", "Q", "R"}, {{"a", {"P"}}, {"b", {"Q"}}, {"c", {"R"}}},
                          {{"p", "P"}, {"q", "Q"}, {"r", "R"}}, {{"x", "a"}, {"y", "a"}, {"z", "c"}}));
    out.push_back(fixture("collapsed", {}, {{"a", {"P->P"}}}, {{"p", "P"}, {"q", "P"}, {"r", "P"}},
                          {{"x", "a"}, {"y", "a"}, {"z", "a"}, {"w", "a"}, {"c", "a"}}));
    out.push_back(fixture("compound binding", {"Q"}, {{"a", {"Q->P"}}, {"b", {"Q"}}},
                          {{"p", "Q"}, {"q", "P"}}, {{"x", "a*b"}, {"y", "b"}, {"z", "a"}}));
    out.push_back(fixture("deep application", {"P"}, {{"a", {"P->(P->Q)"}}, {"b", {"P"}}},
                          {{"p", "P"}, {"q", "Q"}, {"r", "P->Q"}},
                          {{"x", "a"}, {"y", "b"}, {"z", "a*b"}, {"w", "(a*b)*b"}}));
    out.push_back(fixture("implications as props", {"Q"}, {{"c", {"P->Q"}}},
                          {{"p", "P->Q"}, {"q", "Q->P"}, {"r", "false"}, {"s", "~P"}}, {{"x", "c"}, {"y", "b"}}));
    out.push_back(fixture("nested assertions", {"P"}, {{"a", {"b:P"}}, {"b", {"P"}}},
                          {{"p", "b:P"}, {"q", "P"}}, {{"x", "a"}, {"y", "b"}, {"z", "a*b"}}));
    out.push_back(fixture("self loop", {}, {{"a", {"v(a)->v(a)"}}, {"b", {"v(a)"}}},
                          {{"p", "v(a)"}, {"q", "v(a)->v(a)"}}, {{"x", "a"}, {"y", "b"}, {"z", "a*b"}}));
    return out;
  }

  std::vector<NamedProof> proofCatalog() {
    std::vector<NamedProof> out;
    auto add = [&](std::string name, const ProofBuilder& pb, const char* theorem) {
      out.push_back({std::move(name), pb.lines(), F(theorem)});
    };
    const Formula p = F("p"), q = F("q"), r = F("r");

    {
      ProofBuilder pb;
      pb.identity(p);
      add("identity", pb, "p -> p");
    }
    {
      ProofBuilder pb;
      pb.axiom(AxiomA1{T("x"), T("y"), p, q});
      add("application", pb, "x:(p->q) -> (y:p -> (x*y):q)");
    }
    {
      ProofBuilder pb;
      pb.axiom(AxiomA3{T("x"), p});
      add("assignment", pb, "x:p -> x:v(x)");
    }
    {
      ProofBuilder pb;
      pb.axiom(AxiomA4{T("x"), T("y")});
      add("decomposition", pb, "(x*y):v(x*y) -> x:(v(y) -> v(x*y)) & y:v(y)");
    }
    {
      ProofBuilder pb;
      pb.k(p, q);
      add("weakening", pb, "p -> q -> p");
    }
    {
      ProofBuilder pb;
      pb.s(p, q, r);
      add("distribution", pb, "(p -> q -> r) -> (p -> q) -> p -> r");
    }
    {
      ProofBuilder pb;
      pb.dne(p);
      add("double negation", pb, "~~p -> p");
    }
    {
      ProofBuilder pb;
      pb.exFalso(p);
      add("ex falso", pb, "false -> p");
    }
    {
      ProofBuilder pb;
      std::size_t h1 = pb.hyp(F("p -> q"));
      std::size_t h2 = pb.hyp(F("q -> r"));
      pb.chain(h1, h2);
      add("syllogism", pb.discharge(F("q -> r")).discharge(F("p -> q")), "(p -> q) -> (q -> r) -> p -> r");
    }
    {
      ProofBuilder pb;
      pb.andLeft(p, q);
      add("and left", pb, "p & q -> p");
    }
    {
      ProofBuilder pb;
      pb.andRight(p, q);
      add("and right", pb, "p & q -> q");
    }
    {
      ProofBuilder pb;
      pb.andIntro(p, q);
      add("and intro", pb, "p -> q -> p & q");
    }
    {
      ProofBuilder pb;
      std::size_t h1 = pb.hyp(F("p -> q"));
      std::size_t h2 = pb.hyp(F("~q"));
      pb.chain(h1, h2);
      add("contraposition", pb.discharge(F("~q")).discharge(F("p -> q")), "(p -> q) -> ~q -> ~p");
    }
    {
      ProofBuilder pb;
      std::size_t h1 = pb.hyp(F("p -> p -> q"));
      std::size_t h2 = pb.hyp(p);
      std::size_t m = pb.mp(h1, h2);
      pb.mp(m, h2);
      add("contraction", pb.discharge(p).discharge(F("p -> p -> q")), "(p -> p -> q) -> p -> q");
    }
    {
      ProofBuilder pb;
      std::size_t h1 = pb.hyp(p);
      std::size_t h2 = pb.hyp(F("~p"));
      pb.mp(h2, h1);
      add("double negation intro", pb.discharge(F("~p")).discharge(p), "p -> ~~p");
    }
    {
      ProofBuilder pb;
      pb.axiom(AxiomA2{{}, p, p});
      add("trivial unification", pb, "p <-> p");
    }
    {
      ProofBuilder pb;
      pb.axiom(AxiomA2{{{T("x"), p}, {T("x"), q}}, p, q});
      add("unification", pb, "x:p & x:q -> (p <-> q)");
    }
    {
      // x:p, x:q, p  |-  q  through x:p & x:q -> (p <-> q)
      ProofBuilder pb;
      const Formula xp = F("x:p"), xq = F("x:q");
      std::size_t h1 = pb.hyp(xp);
      std::size_t h2 = pb.hyp(xq);
      std::size_t h3 = pb.hyp(p);
      std::size_t both = pb.conj({h1, h2});
      std::size_t a2 = pb.axiom(AxiomA2{{{T("x"), p}, {T("x"), q}}, p, q});
      std::size_t iff = pb.mp(a2, both);
      std::size_t pq = pb.first(iff);
      pb.mp(pq, h3);
      add("single justification", pb.discharge(p).discharge(xq).discharge(xp), "x:p -> (x:q -> (p->q))");
    }
    {
      ProofBuilder pb;
      std::size_t a3 = pb.axiom(AxiomA3{T("x*y"), q});
      std::size_t a4 = pb.axiom(AxiomA4{T("x"), T("y")});
      std::size_t c = pb.chain(a3, a4);
      std::size_t right = pb.andRight(F("x:(v(y) -> v(x*y))"), F("y:v(y)"));
      pb.chain(c, right);
      add("argument assignment", pb, "(x*y):q -> y:v(y)");
    }
    {
      // (x*y):q and (x*y):v(x*y) make q and v(x*y) equal mod the assertions.
      ProofBuilder pb;
      const Formula h = F("(x*y):q");
      const Formula fx = F("x:(v(y) -> v(x*y))");
      const Formula gx = F("x:(v(y) -> q)");
      std::size_t h1 = pb.hyp(h);
      std::size_t a3 = pb.axiom(AxiomA3{T("x*y"), q});
      std::size_t goal = pb.mp(a3, h1);
      std::size_t a4 = pb.axiom(AxiomA4{T("x"), T("y")});
      std::size_t parts = pb.mp(a4, goal);
      std::size_t left = pb.first(parts);
      std::size_t both = pb.conj({h1, goal});
      std::size_t a2 = pb.axiom(AxiomA2{{{T("x*y"), q}, {T("x*y"), F("v(x*y)")}}, fx, gx});
      std::size_t iff = pb.mp(a2, both);
      std::size_t fg = pb.first(iff);
      pb.mp(fg, left);
      add("function assignment", pb.discharge(h), "(x*y):q -> x:(v(y)->q)");
    }
    {
      ProofBuilder pb;
      std::size_t h1 = pb.hyp(F("x:(p -> q)"));
      std::size_t h2 = pb.hyp(F("y:p"));
      std::size_t a1 = pb.axiom(AxiomA1{T("x"), T("y"), p, q});
      std::size_t m = pb.mp(pb.mp(a1, h1), h2);
      std::size_t a3 = pb.axiom(AxiomA3{T("x*y"), q});
      pb.mp(a3, m);
      add("application then assignment", pb.discharge(F("y:p")).discharge(F("x:(p -> q)")),
          "x:(p -> q) -> y:p -> (x*y):v(x*y)");
    }
    {
      ProofBuilder pb;
      std::size_t a4 = pb.axiom(AxiomA4{T("x"), T("y")});
      std::size_t right = pb.andRight(F("x:(v(y) -> v(x*y))"), F("y:v(y)"));
      pb.chain(a4, right);
      add("decomposition right", pb, "(x*y):v(x*y) -> y:v(y)");
    }
    {
      ProofBuilder pb;
      const Formula xv = F("x:v(x)"), xp = F("x:p");
      std::size_t h1 = pb.hyp(xv);
      std::size_t h2 = pb.hyp(xp);
      std::size_t h3 = pb.hyp(F("v(x)"));
      std::size_t both = pb.conj({h1, h2});
      std::size_t a2 = pb.axiom(AxiomA2{{{T("x"), F("v(x)")}, {T("x"), p}}, F("v(x)"), p});
      std::size_t iff = pb.mp(a2, both);
      std::size_t fg = pb.first(iff);
      pb.mp(fg, h3);
      add("goal is the justified formula", pb.discharge(F("v(x)")).discharge(xp).discharge(xv),
          "x:v(x) -> x:p -> v(x) -> p");
    }
    return out;
  }

} // namespace jref::support
