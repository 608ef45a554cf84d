#include "support/generators.hpp"

#include <map>
#include <random>

#include "jref/random.hpp"

namespace jref::support {

  namespace {

    class ProblemSampler {
    public:
      ProblemSampler(std::uint64_t seed, const ProblemShape& shape) : rng_(seed), shape_(shape) {}

      std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
      bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

      const std::string& name() { return shape_.alphabet[below(shape_.alphabet.size())]; }

      Term term(std::size_t depth) {
        if (depth <= 1 || coin(0.6)) return Expr::justAtom(name());
        return Expr::app(term(depth - 1), term(depth - 1));
      }

      Formula formula(std::size_t depth) {
        if (depth <= 1 || coin(0.4)) {
          switch (below(4)) {
            case 0:
              return Expr::bottom();
            case 1:
            case 2:
              return Expr::prop(name());
            default:
              return Expr::goal(term(depth));
          }
        }
        if (coin(0.4)) return Expr::holds(term(depth - 1), formula(depth - 1));
        return Expr::implies(formula(depth - 1), formula(depth - 1));
      }

      std::pair<Expr, Expr> pair(std::size_t depth) {
        if (coin(0.4)) return {term(depth), term(depth)};
        return {formula(depth), formula(depth)};
      }

      Clause clause() {
        auto [c, d] = pair(shape_.depth);
        if (!coin(shape_.conditional)) return Clause::unconditional(c, d);
        auto [a, b] = pair(shape_.depth);
        return Clause{a, b, c, d};
      }

    private:
      std::mt19937_64 rng_;
      const ProblemShape& shape_;
    };

  } // namespace

  ConditionalProblem randomProblem(std::uint64_t seed, const ProblemShape& shape) {
    ProblemSampler gen(seed, shape);
    for (;;) {
      const std::size_t n = 1 + gen.below(shape.maxClauses);
      std::vector<Clause> clauses;
      for (std::size_t i = 0; i < n; ++i) clauses.push_back(gen.clause());
      ConditionalProblem prob(std::move(clauses));
      if (prob.variables().size() <= shape.maxVars) return prob;
    }
  }

  Formula randomFormula(std::uint64_t seed, std::size_t depth) {
    ExprSampler gen(seed);
    return gen.formula(depth);
  }

  Formula assertionHeavyFormula(std::uint64_t seed) {
    ExprSampler gen(seed);
    auto assertion = [&] {
      Term t = gen.term(3);
      Formula f = gen.coin(0.3) ? Expr::goal(gen.term(2)) : gen.formula(3);
      return Expr::holds(t, f);
    };
    std::vector<Formula> hyps;
    const std::size_t k = 1 + gen.below(4);
    for (std::size_t j = 0; j < k; ++j) hyps.push_back(gen.coin(0.8) ? assertion() : gen.formula(3));
    Formula f = gen.coin(0.6) ? assertion() : gen.formula(3);
    for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) f = Expr::implies(*it, f);
    return f;
  }

  Interpretation randomInterpretation(std::uint64_t seed) {
    SamplerConfig ground;
    ground.props = {"P", "Q"};
    ground.justs = {"a", "b"};
    ground.allowGoal = false;
    ExprSampler gen(seed, ground);

    Interpretation interp;
    interp.model.sharp = true;
    for (const char* n : {"a", "b"}) {
      if (gen.coin(0.7)) interp.model.justBase[n] = {gen.formula(3)};
    }
    for (const char* n : {"P", "Q"}) {
      if (gen.coin()) interp.model.trueAtoms.insert(Expr::prop(n));
    }

    VarSet support;
    std::map<Var, Expr> bindings;
    for (const char* n : {"x", "y", "z", "w", "c"}) {
      support.insert(Var::just(n));
      bindings.insert_or_assign(Var::just(n), gen.term(2));
    }
    for (const char* n : {"p", "q", "r", "s", "u"}) {
      support.insert(Var::prop(n));
      bindings.insert_or_assign(Var::prop(n), gen.formula(2));
    }
    interp.subst = Substitution(std::move(support), std::move(bindings));
    return interp;
  }

} // namespace jref::support
