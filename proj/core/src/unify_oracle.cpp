#include <map>

#include "jref/errors.hpp"
#include "jref/unification.hpp"

namespace jref {

  std::vector<Term> enumerateTerms(const std::vector<std::string>& alphabet, std::size_t depth) {
    std::vector<Term> out;
    if (depth == 0) return out;
    for (const auto& a : alphabet) out.push_back(Expr::justAtom(a));
    // out holds every term of depth <= d after round d.
    for (std::size_t d = 2; d <= depth; ++d) {
      std::vector<Term> shallower = out;
      for (const Term& f : shallower) {
        for (const Term& a : shallower) {
          if (std::max(f.depth(), a.depth()) + 1 == d) out.push_back(Expr::app(f, a));
        }
      }
    }
    return out;
  }

  std::vector<Formula> enumerateFormulas(const std::vector<std::string>& alphabet, std::size_t depth) {
    std::vector<Formula> out;
    if (depth == 0) return out;
    const std::vector<Term> terms = enumerateTerms(alphabet, depth);
    out.push_back(Expr::bottom());
    for (const auto& a : alphabet) out.push_back(Expr::prop(a));
    for (const Term& t : terms) out.push_back(Expr::goal(t));
    for (std::size_t d = 2; d <= depth; ++d) {
      std::vector<Formula> shallower;
      for (const Formula& f : out) {
        if (f.depth() < d) shallower.push_back(f);
      }
      for (const Formula& l : shallower) {
        for (const Formula& r : shallower) {
          if (std::max(l.depth(), r.depth()) + 1 == d) out.push_back(Expr::implies(l, r));
        }
      }
      for (const Term& t : terms) {
        if (t.depth() >= d) continue;
        for (const Formula& f : shallower) {
          if (std::max(t.depth(), f.depth()) + 1 == d) out.push_back(Expr::holds(t, f));
        }
      }
    }
    return out;
  }

  void bruteForceUnifiers(const ConditionalProblem& prob, const std::vector<std::string>& alphabet,
                          std::size_t depth, const std::function<bool(const Substitution&)>& visit,
                          OracleLimits limits) {
    const VarSet support = prob.variables();
    const std::vector<Term> terms = enumerateTerms(alphabet, depth);
    std::vector<Formula> formulas = enumerateFormulas(alphabet, depth);
    if (prob.mode() == UnifMode::Plain) std::erase_if(formulas, [](const Formula& f) { return containsGoal(f); });

    std::vector<Var> vars(support.begin(), support.end());
    std::vector<std::vector<Expr>> choices;
    std::size_t total = 1;
    for (const Var& z : vars) {
      std::vector<Expr> c{z.expr()};
      const auto& pool = z.sort() == Sort::Term ? terms : formulas;
      for (const Expr& e : pool) {
        if (e != z.expr()) c.push_back(e);
      }
      if (total > limits.maxCandidates / c.size() + 1)
        throw ResourceBound("brute-force enumeration exceeds " + std::to_string(limits.maxCandidates) + " candidates");
      total *= c.size();
      choices.push_back(std::move(c));
    }
    if (total > limits.maxCandidates)
      throw ResourceBound("brute-force enumeration exceeds " + std::to_string(limits.maxCandidates) + " candidates");

    std::vector<std::size_t> odometer(vars.size(), 0);
    for (;;) {
      std::map<Var, Expr> bindings;
      for (std::size_t i = 0; i < vars.size(); ++i) bindings.emplace(vars[i], choices[i][odometer[i]]);
      Substitution s(support, std::move(bindings));
      const bool valid = isIdempotent(s) && (prob.mode() == UnifMode::Plain || isComprehensive(s));
      if (valid && unifiesCheck(s, prob)) {
        if (!visit(s)) return;
      }
      std::size_t i = 0;
      while (i < odometer.size() && ++odometer[i] == choices[i].size()) odometer[i++] = 0;
      if (i == odometer.size()) return;
    }
  }

  std::vector<Substitution> bruteForceUnifiers(const ConditionalProblem& prob,
                                               const std::vector<std::string>& alphabet, std::size_t depth,
                                               OracleLimits limits) {
    std::vector<Substitution> out;
    bruteForceUnifiers(prob, alphabet, depth, [&](const Substitution& s) {
      out.push_back(s);
      return true;
    }, limits);
    return out;
  }

} // namespace jref
