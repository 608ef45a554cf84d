#include "support/oracles.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace jref::support {

  namespace {

    void collectAtoms(const Formula& f, std::set<Formula>& out) {
      switch (f.kind()) {
        case Kind::Implies:
          collectAtoms(f.lhs(), out);
          collectAtoms(f.rhs(), out);
          break;
        case Kind::Bottom:
          break;
        default:
          out.insert(f);
      }
    }

    bool eval(const Formula& f, const std::map<Formula, bool>& val) {
      switch (f.kind()) {
        case Kind::Bottom:
          return false;
        case Kind::Implies:
          return !eval(f.lhs(), val) || eval(f.rhs(), val);
        default:
          return val.at(f);
      }
    }

  } // namespace

  bool truthTableValid(const Formula& f) {
    std::set<Formula> atomSet;
    collectAtoms(f, atomSet);
    const std::vector<Formula> atoms(atomSet.begin(), atomSet.end());
    if (atoms.size() > 20) throw std::invalid_argument("too many atoms for a truth table");
    for (std::size_t row = 0; row < (std::size_t{1} << atoms.size()); ++row) {
      std::map<Formula, bool> val;
      for (std::size_t i = 0; i < atoms.size(); ++i) val[atoms[i]] = (row >> i) & 1;
      if (!eval(f, val)) return false;
    }
    return true;
  }

  std::vector<Formula> implicationalFormulas(const std::vector<std::string>& atoms, std::size_t depth) {
    std::vector<Formula> level{Expr::bottom()};
    for (const auto& a : atoms) level.push_back(Expr::prop(a));
    const std::vector<Formula> base = level;
    for (std::size_t d = 1; d <= depth; ++d) {
      std::vector<Formula> next = base;
      for (const Formula& l : level) {
        for (const Formula& r : level) next.push_back(Expr::implies(l, r));
      }
      level = std::move(next);
    }
    return level;
  }

  bool factorsThrough(const Substitution& theta, const Substitution& sigma, const VarSet& vars) {
    for (const Var& z : vars) {
      if (sigma.apply(theta.apply(z.expr())) != sigma.apply(z.expr())) return false;
    }
    return true;
  }

  bool triggeredEquationsHold(const Substitution& sigma, const ConditionalProblem& prob) {
    for (const Clause& c : prob.clauses()) {
      if (sigma.apply(c.condLhs) == sigma.apply(c.condRhs) && sigma.apply(c.eqLhs) != sigma.apply(c.eqRhs))
        return false;
    }
    return true;
  }

  bool sameAction(const Substitution& a, const Substitution& b, const VarSet& vars) {
    for (const Var& z : vars) {
      if (a.apply(z.expr()) != b.apply(z.expr())) return false;
    }
    return true;
  }

} // namespace jref::support
