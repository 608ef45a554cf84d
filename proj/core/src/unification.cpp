#include "jref/unification.hpp"

#include <map>
#include <set>
#include <sstream>

#include "jref/errors.hpp"
#include "jref/printer.hpp"

namespace jref {

  Clause Clause::unconditional(Expr lhs, Expr rhs) {
    return Clause{Expr::bottom(), Expr::bottom(), std::move(lhs), std::move(rhs)};
  }

  namespace {

    void checkClause(const Clause& c, UnifMode mode) {
      if (c.condLhs.sort() != c.condRhs.sort())
        throw SortClash("condition '" + print(c.condLhs) + " = " + print(c.condRhs) + "' mixes sorts");
      if (c.eqLhs.sort() != c.eqRhs.sort())
        throw SortClash("equation '" + print(c.eqLhs) + " = " + print(c.eqRhs) + "' mixes sorts");
      if (mode == UnifMode::Plain) {
        for (const Expr* e : {&c.condLhs, &c.condRhs, &c.eqLhs, &c.eqRhs}) {
          if (containsGoal(*e))
            throw ModeViolation("plain unification does not admit v(...): '" + print(*e) + "'");
        }
      }
    }

  } // namespace

  ConditionalProblem::ConditionalProblem(std::vector<Clause> clauses, UnifMode mode)
      : clauses_(std::move(clauses)), mode_(mode) {
    for (const Clause& c : clauses_) checkClause(c, mode_);
  }

  void ConditionalProblem::add(Clause c) {
    checkClause(c, mode_);
    clauses_.push_back(std::move(c));
  }

  VarSet ConditionalProblem::variables() const {
    VarSet out;
    for (const Clause& c : clauses_) {
      collectVars(c.condLhs, out);
      collectVars(c.condRhs, out);
      collectVars(c.eqLhs, out);
      collectVars(c.eqRhs, out);
    }
    return out;
  }

  TermSet ConditionalProblem::terms() const {
    TermSet out;
    for (const Clause& c : clauses_) {
      collectTerms(c.condLhs, out);
      collectTerms(c.condRhs, out);
      collectTerms(c.eqLhs, out);
      collectTerms(c.eqRhs, out);
    }
    return out;
  }

  ConditionalProblem problemFromAssertions(std::span<const Assertion> asserts) {
    std::vector<Assertion> distinct;
    std::set<Assertion> seen;
    for (const auto& a : asserts) {
      if (!a.first.isTerm() || !a.second.isFormula())
        throw SortClash("assertion needs a term and a formula");
      if (seen.insert(a).second) distinct.push_back(a);
    }
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      for (std::size_t j = i + 1; j < distinct.size(); ++j) {
        if (distinct[i].second == distinct[j].second) continue;
        clauses.push_back(Clause{distinct[i].first, distinct[j].first, distinct[i].second, distinct[j].second});
      }
    }
    return ConditionalProblem(std::move(clauses), UnifMode::Referential);
  }

  bool varPrecedes(const Var& a, const Var& b) {
    const bool ga = a.isGoal(), gb = b.isGoal();
    if (ga != gb) return !ga;
    return print(a) < print(b);
  }

  bool unifiesCheck(const Substitution& s, const ConditionalProblem& prob) {
    for (const Clause& c : prob.clauses()) {
      if (s.apply(c.condLhs) == s.apply(c.condRhs) && s.apply(c.eqLhs) != s.apply(c.eqRhs)) return false;
    }
    if (!isIdempotent(s)) return false;
    if (prob.mode() == UnifMode::Referential) {
      TermSet ts = prob.terms();
      TermSet images;
      for (const Term& t : ts) images.insert(s.apply(t));
      ts.insert(images.begin(), images.end());
      if (!isComprehensiveOn(s, ts)) return false;
    }
    return true;
  }

  namespace {

    // Syntactic unification in which v(t) is an opaque variable: its index is
    // never rewritten. Bindings are kept in triangular form.
    class FirstOrderSolver {
    public:
      explicit FirstOrderSolver(const ExprSet& preferBound) : preferBound_(preferBound) {}

      bool unify(const Expr& a0, const Expr& b0) {
        std::vector<std::pair<Expr, Expr>> work{{a0, b0}};
        while (!work.empty()) {
          auto [a, b] = work.back();
          work.pop_back();
          a = walk(a);
          b = walk(b);
          if (a == b) continue;
          if (a.isVariable() && b.isVariable()) {
            if (bindLeft(a, b)) bind(a, b);
            else bind(b, a);
            continue;
          }
          if (a.isVariable()) {
            if (occurs(a, b)) return false;
            bind(a, b);
            continue;
          }
          if (b.isVariable()) {
            if (occurs(b, a)) return false;
            bind(b, a);
            continue;
          }
          if (a.kind() != b.kind()) return false;
          switch (a.kind()) {
            case Kind::App:
            case Kind::Implies:
            case Kind::Holds:
              work.emplace_back(a.lhs(), b.lhs());
              work.emplace_back(a.rhs(), b.rhs());
              break;
            default:
              return false;
          }
        }
        return true;
      }

      Expr resolve(const Expr& e) const {
        if (e.isVariable()) {
          Expr w = walk(e);
          return w.isVariable() ? w : resolve(w);
        }
        switch (e.kind()) {
          case Kind::App:
          case Kind::Implies:
          case Kind::Holds: {
            Expr l = resolve(e.lhs());
            Expr r = resolve(e.rhs());
            if (l.sameNode(e.lhs()) && r.sameNode(e.rhs())) return e;
            if (e.kind() == Kind::App) return Expr::app(std::move(l), std::move(r));
            if (e.kind() == Kind::Implies) return Expr::implies(std::move(l), std::move(r));
            return Expr::holds(std::move(l), std::move(r));
          }
          default:
            return e;
        }
      }

    private:
      Expr walk(Expr e) const {
        while (e.isVariable()) {
          auto it = bindings_.find(e);
          if (it == bindings_.end()) break;
          e = it->second;
        }
        return e;
      }

      bool occurs(const Expr& v, const Expr& e0) const {
        Expr e = walk(e0);
        if (e == v) return true;
        switch (e.kind()) {
          case Kind::App:
          case Kind::Implies:
          case Kind::Holds:
            return occurs(v, e.lhs()) || occurs(v, e.rhs());
          default:
            return false;
        }
      }

      // Which side of a variable-variable equation gets bound.
      bool bindLeft(const Expr& a, const Expr& b) const {
        const bool pa = preferBound_.contains(a), pb = preferBound_.contains(b);
        if (pa != pb) return pa;
        return varPrecedes(Var::of(b), Var::of(a));
      }

      void bind(const Expr& v, const Expr& e) { bindings_.insert_or_assign(v, e); }

      std::map<Expr, Expr> bindings_;
      const ExprSet& preferBound_;
    };

    using Equation = std::pair<Expr, Expr>;

    class ConditionalSolver {
    public:
      ConditionalSolver(const ConditionalProblem& prob, const Substitution* base)
          : prob_(prob), referential_(prob.mode() == UnifMode::Referential) {
        universe_ = prob.variables();
        if (base != nullptr) {
          universe_.insert(base->support().begin(), base->support().end());
          for (const auto& [z, value] : base->bindings()) {
            preferBound_.insert(z.expr());
            addEquation(z.expr(), value);
            collectVars(value, universe_);
          }
        }
      }

      UnifResult run() {
        for (;;) {
          FirstOrderSolver fo(preferBound_);
          for (const auto& [l, r] : equations_) {
            if (!fo.unify(l, r)) return UnifResult::notUnifiable();
          }
          for (const auto& [l, r] : equations_) {
            collectVars(l, universe_);
            collectVars(r, universe_);
          }

          bool changed = false;
          if (referential_) {
            // v(t) = v(tθ): makes the candidate comprehensive.
            std::vector<Expr> goals;
            for (const Var& z : universe_) {
              if (z.isGoal()) goals.push_back(z.expr());
            }
            for (const Expr& g : goals) {
              Term image = fo.resolve(g.index());
              if (image == g.index()) continue;
              Expr target = Expr::goal(image);
              universe_.insert(Var::of(target));
              changed |= addEquation(g, target);
            }
          }
          if (changed) continue;

          Substitution candidate = finalize(fo);
          for (const Clause& c : prob_.clauses()) {
            if (candidate.apply(c.condLhs) == candidate.apply(c.condRhs)
                && candidate.apply(c.eqLhs) != candidate.apply(c.eqRhs)) {
              changed |= addEquation(c.eqLhs, c.eqRhs);
            }
          }
          if (!changed) return UnifResult{std::move(candidate)};
        }
      }

    private:
      bool addEquation(const Expr& l, const Expr& r) {
        Equation eq = l < r ? Equation{l, r} : Equation{r, l};
        if (!seen_.insert(eq).second) return false;
        equations_.push_back(std::move(eq));
        return true;
      }

      Substitution finalize(const FirstOrderSolver& fo) const {
        std::map<Var, Expr> sigma;
        for (const Var& z : universe_) {
          Expr r = fo.resolve(z.expr());
          if (r != z.expr()) sigma.emplace(z, std::move(r));
        }
        if (referential_) normalizeRepresentatives(fo, sigma);
        return Substitution(universe_, std::move(sigma));
      }

      // A class of reference variables that resolved to v(r) with r not yet
      // in normal form is re-rooted at v(rθ), unless that would unbind a
      // variable the base substitution already binds.
      void normalizeRepresentatives(const FirstOrderSolver& fo, std::map<Var, Expr>& sigma) const {
        bool changed = true;
        while (changed) {
          changed = false;
          for (const Var& z : universe_) {
            if (!z.isGoal() || sigma.contains(z)) continue;
            Term image = fo.resolve(z.expr().index());
            if (image == z.expr().index()) continue;
            Var target = Var::goal(image);
            auto it = sigma.find(target);
            if (it == sigma.end() || it->second != z.expr()) continue;
            if (preferBound_.contains(target.expr())) continue;
            sigma.erase(it);
            for (auto& [w, value] : sigma) value = replaceAll(value, z.expr(), target.expr());
            sigma.emplace(z, target.expr());
            changed = true;
            break;
          }
        }
      }

      const ConditionalProblem& prob_;
      const bool referential_;
      VarSet universe_;
      ExprSet preferBound_;
      std::vector<Equation> equations_;
      std::set<Equation> seen_;
    };

    UnifResult solve(const ConditionalProblem& prob, const Substitution* base) {
      UnifResult result = ConditionalSolver(prob, base).run();
      if (result.unifiable()) {
        const Substitution& s = *result.mgu;
        const bool ok = isIdempotent(s) && isConservative(s)
                        && (prob.mode() == UnifMode::Plain || isComprehensive(s)) && unifiesCheck(s, prob)
                        && (base == nullptr || extendsTo(*base, s));
        if (!ok) {
          std::ostringstream os;
          os << "unifier construction produced an invalid result " << s;
          throw InternalInvariantViolation(os.str());
        }
      }
      return result;
    }

  } // namespace

  UnifResult mgu(const ConditionalProblem& prob) { return solve(prob, nullptr); }

  UnifResult mguExtending(const ConditionalProblem& prob, const Substitution& base) {
    return solve(prob, &base);
  }

  bool equalMod(const Expr& a, const Expr& b, const ConditionalProblem& prob) {
    if (a.sort() != b.sort()) return false;
    UnifResult r = mgu(prob);
    if (!r.unifiable()) return true;
    return r.mgu->apply(a) == r.mgu->apply(b);
  }

} // namespace jref
