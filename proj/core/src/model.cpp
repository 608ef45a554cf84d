#include "jref/model.hpp"

#include <algorithm>

#include "jref/errors.hpp"
#include "jref/printer.hpp"

namespace jref {

  FormulaSet rhd(const FormulaSet& s, const FormulaSet& t) {
    FormulaSet out;
    for (const Formula& f : s) {
      if (f.kind() == Kind::Implies && t.contains(f.lhs())) out.insert(f.rhs());
    }
    return out;
  }

  namespace {

    const FormulaSet& explicitEntry(const BasicModel& m, const Term& t) {
      static const FormulaSet none;
      auto it = m.explicitCompound.find(t);
      return it == m.explicitCompound.end() ? none : it->second;
    }

    // s* ▷ u* together with the explicit entries, ignoring sharpness.
    FormulaSet rawDenote(const BasicModel& m, const Term& t) {
      if (t.kind() == Kind::JustAtom) {
        auto it = m.justBase.find(t.name());
        return it == m.justBase.end() ? FormulaSet{} : it->second;
      }
      FormulaSet out = rhd(rawDenote(m, t.fun()), rawDenote(m, t.arg()));
      const FormulaSet& extra = explicitEntry(m, t);
      out.insert(extra.begin(), extra.end());
      return out;
    }

  } // namespace

  FormulaSet denote(const BasicModel& m, const Term& t) {
    if (!t.isTerm()) throw SortClash("denote expects a term, got " + print(t));
    if (t.kind() == Kind::JustAtom) return rawDenote(m, t);
    FormulaSet out = rhd(denote(m, t.fun()), denote(m, t.arg()));
    const FormulaSet& extra = explicitEntry(m, t);
    if (m.sharp) {
      if (!std::includes(out.begin(), out.end(), extra.begin(), extra.end()))
        throw SharpnessViolation("explicit entry for " + print(t) + " is not produced by application");
    } else {
      out.insert(extra.begin(), extra.end());
    }
    return out;
  }

  bool evalFormula(const BasicModel& m, const Formula& f) {
    switch (f.kind()) {
      case Kind::Bottom:
        return false;
      case Kind::PropAtom:
      case Kind::Goal:
        return m.trueAtoms.contains(f);
      case Kind::Implies:
        return !evalFormula(m, f.lhs()) || evalFormula(m, f.rhs());
      case Kind::Holds:
        return denote(m, f.just()).contains(f.stmt());
      default:
        throw SortClash("cannot evaluate the term " + print(f));
    }
  }

  std::optional<Formula> goalOf(const BasicModel& m, const Term& t) {
    FormulaSet d = denote(m, t);
    if (d.empty()) return std::nullopt;
    if (d.size() > 1) throw NotInjective(print(t) + " justifies " + std::to_string(d.size()) + " formulas");
    return *d.begin();
  }

  ModelReport checkModel(const BasicModel& m, const TermSet& fragment) {
    TermSet closed;
    for (const Term& t : fragment) collectTerms(t, closed);
    ModelReport r;
    for (const Term& t : closed) {
      FormulaSet d = rawDenote(m, t);
      if (d.size() > 1) r.injective = false;
      if (t.kind() != Kind::App) continue;
      FormulaSet applied = rhd(rawDenote(m, t.fun()), rawDenote(m, t.arg()));
      if (!std::includes(d.begin(), d.end(), applied.begin(), applied.end())) r.basicClosure = false;
      if (d != applied) r.sharp = false;
    }
    return r;
  }

  namespace {

    Expr resolveGoals(const BasicModel& m, const Expr& e) {
      switch (e.kind()) {
        case Kind::Goal: {
          auto g = goalOf(m, e.index());
          return g ? *g : e;
        }
        case Kind::Implies:
          return Expr::implies(resolveGoals(m, e.lhs()), resolveGoals(m, e.rhs()));
        case Kind::Holds:
          return Expr::holds(e.just(), resolveGoals(m, e.stmt()));
        default:
          return e;
      }
    }

  } // namespace

  Expr applyInterp(const Interpretation& i, const Expr& e) { return resolveGoals(i.model, i.subst.apply(e)); }

  bool evalUnder(const Interpretation& i, const Formula& f) { return evalFormula(i.model, applyInterp(i, f)); }

  InterpretationReport checkInterpretation(const Interpretation& i, const TermSet& terms) {
    InterpretationReport r;
    std::map<Term, Formula> goalByImage;
    for (const Term& t : terms) {
      Term image = applyInterp(i, t);
      Formula goal = applyInterp(i, Expr::goal(t));
      auto [it, fresh] = goalByImage.emplace(image, goal);
      if (!fresh && it->second != goal) r.comprehensive = false;
      FormulaSet d = denote(i.model, image);
      if (!d.empty() && !d.contains(goal)) r.goalCondition = false;
    }
    return r;
  }

  Countermodel buildCountermodel(const SaturationState& leaf, const Formula& f) {
    const Substitution& theta = leaf.theta;
    auto fixed = [&](const FormulaSet& s) {
      FormulaSet out;
      for (const Formula& g : s) {
        if (isFixedPoint(theta, g)) out.insert(g);
      }
      return out;
    };
    const FormulaSet gamma = fixed(leaf.gamma);
    const FormulaSet delta = fixed(leaf.delta);

    Countermodel cm;
    BasicModel& m = cm.interp.model;
    m.sharp = true;
    for (const Formula& g : gamma) {
      if (g.kind() == Kind::PropAtom || g.kind() == Kind::Goal) {
        m.trueAtoms.insert(g);
      } else if (g.kind() == Kind::Holds) {
        if (g.just().kind() == Kind::JustAtom) m.justBase[g.just().name()].insert(g.stmt());
        else m.explicitCompound[g.just()].insert(g.stmt());
      }
    }
    cm.interp.subst = theta;

    TermSet logicTerms = termsOf(f);
    for (const FormulaSet* s : {&leaf.gamma, &leaf.delta}) {
      for (const Formula& g : *s) collectTerms(g, logicTerms);
    }
    for (const Term& t : logicTerms) cm.fragment.insert(applyInterp(cm.interp, t));
    for (const Formula& g : gamma) {
      if (g.kind() != Kind::Holds || g.stmt().kind() != Kind::Implies) continue;
      for (const Formula& h : gamma) {
        if (h.kind() == Kind::Holds && h.stmt() == g.stmt().lhs()) cm.fragment.insert(Expr::app(g.just(), h.just()));
      }
    }

    auto violated = [&](const std::string& what) {
      throw InternalInvariantViolation("countermodel for " + print(f) + ": " + what);
    };
    try {
      cm.report = checkModel(m, cm.fragment);
      if (!cm.report.ok()) violated("model is not sharp, injective and closed");
      if (evalUnder(cm.interp, f)) violated("formula evaluates true");
      for (const Formula& g : gamma) {
        if (!evalUnder(cm.interp, g)) violated("assumption " + print(g) + " evaluates false");
      }
      for (const Formula& g : delta) {
        if (evalUnder(cm.interp, g)) violated("refuted formula " + print(g) + " evaluates true");
      }
      if (!checkInterpretation(cm.interp, logicTerms).ok()) violated("interpretation conditions fail");
    } catch (const SharpnessViolation& e) {
      violated(e.what());
    } catch (const NotInjective& e) {
      violated(e.what());
    }
    return cm;
  }

} // namespace jref
