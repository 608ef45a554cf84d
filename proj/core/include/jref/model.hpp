// jref :: basic justification models
//
// A model fixes the true atoms and a set t* of justified formulas for every
// ground term t. Compound terms are computed by application on sets,
//
//   S ▷ T = { G | F -> G ∈ S and F ∈ T },   (s*t)* ⊇ s* ▷ t*,
//
// with equality in sharp models. Ground expressions reuse Expr; a v(t)
// node in a ground formula is an atomic constant.

#ifndef JREF_MODEL_HPP_
#define JREF_MODEL_HPP_

#include <map>
#include <optional>
#include <string>

#include "jref/expr.hpp"
#include "jref/saturation.hpp"
#include "jref/substitution.hpp"

namespace jref {

  struct BasicModel {
    FormulaSet trueAtoms;                      // PropAtom and v(t) constants
    std::map<std::string, FormulaSet> justBase; // atom -> t*
    std::map<Term, FormulaSet> explicitCompound;
    bool sharp = true;

    friend bool operator==(const BasicModel&, const BasicModel&) = default;
  };

  FormulaSet rhd(const FormulaSet& s, const FormulaSet& t);

  // t*. In a sharp model (s*u)* = s* ▷ u*, and an explicit entry that ▷
  // does not reproduce raises SharpnessViolation; otherwise the explicit
  // entry is added to s* ▷ u*.
  FormulaSet denote(const BasicModel& m, const Term& t);

  bool evalFormula(const BasicModel& m, const Formula& f);

  // The only element of t*. Throws NotInjective when there are several.
  std::optional<Formula> goalOf(const BasicModel& m, const Term& t);

  struct ModelReport {
    bool basicClosure = true;
    bool sharp = true;
    bool injective = true;
    bool ok() const noexcept { return basicClosure && sharp && injective; }
  };

  // Checks the properties on the fragment closed under subterms, using
  // s* ▷ u* together with explicit entries regardless of m.sharp.
  ModelReport checkModel(const BasicModel& m, const TermSet& fragment);

  // Logic variables to ground expressions, backed by a model.
  struct Interpretation {
    Substitution subst;
    BasicModel model;
  };

  // Applies the substitution, then replaces each v(u) by the formula u
  // justifies when u* is non-empty.
  Expr applyInterp(const Interpretation& i, const Expr& e);

  bool evalUnder(const Interpretation& i, const Formula& f);

  struct InterpretationReport {
    bool comprehensive = true; // t1σ = t2σ implies v(t1)σ = v(t2)σ
    bool goalCondition = true; // v(t)σ ∈ (tσ)* whenever (tσ)* is non-empty
    bool ok() const noexcept { return comprehensive && goalCondition; }
  };

  InterpretationReport checkInterpretation(const Interpretation& i, const TermSet& terms);

  struct Countermodel {
    Interpretation interp;
    TermSet fragment;
    ModelReport report;
  };

  // Model and interpretation read off a success leaf of decide(f). Throws
  // InternalInvariantViolation if f is not falsified or the model or the
  // interpretation fail their checks.
  Countermodel buildCountermodel(const SaturationState& leaf, const Formula& f);

} // namespace jref

#endif // JREF_MODEL_HPP_
