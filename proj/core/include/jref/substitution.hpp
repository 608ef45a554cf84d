// jref :: finite-part substitutions
//
// A substitution is stored as a support set V and finitely many bindings
// with Dom(bindings) ⊆ V. It denotes the infinite, sort-preserving
// homomorphism whose action on variables is
//
//   z            -> bindings(z) (or z when unbound)   if z ∈ V
//   p, x         -> itself                            if not in V
//   v(t)         -> lookup(v(lookup(t)))              if v(t) not in V
//
// where lookup applies the bindings once. The last case is what makes the
// denoted substitution comprehensive outside V.

#ifndef JREF_SUBSTITUTION_HPP_
#define JREF_SUBSTITUTION_HPP_

#include <map>
#include <optional>

#include "jref/expr.hpp"

namespace jref {

  class Substitution {
  public:
    // Identity.
    Substitution() = default;

    // Checks sorts and Dom(bindings) ⊆ support; drops z -> z bindings.
    // Throws SortClash or InvalidSubstitution.
    Substitution(VarSet support, std::map<Var, Expr> bindings);

    // Additionally requires idempotence, comprehension and conservativity.
    // Throws InvalidSubstitution naming the violated property.
    static Substitution validated(VarSet support, std::map<Var, Expr> bindings);

    const VarSet& support() const noexcept { return support_; }
    const std::map<Var, Expr>& bindings() const noexcept { return bindings_; }
    VarSet domain() const;
    bool isIdentity() const noexcept { return bindings_.empty(); }

    std::optional<Expr> lookup(const Var& z) const;
    Expr apply(const Expr& e) const;
    Expr operator()(const Expr& e) const { return apply(e); }

    friend bool operator==(const Substitution&, const Substitution&) = default;

  private:
    Expr bindOnce(const Expr& e) const;

    VarSet support_;
    std::map<Var, Expr> bindings_;
  };

  Expr applySubst(const Substitution& s, const Expr& e);

  // Result acts as s2 after s1 on every expression whose variables lie in
  // support(s1) ∪ support(s2). Not necessarily idempotent.
  Substitution composeSubst(const Substitution& s1, const Substitution& s2);

  // θ(θ(z)) = θ(z) for every z in the support (and for every binding value).
  bool isIdempotent(const Substitution& s);

  // For all t1, t2 in ts with t1θ = t2θ: v(t1)θ = v(t2)θ.
  bool isComprehensiveOn(const Substitution& s, const TermSet& ts);

  // Full comprehension of the denoted infinite substitution; reduces to
  // v(t)θ = v(tθ)θ for every v(t) in the support.
  bool isComprehensive(const Substitution& s);

  // Var(bindings) ⊆ V ∪ { v(tθ) | v(t) ∈ V }.
  bool isConservative(const Substitution& s);

  // Dom(bindings of a) ⊆ Dom(bindings of b).
  bool extendsTo(const Substitution& a, const Substitution& b);

  // Expressions fixed by s.
  bool isFixedPoint(const Substitution& s, const Expr& e);

  std::ostream& operator<<(std::ostream& os, const Substitution& s);

} // namespace jref

#endif // JREF_SUBSTITUTION_HPP_
