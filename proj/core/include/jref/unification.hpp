// jref :: conditional unification with reference variables
//
// A problem is a finite list of clauses  A = B  =>  C = D. A unifier is an
// idempotent, comprehensive substitution θ such that Aθ = Bθ implies Cθ = Dθ
// for every clause. Unifiable problems have a most general unifier in the
// weak sense: every unifier σ factors as θλ, equivalently σ(θ(z)) = σ(z).

#ifndef JREF_UNIFICATION_HPP_
#define JREF_UNIFICATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jref/expr.hpp"
#include "jref/substitution.hpp"

namespace jref {

  enum class UnifMode {
    Referential, // comprehension enforced, v(t) allowed
    Plain,       // no v(t) anywhere, no comprehension
  };

  struct Clause {
    Expr condLhs;
    Expr condRhs;
    Expr eqLhs;
    Expr eqRhs;

    // false = false => lhs = rhs
    static Clause unconditional(Expr lhs, Expr rhs);
    friend bool operator==(const Clause&, const Clause&) = default;
  };

  class ConditionalProblem {
  public:
    ConditionalProblem() = default;
    // Throws SortClash on ill-sorted clauses, ModeViolation when a plain
    // problem mentions v(t).
    explicit ConditionalProblem(std::vector<Clause> clauses, UnifMode mode = UnifMode::Referential);

    const std::vector<Clause>& clauses() const noexcept { return clauses_; }
    UnifMode mode() const noexcept { return mode_; }
    bool empty() const noexcept { return clauses_.empty(); }

    VarSet variables() const;
    TermSet terms() const;

    void add(Clause c);

  private:
    std::vector<Clause> clauses_;
    UnifMode mode_ = UnifMode::Referential;
  };

  using Assertion = std::pair<Term, Formula>;

  // t_i = t_j => F_i = F_j for all pairs; reflexive and symmetric duplicates
  // are dropped.
  ConditionalProblem problemFromAssertions(std::span<const Assertion> asserts);

  struct UnifResult {
    std::optional<Substitution> mgu;

    bool unifiable() const noexcept { return mgu.has_value(); }
    static UnifResult notUnifiable() { return {}; }
  };

  // Is s a unifier of prob: triggered equations hold, and in referential mode
  // s is idempotent and comprehensive on the problem's terms and their images.
  bool unifiesCheck(const Substitution& s, const ConditionalProblem& prob);

  UnifResult mgu(const ConditionalProblem& prob);

  // As mgu; when unifiable the result's binding domain contains base's.
  // base must be an mgu of a subproblem of prob (not checked).
  UnifResult mguExtending(const ConditionalProblem& prob, const Substitution& base);

  // aθ = bθ for every unifier θ of prob (vacuously true if none exists).
  bool equalMod(const Expr& a, const Expr& b, const ConditionalProblem& prob);

  // Total order used to orient variable-variable bindings: the larger
  // variable is bound to the smaller. v(t) ranks above p and x; within a
  // kind, printed forms compare lexicographically.
  bool varPrecedes(const Var& a, const Var& b);

  // --- brute-force oracle --------------------------------------------------

  struct OracleLimits {
    std::size_t maxCandidates = 5'000'000;
  };

  // Every substitution with support Var(prob) mapping each variable to itself
  // or to an expression of depth ≤ depth over `alphabet`, that is a valid
  // (idempotent, comprehensive) unifier of prob. visit returns false to stop.
  // Throws ResourceBound when more than limits.maxCandidates candidates
  // would be examined.
  void bruteForceUnifiers(const ConditionalProblem& prob, const std::vector<std::string>& alphabet,
                          std::size_t depth, const std::function<bool(const Substitution&)>& visit,
                          OracleLimits limits = {});

  std::vector<Substitution> bruteForceUnifiers(const ConditionalProblem& prob,
                                               const std::vector<std::string>& alphabet,
                                               std::size_t depth, OracleLimits limits = {});

  // Every term / formula of depth ≤ depth over the alphabet (formulas may
  // use v(t)). Exposed for the oracle's tests.
  std::vector<Term> enumerateTerms(const std::vector<std::string>& alphabet, std::size_t depth);
  std::vector<Formula> enumerateFormulas(const std::vector<std::string>& alphabet, std::size_t depth);

  // --- text format ---------------------------------------------------------

  // One clause per line: "A = B => C = D", or "C = D" for an unconditional
  // equation. Blank lines and lines starting with '#' are skipped. Bare
  // identifiers take their sort from the other side of '='; when both sides
  // are bare, a condition pair reads as terms and an equation pair as
  // formulas.
  ConditionalProblem parseProblem(std::string_view text, UnifMode mode = UnifMode::Referential);

} // namespace jref

#endif // JREF_UNIFICATION_HPP_
