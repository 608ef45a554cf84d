// jref :: the saturation decision procedure
//
// State (θ, Γ, Δ), started as (id, ∅, {⊥, F}). Each round runs
//
//   block 1  propositional rules; a Γ-implication X -> Y splits the
//            computation into "Y joins Γ" (left) and "X joins Δ" (right)
//   block 2  closure of Γ under the justification rules
//   block 3  m.g.u. θ' ⪰ θ of the assertions in Γ; Γ, Δ take their θ'
//            instances; success when Dom(θ') = Dom(θ)
//
// and a round fails as soon as Γ ∩ Δ is non-empty. F is provable iff every
// branch fails. The full tree is explored depth first, left branch first.

#ifndef JREF_SATURATION_HPP_
#define JREF_SATURATION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jref/expr.hpp"
#include "jref/substitution.hpp"

namespace jref {

  struct SaturationState {
    Substitution theta;
    FormulaSet gamma;
    FormulaSet delta;
    FormulaSet discharged;     // Γ-implications already split by block 1
    FormulaSet deltaProcessed; // Δ-implications already unfolded by block 1
    std::size_t stepCount = 0;

    friend bool operator==(const SaturationState&, const SaturationState&) = default;
  };

  SaturationState initState(const Formula& f);

  // Some element of Γ ∩ Δ (the least one), if any.
  std::optional<Formula> overlap(const SaturationState& st);

  struct Failed {
    Formula witness;
  };

  // --- single blocks ---------------------------------------------------------

  // Unfolds the Δ-implications to a fixpoint. Returns whether anything changed.
  bool closeDelta(SaturationState& st);

  // The least undischarged implication in Γ.
  std::optional<Formula> pendingImplication(const SaturationState& st);

  // Splits on a pending implication X -> Y: left adds Y to Γ, right adds X
  // to Δ; both discharge it.
  SaturationState splitLeft(const SaturationState& st, const Formula& target);
  SaturationState splitRight(const SaturationState& st, const Formula& target);

  // Block 1 with every branch expanded: the surviving leaves of the local
  // branching, or Failed when every one of them closes. A lone closing
  // branch reports its witness.
  std::variant<Failed, std::vector<SaturationState>> block1(const SaturationState& st);

  std::variant<Failed, SaturationState> block2(const SaturationState& st);

  struct Block3Outcome {
    enum class Kind { Continue, Success, Failed, NotUnifiable } kind;
    SaturationState state;
    std::optional<Formula> witness; // for Failed
  };

  Block3Outcome block3(const SaturationState& st);

  // --- certificates --------------------------------------------------------

  struct CertStep {
    int block = 1;              // 1, 2 or 3
    std::vector<Var> domain;    // block 3: binding domain of the new θ
    friend bool operator==(const CertStep&, const CertStep&) = default;
  };

  struct CertNode {
    enum class Kind { Branch, Failed, NotUnifiable, Success };

    std::vector<CertStep> steps;
    Kind kind = Kind::Failed;
    std::optional<Formula> target;  // Branch: the split implication
    std::optional<Formula> witness; // Failed: an element of Γ ∩ Δ
    std::vector<CertNode> children; // Branch: left, right

    friend bool operator==(const CertNode&, const CertNode&) = default;
  };

  struct Certificate {
    Formula formula;
    CertNode root;
    friend bool operator==(const Certificate&, const Certificate&) = default;
  };

  // Recomputes every recorded step from initState(f). True iff the tree
  // matches and every leaf fails. Throws MalformedCertificate for trees that
  // are not well formed (e.g. a branch without exactly two children).
  bool replayCertificate(const Formula& f, const Certificate& cert);

  // --- decision ------------------------------------------------------------

  struct SaturationLimits {
    std::size_t maxSteps = 1'000'000;
    std::size_t maxNodes = 10'000;
  };

  struct SaturationStats {
    std::size_t steps = 0;
    std::size_t nodes = 0;
  };

  struct Decision {
    bool provable = false;
    std::optional<Certificate> certificate; // when provable
    std::optional<SaturationState> leaf;    // when not
    SaturationStats stats;
  };

  // Receives one line per block transition, indented by branch depth.
  using TraceSink = std::function<void(const std::string&)>;

  // Throws LimitExceeded when a cap is hit.
  Decision decide(const Formula& f, const SaturationLimits& limits = {}, const TraceSink& trace = {});

} // namespace jref

#endif // JREF_SATURATION_HPP_
