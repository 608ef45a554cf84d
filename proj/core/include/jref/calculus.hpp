// jref :: the Hilbert calculus
//
//   A0  A -> B -> A
//       (A -> B -> C) -> (A -> B) -> A -> C
//       ~~A -> A
//   A1  s:(F -> G) -> t:F -> (s*t):G
//   A2  t1:F1 & ... & tn:Fn -> (F <-> G)     if F = G mod the conjunction
//   A3  t:F -> t:v(t)
//   A4  (s*t):v(s*t) -> s:(v(t) -> v(s*t)) & t:v(t)
//   MP  from F -> G and F infer G

#ifndef JREF_CALCULUS_HPP_
#define JREF_CALCULUS_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "jref/expr.hpp"
#include "jref/unification.hpp"

namespace jref {

  struct AxiomA0 {
    int scheme = 1; // 1..3
    Formula a = Expr::bottom();
    Formula b = Expr::bottom();
    Formula c = Expr::bottom();
    friend bool operator==(const AxiomA0&, const AxiomA0&) = default;
  };

  struct AxiomA1 {
    Term s, t;
    Formula f, g;
    friend bool operator==(const AxiomA1&, const AxiomA1&) = default;
  };

  struct AxiomA2 {
    std::vector<Assertion> asserts;
    Formula f = Expr::bottom();
    Formula g = Expr::bottom();
    friend bool operator==(const AxiomA2&, const AxiomA2&) = default;
  };

  struct AxiomA3 {
    Term t;
    Formula f;
    friend bool operator==(const AxiomA3&, const AxiomA3&) = default;
  };

  struct AxiomA4 {
    Term s, t;
    friend bool operator==(const AxiomA4&, const AxiomA4&) = default;
  };

  // Zero-based indices of earlier lines.
  struct ModusPonens {
    std::size_t major; // F -> G
    std::size_t minor; // F
    friend bool operator==(const ModusPonens&, const ModusPonens&) = default;
  };

  using ProofLine = std::variant<AxiomA0, AxiomA1, AxiomA2, AxiomA3, AxiomA4, ModusPonens>;

  // The formula an axiom line states. Throws std::invalid_argument for MP
  // lines and for an A0 scheme outside 1..3.
  Formula renderAxiom(const ProofLine& line);

  // The formula a line states given the formulas of the lines before it.
  // MP yields nothing when earlier[major] is not earlier[minor] -> G.
  // Throws IndexOutOfRange for references past the end of `earlier`.
  std::optional<Formula> renderLine(const ProofLine& line, std::span<const Formula> earlier);

  // A2 lines additionally need F = G mod their assertions.
  bool checkLine(const ProofLine& line, std::span<const Formula> earlier);

  struct Verdict {
    bool ok = false;
    std::size_t firstBadLine = 0;    // meaningful when !ok
    std::vector<Formula> statements; // one per accepted line
    // Statement of the last line when ok.
    const Formula& theorem() const { return statements.back(); }
  };

  // Throws EmptyProof.
  Verdict checkProof(std::span<const ProofLine> lines);

  enum class AxiomScheme { A0K, A0S, A0DNE, A1, A2, A3, A4 };

  struct InstanceBounds {
    std::size_t termDepth = 3;
    std::size_t formulaDepth = 3;
    std::size_t atoms = 3; // distinct names per sort
    std::size_t maxAsserts = 3;
  };

  // A random line of the given scheme; deterministic in seed. A2 instances
  // are built so that their side condition holds.
  ProofLine randomAxiomLine(AxiomScheme scheme, std::uint64_t seed, const InstanceBounds& bounds = {});
  Formula randomAxiomInstance(AxiomScheme scheme, std::uint64_t seed, const InstanceBounds& bounds = {});

} // namespace jref

#endif // JREF_CALCULUS_HPP_
