// Seeded random inputs for property tests and the acceptance suite.

#ifndef JREF_TESTS_GENERATORS_HPP_
#define JREF_TESTS_GENERATORS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "jref/expr.hpp"
#include "jref/model.hpp"
#include "jref/unification.hpp"

namespace jref::support {

  struct ProblemShape {
    std::vector<std::string> alphabet{"a", "b"};
    std::size_t maxClauses = 3;
    std::size_t maxVars = 3;
    std::size_t depth = 2;
    double conditional = 0.5;
  };

  // A problem over the alphabet with at most maxVars variables.
  ConditionalProblem randomProblem(std::uint64_t seed, const ProblemShape& shape = {});

  // Formula over p, q, x, y of depth at most depth.
  Formula randomFormula(std::uint64_t seed, std::size_t depth);

  // H1 -> ... -> Hk -> C with mostly assertion hypotheses.
  Formula assertionHeavyFormula(std::uint64_t seed);

  // Sharp injective model over ground atoms a, b and props P, Q, and an
  // interpretation of p, q, r, s, u and x, y, z, w, c into it. Goal variables
  // are left to the substitution's extension rule.
  Interpretation randomInterpretation(std::uint64_t seed);

} // namespace jref::support

#endif // JREF_TESTS_GENERATORS_HPP_
