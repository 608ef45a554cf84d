#include "jref/random.hpp"

#include <algorithm>

#include "jref/errors.hpp"

namespace jref {

  ExprSampler::ExprSampler(std::uint64_t seed, SamplerConfig config)
      : rng_(seed), config_(std::move(config)) {
    if (config_.justs.empty() && (config_.allowHolds || config_.allowGoal))
      throw Error("sampler needs justification atoms when ':' or v(...) are enabled");
    if (config_.props.empty() && !config_.allowBottom && !config_.allowGoal)
      throw Error("sampler has no atomic formulas");
  }

  std::size_t ExprSampler::below(std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_);
  }

  bool ExprSampler::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

  Term ExprSampler::term(std::size_t maxDepth) {
    if (maxDepth <= 1 || coin(0.55)) return Expr::justAtom(config_.justs[below(config_.justs.size())]);
    return Expr::app(term(maxDepth - 1), term(maxDepth - 1));
  }

  Formula ExprSampler::atomicFormula(std::size_t maxDepth) {
    for (;;) {
      switch (below(3)) {
        case 0:
          if (config_.allowBottom) return Expr::bottom();
          break;
        case 1:
          if (!config_.props.empty()) return Expr::prop(config_.props[below(config_.props.size())]);
          break;
        default:
          if (config_.allowGoal) return Expr::goal(term(std::min<std::size_t>(maxDepth, 2)));
          break;
      }
    }
  }

  Formula ExprSampler::formula(std::size_t maxDepth) {
    if (maxDepth <= 1 || coin(0.3)) return atomicFormula(maxDepth);
    if (config_.allowHolds && coin(0.35)) return Expr::holds(term(maxDepth - 1), formula(maxDepth - 1));
    return Expr::implies(formula(maxDepth - 1), formula(maxDepth - 1));
  }

} // namespace jref
