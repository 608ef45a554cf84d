// jref :: seeded random expressions (fuzzing and property tests)

#ifndef JREF_RANDOM_HPP_
#define JREF_RANDOM_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "jref/expr.hpp"

namespace jref {

  struct SamplerConfig {
    std::vector<std::string> props{"p", "q"};
    std::vector<std::string> justs{"x", "y"};
    bool allowBottom = true;
    bool allowHolds = true;
    bool allowGoal = true;
  };

  // Deterministic in the seed.
  class ExprSampler {
  public:
    explicit ExprSampler(std::uint64_t seed, SamplerConfig config = {});

    Term term(std::size_t maxDepth);
    Formula formula(std::size_t maxDepth);
    Formula atomicFormula(std::size_t maxDepth = 2);

    std::size_t below(std::size_t n);
    bool coin(double p = 0.5);
    std::mt19937_64& engine() noexcept { return rng_; }
    const SamplerConfig& config() const noexcept { return config_; }

  private:
    std::mt19937_64 rng_;
    SamplerConfig config_;
  };

} // namespace jref

#endif // JREF_RANDOM_HPP_
