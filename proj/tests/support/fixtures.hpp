// Hand-written inputs: the named corpus, sharp injective models with
// interpretations, and structured Hilbert proofs.

#ifndef JREF_TESTS_FIXTURES_HPP_
#define JREF_TESTS_FIXTURES_HPP_

#include <string>
#include <vector>

#include "jref/calculus.hpp"
#include "jref/model.hpp"

namespace jref::support {

  struct NamedFormula {
    std::string text;
    bool provable;
  };

  std::vector<NamedFormula> namedCorpus();

  struct ModelFixture {
    std::string name;
    Interpretation interp;
  };

  // Ground atoms a, b, c and props P, Q, R. Every fixture binds p, q, r, s, u
  // and x, y, z, w, c.
  std::vector<ModelFixture> modelFixtures();

  struct NamedProof {
    std::string name;
    std::vector<ProofLine> lines;
    Formula theorem;
  };

  std::vector<NamedProof> proofCatalog();

} // namespace jref::support

#endif // JREF_TESTS_FIXTURES_HPP_
