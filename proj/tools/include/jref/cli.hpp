// jref :: command-line front end
//
//   jref decide      FILE|-            exit 0 provable, 1 unprovable
//   jref unify       FILE|- [--plain]  exit 0 unifiable, 1 not
//   jref check-proof FILE|-            exit 0 accepted, 1 bad line
//   jref eval        MODEL [FORMULA]   exit 0 true, 1 false
//   jref certify     CERT [FORMULA]    exit 0 replay accepted, 1 otherwise
//
// Exit 2 parse error, 3 limit exceeded, 4 v(...) under --plain, 5 model
// invariant violated.

#ifndef JREF_CLI_HPP_
#define JREF_CLI_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

namespace jref::cli {

  enum ExitCode : int {
    kOk = 0,
    kNegative = 1,
    kParseError = 2,
    kLimitExceeded = 3,
    kModeViolation = 4,
    kModelInvariant = 5,
  };

  enum class Command { Decide, Unify, CheckProof, Eval, Certify };
  enum class Format { Text, Json };

  struct Invocation {
    Command command = Command::Decide;
    std::string inputPath = "-";
    std::optional<std::string> formulaPath; // eval, certify
    Format format = Format::Text;
    bool trace = false;
    std::size_t maxSteps = 1'000'000;
    std::size_t maxNodes = 10'000;
    bool plain = false;
  };

  struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
  };

  int runDecide(const Invocation& inv, Streams io);
  int runUnify(const Invocation& inv, Streams io);
  int runCheckProof(const Invocation& inv, Streams io);
  int runEval(const Invocation& inv, Streams io);
  int runCertify(const Invocation& inv, Streams io);

  int run(const Invocation& inv, Streams io);

  // Parses argv (JREF_MAX_STEPS supplies the --max-steps default) and runs.
  int main(int argc, const char* const* argv, Streams io);

} // namespace jref::cli

#endif // JREF_CLI_HPP_
