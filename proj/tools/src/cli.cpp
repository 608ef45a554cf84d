#include "jref/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "jref/calculus.hpp"
#include "jref/errors.hpp"
#include "jref/json_io.hpp"
#include "jref/model.hpp"
#include "jref/parser.hpp"
#include "jref/printer.hpp"
#include "jref/saturation.hpp"
#include "jref/unification.hpp"

namespace jref::cli {

  namespace {

    class InputError : public Error {
    public:
      using Error::Error;
    };

    std::string readInput(const std::string& path, std::istream& in) {
      std::ostringstream buf;
      if (path == "-") {
        buf << in.rdbuf();
        return buf.str();
      }
      std::ifstream file(path, std::ios::binary);
      if (!file) throw InputError("cannot read '" + path + "'");
      buf << file.rdbuf();
      return buf.str();
    }

    json readJson(const std::string& path, std::istream& in) {
      try {
        return json::parse(readInput(path, in));
      } catch (const json::parse_error& e) {
        throw InputError(path + ": " + e.what());
      }
    }

    json header(const char* command) { return {{"schema", kSchemaVersion}, {"command", command}}; }

    std::string setText(const FormulaSet& s) {
      std::string out = "{";
      for (auto it = s.begin(); it != s.end(); ++it) {
        if (it != s.begin()) out += ", ";
        out += print(*it);
      }
      return out + "}";
    }

    void printSubstitution(std::ostream& out, const Substitution& s, const char* indent) {
      if (s.bindings().empty()) out << indent << "(identity)\n";
      for (const auto& [z, value] : s.bindings()) out << indent << print(z) << " := " << print(value) << '\n';
    }

    void printModel(std::ostream& out, const BasicModel& m) {
      out << "  true atoms: " << setText(m.trueAtoms) << '\n';
      for (const auto& [name, fs] : m.justBase) out << "  " << name << "* = " << setText(fs) << '\n';
      for (const auto& [t, fs] : m.explicitCompound) out << "  (" << print(t) << ")* = " << setText(fs) << '\n';
    }

    // Error reporting shared by all commands.
    template <class Body>
    int guarded(Streams io, Body&& body) {
      try {
        return body();
      } catch (const ParseError& e) {
        io.err << "jref: " << e.what() << '\n';
        return kParseError;
      } catch (const InputError& e) {
        io.err << "jref: " << e.what() << '\n';
        return kParseError;
      } catch (const FormatError& e) {
        io.err << "jref: " << e.what() << '\n';
        return kParseError;
      } catch (const SortClash& e) {
        io.err << "jref: " << e.what() << '\n';
        return kParseError;
      } catch (const LimitExceeded& e) {
        io.err << "jref: " << e.what() << '\n';
        return kLimitExceeded;
      } catch (const ModeViolation& e) {
        io.err << "jref: " << e.what() << '\n';
        return kModeViolation;
      } catch (const SharpnessViolation& e) {
        io.err << "jref: model invariant violated: " << e.what() << '\n';
        return kModelInvariant;
      } catch (const NotInjective& e) {
        io.err << "jref: model invariant violated: " << e.what() << '\n';
        return kModelInvariant;
      } catch (const InternalInvariantViolation& e) {
        io.err << "jref: internal invariant violated: " << e.what() << '\n';
        return kModelInvariant;
      }
    }

  } // namespace

  int runDecide(const Invocation& inv, Streams io) {
    return guarded(io, [&]() -> int {
      const Formula f = parseFormula(readInput(inv.inputPath, io.in));
      TraceSink trace;
      std::ostream& traceOut = inv.format == Format::Json ? io.err : io.out;
      if (inv.trace) trace = [&](const std::string& line) { traceOut << line << '\n'; };
      const Decision d = decide(f, SaturationLimits{inv.maxSteps, inv.maxNodes}, trace);

      if (inv.format == Format::Json) {
        json j = header("decide");
        j["formula"] = print(f);
        j["verdict"] = d.provable ? "provable" : "unprovable";
        j["stats"] = {{"steps", d.stats.steps}, {"nodes", d.stats.nodes}};
        if (d.provable) {
          j["certificate"] = certificateToJson(*d.certificate);
        } else {
          json cm = countermodelToJson(buildCountermodel(*d.leaf, f), f);
          cm["schema"] = kSchemaVersion;
          j["countermodel"] = std::move(cm);
        }
        io.out << j.dump(2) << '\n';
      } else if (d.provable) {
        io.out << "provable\n";
        io.out << "steps: " << d.stats.steps << ", nodes: " << d.stats.nodes << '\n';
      } else {
        const Countermodel cm = buildCountermodel(*d.leaf, f);
        io.out << "unprovable\n";
        io.out << "countermodel (sharp, injective):\n";
        printModel(io.out, cm.interp.model);
        io.out << "interpretation:\n";
        printSubstitution(io.out, cm.interp.subst, "  ");
        io.out << "steps: " << d.stats.steps << ", nodes: " << d.stats.nodes << '\n';
      }
      return d.provable ? kOk : kNegative;
    });
  }

  int runUnify(const Invocation& inv, Streams io) {
    return guarded(io, [&]() -> int {
      const UnifMode mode = inv.plain ? UnifMode::Plain : UnifMode::Referential;
      const ConditionalProblem prob = parseProblem(readInput(inv.inputPath, io.in), mode);
      const UnifResult r = mgu(prob);
      if (inv.format == Format::Json) {
        json j = header("unify");
        j["mode"] = inv.plain ? "plain" : "referential";
        j["unifiable"] = r.unifiable();
        if (r.unifiable()) j["mgu"] = substitutionToJson(*r.mgu);
        io.out << j.dump(2) << '\n';
      } else if (r.unifiable()) {
        io.out << "unifiable\n";
        printSubstitution(io.out, *r.mgu, "  ");
      } else {
        io.out << "not unifiable\n";
      }
      return r.unifiable() ? kOk : kNegative;
    });
  }

  int runCheckProof(const Invocation& inv, Streams io) {
    return guarded(io, [&]() -> int {
      const std::vector<ProofLine> lines = proofFromJson(readJson(inv.inputPath, io.in));
      if (lines.empty()) {
        io.err << "jref: " << EmptyProof().what() << '\n';
        return kNegative;
      }
      const Verdict v = checkProof(lines);
      if (inv.format == Format::Json) {
        json j = header("check-proof");
        j["ok"] = v.ok;
        j["lines"] = lines.size();
        if (v.ok) j["theorem"] = print(v.theorem());
        else j["firstBadLine"] = v.firstBadLine;
        io.out << j.dump(2) << '\n';
      } else if (v.ok) {
        io.out << print(v.theorem()) << '\n';
      } else {
        io.out << "bad line " << v.firstBadLine << '\n';
      }
      return v.ok ? kOk : kNegative;
    });
  }

  int runEval(const Invocation& inv, Streams io) {
    return guarded(io, [&]() -> int {
      json doc = readJson(inv.inputPath, io.in);
      if (auto it = doc.find("countermodel"); it != doc.end()) doc = json(*it);
      Interpretation interp;
      interp.model = modelFromJson(doc);
      if (auto it = doc.find("interpretation"); it != doc.end()) interp.subst = substitutionFromJson(*it);

      Formula f = Expr::bottom();
      if (inv.formulaPath) {
        f = parseFormula(readInput(*inv.formulaPath, io.in));
      } else if (auto it = doc.find("formula"); it != doc.end()) {
        f = formulaFromJson(*it);
      } else {
        throw FormatError("no formula: pass a formula file or add a 'formula' field");
      }

      TermSet fragment;
      for (const Term& t : termsOf(f)) fragment.insert(applyInterp(interp, t));
      for (const auto& [name, fs] : interp.model.justBase) fragment.insert(Expr::justAtom(name));
      for (const auto& [t, fs] : interp.model.explicitCompound) fragment.insert(t);
      const ModelReport report = checkModel(interp.model, fragment);
      const bool claimsInjective = doc.value("injective", false);
      if (!report.basicClosure) throw SharpnessViolation("model is not closed under application");
      if (interp.model.sharp && !report.sharp) throw SharpnessViolation("model is flagged sharp but is not");
      if (claimsInjective && !report.injective) throw NotInjective("model is flagged injective but is not");
      if (report.injective && !checkInterpretation(interp, termsOf(f)).ok())
        throw InternalInvariantViolation("interpretation violates comprehension or the goal condition");

      const bool value = evalUnder(interp, f);
      if (inv.format == Format::Json) {
        json j = header("eval");
        j["formula"] = print(f);
        j["value"] = value;
        j["checks"] = {{"basicClosure", report.basicClosure}, {"sharp", report.sharp}, {"injective", report.injective}};
        io.out << j.dump(2) << '\n';
      } else {
        io.out << (value ? "true" : "false") << '\n';
      }
      return value ? kOk : kNegative;
    });
  }

  int runCertify(const Invocation& inv, Streams io) {
    return guarded(io, [&]() -> int {
      json doc = readJson(inv.inputPath, io.in);
      if (auto it = doc.find("certificate"); it != doc.end()) doc = *it;
      std::optional<Formula> f;
      if (inv.formulaPath) f = parseFormula(readInput(*inv.formulaPath, io.in));

      bool valid = false;
      std::string reason;
      try {
        const Certificate cert = certificateFromJson(doc);
        valid = replayCertificate(f ? *f : cert.formula, cert);
        if (!f) f = cert.formula;
        if (!valid) reason = "replay does not match";
      } catch (const MalformedCertificate& e) {
        reason = e.what();
      }
      if (inv.format == Format::Json) {
        json j = header("certify");
        if (f) j["formula"] = print(*f);
        j["valid"] = valid;
        if (!valid) j["reason"] = reason;
        io.out << j.dump(2) << '\n';
      } else {
        io.out << (valid ? "valid" : "invalid: " + reason) << '\n';
      }
      return valid ? kOk : kNegative;
    });
  }

  int run(const Invocation& inv, Streams io) {
    if (inv.plain && inv.command != Command::Unify) {
      io.err << "jref: --plain applies to unify only\n";
      return kParseError;
    }
    switch (inv.command) {
      case Command::Decide:
        return runDecide(inv, io);
      case Command::Unify:
        return runUnify(inv, io);
      case Command::CheckProof:
        return runCheckProof(inv, io);
      case Command::Eval:
        return runEval(inv, io);
      case Command::Certify:
        return runCertify(inv, io);
    }
    return kParseError;
  }

  int main(int argc, const char* const* argv, Streams io) {
    Invocation inv;
    if (const char* env = std::getenv("JREF_MAX_STEPS")) {
      try {
        inv.maxSteps = std::stoull(env);
      } catch (const std::exception&) {
        io.err << "jref: JREF_MAX_STEPS must be a natural number\n";
        return kParseError;
      }
    }

    CLI::App app{"Decision procedure and tools for the referential justification logic"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--trace", inv.trace, "Print each block transition");
    app.add_option("--max-steps", inv.maxSteps, "Cap on saturation steps");
    app.add_option("--max-nodes", inv.maxNodes, "Cap on saturation tree nodes");
    app.add_flag("--plain", inv.plain, "Unify without comprehension and without v(...)");

    struct Sub {
      const char* name;
      const char* help;
      Command command;
      bool secondFile;
    };
    const Sub subs[] = {
        {"decide", "Decide provability of the formula in FILE", Command::Decide, false},
        {"unify", "Compute the m.g.u. of the problem in FILE", Command::Unify, false},
        {"check-proof", "Check the Hilbert proof in FILE", Command::CheckProof, false},
        {"eval", "Evaluate a formula in the model of FILE", Command::Eval, true},
        {"certify", "Replay the certificate in FILE", Command::Certify, true},
    };
    for (const Sub& s : subs) {
      CLI::App* sub = app.add_subcommand(s.name, s.help);
      sub->fallthrough();
      sub->add_option("file", inv.inputPath, "Input file, - for standard input");
      if (s.secondFile) sub->add_option("formula", inv.formulaPath, "File holding the formula");
      sub->callback([&inv, command = s.command] { inv.command = command; });
    }

    try {
      app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
      io.out << app.help();
      return kOk;
    } catch (const CLI::ParseError& e) {
      io.err << "jref: " << e.what() << '\n';
      return kParseError;
    }
    inv.format = format == "json" ? Format::Json : Format::Text;
    return run(inv, io);
  }

} // namespace jref::cli
