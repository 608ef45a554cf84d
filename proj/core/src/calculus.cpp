#include "jref/calculus.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "jref/errors.hpp"
#include "jref/parser.hpp"
#include "jref/random.hpp"

namespace jref {

  namespace {

    Formula imp(Formula a, Formula b) { return Expr::implies(std::move(a), std::move(b)); }

    template <class... F>
    struct Overload : F... {
      using F::operator()...;
    };

  } // namespace

  Formula renderAxiom(const ProofLine& line) {
    return std::visit(
        Overload{
            [](const AxiomA0& l) -> Formula {
              switch (l.scheme) {
                case 1:
                  return imp(l.a, imp(l.b, l.a));
                case 2:
                  return imp(imp(l.a, imp(l.b, l.c)), imp(imp(l.a, l.b), imp(l.a, l.c)));
                case 3:
                  return imp(mkNot(mkNot(l.a)), l.a);
                default:
                  throw std::invalid_argument("A0 scheme must be 1, 2 or 3");
              }
            },
            [](const AxiomA1& l) -> Formula {
              return imp(Expr::holds(l.s, imp(l.f, l.g)),
                         imp(Expr::holds(l.t, l.f), Expr::holds(Expr::app(l.s, l.t), l.g)));
            },
            [](const AxiomA2& l) -> Formula {
              Formula iff = mkIff(l.f, l.g);
              if (l.asserts.empty()) return iff;
              std::vector<Formula> parts;
              parts.reserve(l.asserts.size());
              for (const auto& [t, f] : l.asserts) parts.push_back(Expr::holds(t, f));
              return imp(mkConj(parts), iff);
            },
            [](const AxiomA3& l) -> Formula { return imp(Expr::holds(l.t, l.f), Expr::holds(l.t, Expr::goal(l.t))); },
            [](const AxiomA4& l) -> Formula {
              Term st = Expr::app(l.s, l.t);
              Formula vst = Expr::goal(st);
              Formula vt = Expr::goal(l.t);
              return imp(Expr::holds(st, vst), mkAnd(Expr::holds(l.s, imp(vt, vst)), Expr::holds(l.t, vt)));
            },
            [](const ModusPonens&) -> Formula { throw std::invalid_argument("modus ponens is not an axiom"); },
        },
        line);
  }

  std::optional<Formula> renderLine(const ProofLine& line, std::span<const Formula> earlier) {
    const auto* mp = std::get_if<ModusPonens>(&line);
    if (mp == nullptr) return renderAxiom(line);
    if (mp->major >= earlier.size() || mp->minor >= earlier.size()) {
      throw IndexOutOfRange("modus ponens refers to line " + std::to_string(std::max(mp->major, mp->minor))
                            + " but only " + std::to_string(earlier.size()) + " lines precede it");
    }
    const Formula& major = earlier[mp->major];
    if (major.kind() != Kind::Implies || major.lhs() != earlier[mp->minor]) return std::nullopt;
    return major.rhs();
  }

  bool checkLine(const ProofLine& line, std::span<const Formula> earlier) {
    if (!renderLine(line, earlier)) return false;
    if (const auto* a2 = std::get_if<AxiomA2>(&line)) {
      return equalMod(a2->f, a2->g, problemFromAssertions(a2->asserts));
    }
    return true;
  }

  Verdict checkProof(std::span<const ProofLine> lines) {
    if (lines.empty()) throw EmptyProof();
    Verdict v;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      std::optional<Formula> stated;
      try {
        if (checkLine(lines[i], v.statements)) stated = renderLine(lines[i], v.statements);
      } catch (const IndexOutOfRange&) {
      }
      if (!stated) {
        v.ok = false;
        v.firstBadLine = i;
        return v;
      }
      v.statements.push_back(std::move(*stated));
    }
    v.ok = true;
    return v;
  }

  namespace {

    SamplerConfig samplerFor(const InstanceBounds& b) {
      SamplerConfig c;
      c.props.clear();
      c.justs.clear();
      const char* props[] = {"p", "q", "r", "s", "u"};
      const char* justs[] = {"x", "y", "z", "w", "c"};
      const std::size_t n = std::clamp<std::size_t>(b.atoms, 1, 5);
      for (std::size_t i = 0; i < n; ++i) {
        c.props.emplace_back(props[i]);
        c.justs.emplace_back(justs[i]);
      }
      return c;
    }

    // Replaces a random selection of variable occurrences z by zθ.
    Expr partiallyApply(const Expr& e, const Substitution& theta, ExprSampler& gen) {
      if (e.isVariable()) return gen.coin() ? theta.apply(e) : e;
      switch (e.kind()) {
        case Kind::App:
          return Expr::app(partiallyApply(e.fun(), theta, gen), partiallyApply(e.arg(), theta, gen));
        case Kind::Implies:
          return Expr::implies(partiallyApply(e.lhs(), theta, gen), partiallyApply(e.rhs(), theta, gen));
        case Kind::Holds:
          return Expr::holds(partiallyApply(e.just(), theta, gen), partiallyApply(e.stmt(), theta, gen));
        default:
          return e;
      }
    }

    AxiomA2 randomA2(ExprSampler& gen, const InstanceBounds& b) {
      const std::size_t td = std::max<std::size_t>(1, std::min<std::size_t>(b.termDepth, 2));
      const std::size_t fd = std::max<std::size_t>(1, b.formulaDepth);
      std::vector<Term> pool;
      for (int i = 0; i < 2; ++i) pool.push_back(gen.term(td));
      AxiomA2 line;
      const std::size_t n = 1 + gen.below(std::max<std::size_t>(1, b.maxAsserts));
      for (std::size_t i = 0; i < n; ++i) {
        Term t = pool[gen.below(pool.size())];
        Formula f = gen.coin(0.3) ? Expr::goal(t) : gen.formula(std::min<std::size_t>(fd, 2));
        line.asserts.emplace_back(std::move(t), std::move(f));
      }
      const ConditionalProblem prob = problemFromAssertions(line.asserts);
      const UnifResult r = mgu(prob);
      if (r.unifiable() && line.asserts.size() >= 2 && gen.coin()) {
        // Two statements whose terms the unifier identifies.
        for (std::size_t i = 0; i < line.asserts.size(); ++i) {
          for (std::size_t j = i + 1; j < line.asserts.size(); ++j) {
            if (r.mgu->apply(line.asserts[i].first) == r.mgu->apply(line.asserts[j].first)) {
              line.f = line.asserts[i].second;
              line.g = line.asserts[j].second;
              return line;
            }
          }
        }
      }
      line.f = gen.formula(fd);
      line.g = r.unifiable() ? partiallyApply(line.f, *r.mgu, gen) : gen.formula(fd);
      if (!equalMod(line.f, line.g, prob)) line.g = line.f;
      return line;
    }

  } // namespace

  ProofLine randomAxiomLine(AxiomScheme scheme, std::uint64_t seed, const InstanceBounds& bounds) {
    if (bounds.termDepth == 0 || bounds.formulaDepth == 0 || bounds.atoms == 0)
      throw std::invalid_argument("instance bounds must be positive");
    ExprSampler gen(seed, samplerFor(bounds));
    const std::size_t td = bounds.termDepth;
    const std::size_t fd = bounds.formulaDepth;
    switch (scheme) {
      case AxiomScheme::A0K:
        return AxiomA0{1, gen.formula(fd), gen.formula(fd), Expr::bottom()};
      case AxiomScheme::A0S:
        return AxiomA0{2, gen.formula(fd), gen.formula(fd), gen.formula(fd)};
      case AxiomScheme::A0DNE:
        return AxiomA0{3, gen.formula(fd), Expr::bottom(), Expr::bottom()};
      case AxiomScheme::A1:
        return AxiomA1{gen.term(td), gen.term(td), gen.formula(fd), gen.formula(fd)};
      case AxiomScheme::A2:
        return randomA2(gen, bounds);
      case AxiomScheme::A3:
        return AxiomA3{gen.term(td), gen.formula(fd)};
      case AxiomScheme::A4: {
        const std::size_t sub = td > 1 ? td - 1 : 1;
        return AxiomA4{gen.term(sub), gen.term(sub)};
      }
    }
    throw std::invalid_argument("unknown axiom scheme");
  }

  Formula randomAxiomInstance(AxiomScheme scheme, std::uint64_t seed, const InstanceBounds& bounds) {
    return renderAxiom(randomAxiomLine(scheme, seed, bounds));
  }

} // namespace jref
