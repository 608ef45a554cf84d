#include "jref/saturation.hpp"

#include <map>
#include <sstream>

#include "jref/errors.hpp"
#include "jref/printer.hpp"
#include "jref/unification.hpp"

namespace jref {

  SaturationState initState(const Formula& f) {
    SaturationState st;
    st.delta = {Expr::bottom(), f};
    return st;
  }

  std::optional<Formula> overlap(const SaturationState& st) {
    const FormulaSet& small = st.gamma.size() <= st.delta.size() ? st.gamma : st.delta;
    const FormulaSet& large = &small == &st.gamma ? st.delta : st.gamma;
    for (const Formula& f : small) {
      if (large.contains(f)) return f;
    }
    return std::nullopt;
  }

  namespace {

    bool add(FormulaSet& set, Formula f, std::size_t& steps) {
      if (!set.insert(std::move(f)).second) return false;
      ++steps;
      return true;
    }

  } // namespace

  bool closeDelta(SaturationState& st) {
    bool changed = false;
    for (bool again = true; again;) {
      again = false;
      std::vector<Formula> todo;
      for (const Formula& f : st.delta) {
        if (f.kind() == Kind::Implies && !st.deltaProcessed.contains(f)) todo.push_back(f);
      }
      for (const Formula& f : todo) {
        st.deltaProcessed.insert(f);
        add(st.gamma, f.lhs(), st.stepCount);
        add(st.delta, f.rhs(), st.stepCount);
        again = changed = true;
      }
    }
    return changed;
  }

  std::optional<Formula> pendingImplication(const SaturationState& st) {
    for (const Formula& f : st.gamma) {
      if (f.kind() == Kind::Implies && !st.discharged.contains(f)) return f;
    }
    return std::nullopt;
  }

  SaturationState splitLeft(const SaturationState& st, const Formula& target) {
    SaturationState next = st;
    next.discharged.insert(target);
    add(next.gamma, target.rhs(), next.stepCount);
    return next;
  }

  SaturationState splitRight(const SaturationState& st, const Formula& target) {
    SaturationState next = st;
    next.discharged.insert(target);
    add(next.delta, target.lhs(), next.stepCount);
    return next;
  }

  std::variant<Failed, std::vector<SaturationState>> block1(const SaturationState& st0) {
    SaturationState st = st0;
    closeDelta(st);
    if (auto w = overlap(st)) return Failed{*w};
    auto target = pendingImplication(st);
    if (!target) return std::vector<SaturationState>{std::move(st)};
    std::vector<SaturationState> leaves;
    std::optional<Formula> witness;
    for (SaturationState next : {splitLeft(st, *target), splitRight(st, *target)}) {
      auto r = block1(next);
      if (auto* f = std::get_if<Failed>(&r)) {
        if (!witness) witness = f->witness;
      } else {
        auto& more = std::get<std::vector<SaturationState>>(r);
        leaves.insert(leaves.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
      }
    }
    if (leaves.empty()) return Failed{*witness};
    return leaves;
  }

  std::variant<Failed, SaturationState> block2(const SaturationState& st0) {
    SaturationState st = st0;
    TermSet terms;
    for (const Formula& f : st.gamma) collectTerms(f, terms);
    for (const Formula& f : st.delta) collectTerms(f, terms);

    for (bool changed = true; changed;) {
      changed = false;
      std::vector<Formula> fresh;
      std::map<Formula, std::vector<Term>> byStatement;
      for (const Formula& f : st.gamma) {
        if (f.kind() != Kind::Holds) continue;
        const Term& t = f.just();
        byStatement[f.stmt()].push_back(t);
        fresh.push_back(Expr::holds(t, Expr::goal(t)));
        if (t.kind() == Kind::App) {
          fresh.push_back(Expr::holds(t.fun(), Expr::implies(Expr::goal(t.arg()), f.stmt())));
          fresh.push_back(Expr::holds(t.arg(), Expr::goal(t.arg())));
        }
      }
      for (const Term& t : terms) {
        Term image = st.theta.apply(t);
        if (st.gamma.contains(Expr::holds(image, Expr::goal(image)))) fresh.push_back(Expr::holds(t, Expr::goal(t)));
      }
      for (const Formula& f : st.gamma) {
        if (f.kind() != Kind::Holds || f.stmt().kind() != Kind::Implies) continue;
        auto it = byStatement.find(f.stmt().lhs());
        if (it == byStatement.end()) continue;
        for (const Term& t : it->second) {
          Term st2 = Expr::app(f.just(), t);
          if (terms.contains(st2)) fresh.push_back(Expr::holds(st2, f.stmt().rhs()));
        }
      }
      for (Formula& f : fresh) changed |= add(st.gamma, std::move(f), st.stepCount);
    }
    if (auto w = overlap(st)) return Failed{*w};
    return st;
  }

  Block3Outcome block3(const SaturationState& st0) {
    std::vector<Assertion> asserts;
    for (const Formula& f : st0.gamma) {
      if (f.kind() == Kind::Holds) asserts.emplace_back(f.just(), f.stmt());
    }
    UnifResult r = mguExtending(problemFromAssertions(asserts), st0.theta);
    if (!r.unifiable()) return {Block3Outcome::Kind::NotUnifiable, st0, std::nullopt};

    SaturationState st = st0;
    const Substitution& next = *r.mgu;
    for (const Formula& f : st0.gamma) add(st.gamma, next.apply(f), st.stepCount);
    for (const Formula& f : st0.delta) add(st.delta, next.apply(f), st.stepCount);
    for (const Formula& f : st0.discharged) st.discharged.insert(next.apply(f));
    const bool sameDomain = next.domain() == st0.theta.domain();
    if (next != st0.theta) ++st.stepCount;
    st.theta = next;
    if (auto w = overlap(st)) return {Block3Outcome::Kind::Failed, std::move(st), *w};
    return {sameDomain ? Block3Outcome::Kind::Success : Block3Outcome::Kind::Continue, std::move(st), std::nullopt};
  }

  namespace {

    std::string describeDomain(const VarSet& dom) {
      std::string out = "{";
      bool first = true;
      for (const Var& z : dom) {
        if (!first) out += ", ";
        out += print(z);
        first = false;
      }
      return out + "}";
    }

    class Explorer {
    public:
      Explorer(const SaturationLimits& limits, const TraceSink& trace) : limits_(limits), trace_(trace) {}

      CertNode explore(SaturationState st, std::size_t depth) {
        if (++stats_.nodes > limits_.maxNodes)
          throw LimitExceeded("saturation tree exceeds " + std::to_string(limits_.maxNodes) + " nodes");
        CertNode node;
        for (;;) {
          const std::size_t before = st.stepCount;
          closeDelta(st);
          charge(st, before);
          if (auto w = overlap(st)) return fail(node, *w, 1, depth);
          if (auto target = pendingImplication(st)) {
            node.kind = CertNode::Kind::Branch;
            node.target = *target;
            log(depth, "block 1: split " + print(*target) + ", left");
            node.children.push_back(explore(splitLeft(st, *target), depth + 1));
            if (success_) return node;
            log(depth, "block 1: split " + print(*target) + ", right");
            node.children.push_back(explore(splitRight(st, *target), depth + 1));
            return node;
          }
          node.steps.push_back(CertStep{1, {}});
          log(depth, "block 1: |G|=" + std::to_string(st.gamma.size()) + " |D|=" + std::to_string(st.delta.size()));

          auto b2 = block2(st);
          if (auto* f = std::get_if<Failed>(&b2)) return fail(node, f->witness, 2, depth);
          charge(std::get<SaturationState>(b2), st.stepCount);
          st = std::move(std::get<SaturationState>(b2));
          node.steps.push_back(CertStep{2, {}});
          log(depth, "block 2: |G|=" + std::to_string(st.gamma.size()));

          Block3Outcome b3 = block3(st);
          charge(b3.state, st.stepCount);
          switch (b3.kind) {
            case Block3Outcome::Kind::NotUnifiable:
              node.kind = CertNode::Kind::NotUnifiable;
              log(depth, "block 3: not unifiable");
              return node;
            case Block3Outcome::Kind::Failed:
              return fail(node, *b3.witness, 3, depth);
            case Block3Outcome::Kind::Success:
              node.kind = CertNode::Kind::Success;
              log(depth, "block 3: domain unchanged, success");
              success_ = std::move(b3.state);
              return node;
            case Block3Outcome::Kind::Continue: {
              VarSet dom = b3.state.theta.domain();
              log(depth, "block 3: domain " + describeDomain(dom));
              node.steps.push_back(CertStep{3, std::vector<Var>(dom.begin(), dom.end())});
              st = std::move(b3.state);
              break;
            }
          }
        }
      }

      std::optional<SaturationState>& success() { return success_; }
      const SaturationStats& stats() const { return stats_; }

    private:
      CertNode& fail(CertNode& node, const Formula& witness, int block, std::size_t depth) {
        node.kind = CertNode::Kind::Failed;
        node.witness = witness;
        log(depth, "block " + std::to_string(block) + ": failure, " + print(witness) + " in G and D");
        return node;
      }

      void charge(const SaturationState& st, std::size_t before) {
        stats_.steps += st.stepCount - before;
        if (stats_.steps > limits_.maxSteps)
          throw LimitExceeded("saturation exceeds " + std::to_string(limits_.maxSteps) + " steps");
      }

      void log(std::size_t depth, const std::string& line) const {
        if (trace_) trace_(std::string(2 * depth, ' ') + line);
      }

      const SaturationLimits& limits_;
      const TraceSink& trace_;
      SaturationStats stats_;
      std::optional<SaturationState> success_;
    };

  } // namespace

  Decision decide(const Formula& f, const SaturationLimits& limits, const TraceSink& trace) {
    if (!f.isFormula()) throw SortClash("decide expects a formula, got the term " + print(f));
    Explorer ex(limits, trace);
    CertNode root = ex.explore(initState(f), 0);
    Decision d;
    d.stats = ex.stats();
    if (ex.success()) {
      d.leaf = std::move(ex.success());
      return d;
    }
    d.provable = true;
    d.certificate = Certificate{f, std::move(root)};
    return d;
  }

} // namespace jref
