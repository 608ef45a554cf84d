#include "jref/substitution.hpp"

#include <sstream>

#include "jref/errors.hpp"
#include "jref/printer.hpp"

namespace jref {

  namespace {

    Expr rebuild(const Expr& e, Expr l, Expr r) {
      if (l.sameNode(e.lhs()) && r.sameNode(e.rhs())) return e;
      switch (e.kind()) {
        case Kind::App: return Expr::app(std::move(l), std::move(r));
        case Kind::Implies: return Expr::implies(std::move(l), std::move(r));
        case Kind::Holds: return Expr::holds(std::move(l), std::move(r));
        default: return e;
      }
    }

  } // namespace

  Substitution::Substitution(VarSet support, std::map<Var, Expr> bindings)
      : support_(std::move(support)) {
    for (auto& [z, value] : bindings) {
      if (z.sort() != value.sort())
        throw SortClash("binding " + print(z) + " -> " + print(value) + " changes sort");
      if (!support_.contains(z))
        throw InvalidSubstitution("bound variable " + print(z) + " is outside the support");
      if (value == z.expr()) continue;
      bindings_.emplace(z, std::move(value));
    }
  }

  Substitution Substitution::validated(VarSet support, std::map<Var, Expr> bindings) {
    Substitution s(std::move(support), std::move(bindings));
    auto describe = [&s](const char* what) {
      std::ostringstream os;
      os << "substitution is not " << what << ": " << s;
      return os.str();
    };
    if (!isIdempotent(s)) throw InvalidSubstitution(describe("idempotent"));
    if (!isComprehensive(s)) throw InvalidSubstitution(describe("comprehensive"));
    if (!isConservative(s)) throw InvalidSubstitution(describe("conservative"));
    return s;
  }

  VarSet Substitution::domain() const {
    VarSet out;
    for (const auto& [z, _] : bindings_) out.insert(z);
    return out;
  }

  std::optional<Expr> Substitution::lookup(const Var& z) const {
    auto it = bindings_.find(z);
    if (it == bindings_.end()) return std::nullopt;
    return it->second;
  }

  // The finite part θ0 applied as an ordinary (one-shot) substitution.
  Expr Substitution::bindOnce(const Expr& e) const {
    switch (e.kind()) {
      case Kind::Bottom:
        return e;
      case Kind::JustAtom:
      case Kind::PropAtom:
      case Kind::Goal: {
        auto it = bindings_.find(Var::of(e));
        return it == bindings_.end() ? e : it->second;
      }
      case Kind::App:
      case Kind::Implies:
      case Kind::Holds:
        return rebuild(e, bindOnce(e.lhs()), bindOnce(e.rhs()));
    }
    return e;
  }

  Expr Substitution::apply(const Expr& e) const {
    if (bindings_.empty()) return e;
    switch (e.kind()) {
      case Kind::Bottom:
        return e;
      case Kind::JustAtom:
      case Kind::PropAtom: {
        auto it = bindings_.find(Var::of(e));
        return it == bindings_.end() ? e : it->second;
      }
      case Kind::Goal: {
        const Var z = Var::of(e);
        if (support_.contains(z)) {
          auto it = bindings_.find(z);
          return it == bindings_.end() ? e : it->second;
        }
        Term index = bindOnce(e.index());
        Expr normalized = index.sameNode(e.index()) ? e : Expr::goal(std::move(index));
        auto it = bindings_.find(Var::of(normalized));
        return it == bindings_.end() ? normalized : it->second;
      }
      case Kind::App:
      case Kind::Implies:
      case Kind::Holds:
        return rebuild(e, apply(e.lhs()), apply(e.rhs()));
    }
    return e;
  }

  Expr applySubst(const Substitution& s, const Expr& e) { return s.apply(e); }

  Substitution composeSubst(const Substitution& s1, const Substitution& s2) {
    VarSet support = s1.support();
    support.insert(s2.support().begin(), s2.support().end());
    std::map<Var, Expr> bindings;
    for (const Var& z : support) bindings.emplace(z, s2.apply(s1.apply(z.expr())));
    return Substitution(std::move(support), std::move(bindings));
  }

  bool isIdempotent(const Substitution& s) {
    for (const Var& z : s.support()) {
      Expr once = s.apply(z.expr());
      if (s.apply(once) != once) return false;
    }
    for (const auto& [z, value] : s.bindings()) {
      if (s.apply(value) != value) return false;
    }
    return true;
  }

  bool isComprehensiveOn(const Substitution& s, const TermSet& ts) {
    std::map<Term, Expr> goalImage; // tθ -> v(t)θ for the first t seen
    for (const Term& t : ts) {
      Term image = s.apply(t);
      Expr g = s.apply(Expr::goal(t));
      auto [it, fresh] = goalImage.emplace(image, g);
      if (!fresh && it->second != g) return false;
    }
    return true;
  }

  bool isComprehensive(const Substitution& s) {
    for (const Var& z : s.support()) {
      if (!z.isGoal()) continue;
      Term image = s.apply(z.expr().index());
      if (s.apply(z.expr()) != s.apply(Expr::goal(image))) return false;
    }
    return true;
  }

  bool isConservative(const Substitution& s) {
    VarSet allowed = s.support();
    for (const Var& z : s.support()) {
      if (z.isGoal()) allowed.insert(Var::goal(s.apply(z.expr().index())));
    }
    for (const auto& [z, value] : s.bindings()) {
      for (const Var& w : varsOf(value)) {
        if (!allowed.contains(w)) return false;
      }
    }
    return true;
  }

  bool extendsTo(const Substitution& a, const Substitution& b) {
    for (const auto& [z, _] : a.bindings()) {
      if (!b.bindings().contains(z)) return false;
    }
    return true;
  }

  bool isFixedPoint(const Substitution& s, const Expr& e) { return s.apply(e) == e; }

  std::ostream& operator<<(std::ostream& os, const Substitution& s) {
    os << "{support: [";
    bool first = true;
    for (const Var& z : s.support()) {
      os << (first ? "" : ", ") << z;
      first = false;
    }
    os << "], bindings: {";
    first = true;
    for (const auto& [z, value] : s.bindings()) {
      os << (first ? "" : ", ") << z << " -> " << value;
      first = false;
    }
    return os << "}}";
  }

} // namespace jref
