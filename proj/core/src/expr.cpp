#include "jref/expr.hpp"

#include <algorithm>
#include <utility>

#include "jref/errors.hpp"
#include "jref/printer.hpp"

namespace jref {

  namespace {

    std::size_t mix(std::size_t seed, std::size_t value) noexcept {
      return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
    }

    void requireSort(const Expr& e, Sort expected, const char* where) {
      if (e.sort() != expected)
        throw SortClash(std::string(where) + ": expected a " + toString(expected) + ", got "
                        + toString(e.sort()) + " '" + print(e) + "'");
    }

    void requireName(const std::string& name, const char* where) {
      if (name.empty())
        throw SortClash(std::string(where) + ": empty atom name");
    }

  } // namespace

  Expr Expr::make(Kind kind, std::string name, Expr first, Expr second) {
    std::size_t h = mix(static_cast<std::size_t>(kind) + 1, std::hash<std::string>{}(name));
    std::size_t size = 1;
    std::size_t depth = 1;
    if (first.node_) {
      h = mix(h, first.hash());
      size += first.size();
      depth = first.depth() + 1;
    }
    if (second.node_) {
      h = mix(h, second.hash());
      size += second.size();
      depth = std::max(depth, second.depth() + 1);
    }
    if (kind == Kind::Goal) depth = first.depth();
    return Expr(std::make_shared<const Node>(
      Node{kind, std::move(name), std::move(first), std::move(second), h, size, depth}));
  }

  Expr Expr::justAtom(std::string name) {
    requireName(name, "justification atom");
    return make(Kind::JustAtom, std::move(name), Expr(), Expr());
  }

  Expr Expr::app(Expr fun, Expr arg) {
    requireSort(fun, Sort::Term, "application");
    requireSort(arg, Sort::Term, "application");
    return make(Kind::App, {}, std::move(fun), std::move(arg));
  }

  Expr Expr::bottom() {
    static const Expr instance = make(Kind::Bottom, {}, Expr(), Expr());
    return instance;
  }

  Expr Expr::prop(std::string name) {
    requireName(name, "propositional atom");
    return make(Kind::PropAtom, std::move(name), Expr(), Expr());
  }

  Expr Expr::implies(Expr lhs, Expr rhs) {
    requireSort(lhs, Sort::Formula, "implication");
    requireSort(rhs, Sort::Formula, "implication");
    return make(Kind::Implies, {}, std::move(lhs), std::move(rhs));
  }

  Expr Expr::holds(Expr just, Expr stmt) {
    requireSort(just, Sort::Term, "justification assertion");
    requireSort(stmt, Sort::Formula, "justification assertion");
    return make(Kind::Holds, {}, std::move(just), std::move(stmt));
  }

  Expr Expr::goal(Expr index) {
    requireSort(index, Sort::Term, "v(...)");
    return make(Kind::Goal, {}, std::move(index), Expr());
  }

  bool operator==(const Expr& a, const Expr& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.kind() != b.kind() || a.size() != b.size()) return false;
    if (a.name() != b.name()) return false;
    const auto& na = *a.node_;
    const auto& nb = *b.node_;
    if (na.first.node_ && !(na.first == nb.first)) return false;
    if (na.second.node_ && !(na.second == nb.second)) return false;
    return true;
  }

  std::strong_ordering operator<=>(const Expr& a, const Expr& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (auto c = a.name() <=> b.name(); c != 0) return c;
    const auto& na = *a.node_;
    const auto& nb = *b.node_;
    if (na.first.node_) {
      if (auto c = na.first <=> nb.first; c != 0) return c;
    }
    if (na.second.node_) {
      if (auto c = na.second <=> nb.second; c != 0) return c;
    }
    return std::strong_ordering::equal;
  }

  std::string toString(Sort sort) {
    return sort == Sort::Term ? "term" : "formula";
  }

  std::ostream& operator<<(std::ostream& os, const Expr& e) {
    return os << print(e);
  }

  Var Var::of(const Expr& e) {
    if (!e.isVariable())
      throw SortClash("not a variable: '" + print(e) + "'");
    return Var(e);
  }

  std::ostream& operator<<(std::ostream& os, const Var& v) {
    return os << print(v.expr());
  }

  void collectVars(const Expr& e, VarSet& out) {
    switch (e.kind()) {
      case Kind::JustAtom:
      case Kind::PropAtom:
        out.insert(Var::of(e));
        return;
      case Kind::Goal:
        out.insert(Var::of(e));
        collectVars(e.index(), out);
        return;
      case Kind::Bottom:
        return;
      case Kind::App:
      case Kind::Implies:
      case Kind::Holds:
        collectVars(e.lhs(), out);
        collectVars(e.rhs(), out);
        return;
    }
  }

  VarSet varsOf(const Expr& e) {
    VarSet out;
    collectVars(e, out);
    return out;
  }

  void collectTerms(const Expr& e, TermSet& out) {
    switch (e.kind()) {
      case Kind::JustAtom:
        out.insert(e);
        return;
      case Kind::App:
        if (out.insert(e).second) {
          collectTerms(e.fun(), out);
          collectTerms(e.arg(), out);
        }
        return;
      case Kind::Goal:
        collectTerms(e.index(), out);
        return;
      case Kind::Bottom:
      case Kind::PropAtom:
        return;
      case Kind::Implies:
      case Kind::Holds:
        collectTerms(e.lhs(), out);
        collectTerms(e.rhs(), out);
        return;
    }
  }

  TermSet termsOf(const Expr& e) {
    TermSet out;
    collectTerms(e, out);
    return out;
  }

  bool containsGoal(const Expr& e) {
    switch (e.kind()) {
      case Kind::Goal: return true;
      case Kind::JustAtom:
      case Kind::App:
      case Kind::Bottom:
      case Kind::PropAtom: return false;
      case Kind::Implies:
      case Kind::Holds: return containsGoal(e.lhs()) || containsGoal(e.rhs());
    }
    return false;
  }

  Expr replaceAll(const Expr& e, const Expr& from, const Expr& to) {
    if (e == from) return to;
    switch (e.kind()) {
      case Kind::JustAtom:
      case Kind::Bottom:
      case Kind::PropAtom:
        return e;
      case Kind::Goal: {
        Expr i = replaceAll(e.index(), from, to);
        return i.sameNode(e.index()) ? e : Expr::goal(std::move(i));
      }
      case Kind::App:
      case Kind::Implies:
      case Kind::Holds: {
        Expr l = replaceAll(e.lhs(), from, to);
        Expr r = replaceAll(e.rhs(), from, to);
        if (l.sameNode(e.lhs()) && r.sameNode(e.rhs())) return e;
        if (e.kind() == Kind::App) return Expr::app(std::move(l), std::move(r));
        if (e.kind() == Kind::Implies) return Expr::implies(std::move(l), std::move(r));
        return Expr::holds(std::move(l), std::move(r));
      }
    }
    return e;
  }

} // namespace jref
