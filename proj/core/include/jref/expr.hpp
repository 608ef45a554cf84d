// jref :: expressions of the two-sorted justification language
//
// Terms:    x | s*t
// Formulas: false | p | A -> B | t:A | v(t)
//
// The same tree type serves the logic language (atoms are variables that admit
// substitution) and the ground model language (atoms are constants). Which
// reading applies is decided by the caller.

#ifndef JREF_EXPR_HPP_
#define JREF_EXPR_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string>

namespace jref {

  enum class Sort : std::uint8_t { Term, Formula };

  enum class Kind : std::uint8_t {
    JustAtom, // term
    App,      // term
    Bottom,   // formula
    PropAtom, // formula
    Implies,  // formula
    Holds,    // formula  t:F
    Goal,     // formula  v(t)
  };

  class Expr {
  public:
    static Expr justAtom(std::string name);
    static Expr app(Expr fun, Expr arg);
    static Expr bottom();
    static Expr prop(std::string name);
    static Expr implies(Expr lhs, Expr rhs);
    static Expr holds(Expr just, Expr stmt);
    static Expr goal(Expr index);

    Kind kind() const noexcept;
    Sort sort() const noexcept;
    bool isTerm() const noexcept { return sort() == Sort::Term; }
    bool isFormula() const noexcept { return sort() == Sort::Formula; }

    // JustAtom, PropAtom or Goal: the things a substitution acts on.
    bool isVariable() const noexcept {
      return kind() == Kind::JustAtom || kind() == Kind::PropAtom || kind() == Kind::Goal;
    }
    bool isAtomicFormula() const noexcept {
      return kind() == Kind::Bottom || kind() == Kind::PropAtom || kind() == Kind::Goal;
    }

    // Atom name (JustAtom, PropAtom). Empty for other kinds.
    const std::string& name() const noexcept;

    // Children. Calling an accessor that does not match kind() is a logic error.
    const Expr& fun() const noexcept { return first(); }
    const Expr& arg() const noexcept { return second(); }
    const Expr& lhs() const noexcept { return first(); }
    const Expr& rhs() const noexcept { return second(); }
    const Expr& just() const noexcept { return first(); }
    const Expr& stmt() const noexcept { return second(); }
    const Expr& index() const noexcept { return first(); }

    std::size_t hash() const noexcept;
    // Node count.
    std::size_t size() const noexcept;
    // Atoms (and v(atom)) have depth 1; v(t) has the depth of t.
    std::size_t depth() const noexcept;

    bool sameNode(const Expr& other) const noexcept { return node_ == other.node_; }

    friend bool operator==(const Expr& a, const Expr& b) noexcept;
    friend std::strong_ordering operator<=>(const Expr& a, const Expr& b) noexcept;

  private:
    struct Node;
    Expr() = default;
    explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    static Expr make(Kind kind, std::string name, Expr first, Expr second);
    const Expr& first() const noexcept;
    const Expr& second() const noexcept;

    std::shared_ptr<const Node> node_;
  };

  struct Expr::Node {
    Kind kind;
    std::string name;
    Expr first;
    Expr second;
    std::size_t hash;
    std::size_t size;
    std::size_t depth;
  };

  inline Kind Expr::kind() const noexcept { return node_->kind; }
  inline const std::string& Expr::name() const noexcept { return node_->name; }
  inline const Expr& Expr::first() const noexcept { return node_->first; }
  inline const Expr& Expr::second() const noexcept { return node_->second; }
  inline std::size_t Expr::hash() const noexcept { return node_->hash; }
  inline std::size_t Expr::size() const noexcept { return node_->size; }
  inline std::size_t Expr::depth() const noexcept { return node_->depth; }
  inline Sort Expr::sort() const noexcept {
    return (node_->kind == Kind::JustAtom || node_->kind == Kind::App) ? Sort::Term : Sort::Formula;
  }

  using Term = Expr;
  using Formula = Expr;
  using ExprSet = std::set<Expr>;
  using FormulaSet = std::set<Formula>;
  using TermSet = std::set<Term>;

  std::ostream& operator<<(std::ostream& os, const Expr& e);
  std::string toString(Sort sort);

  // A variable of the logic language: p, x or v(t).
  class Var {
  public:
    static Var prop(std::string name) { return Var(Expr::prop(std::move(name))); }
    static Var just(std::string name) { return Var(Expr::justAtom(std::move(name))); }
    static Var goal(Term index) { return Var(Expr::goal(std::move(index))); }
    // Throws SortClash when e is not a variable.
    static Var of(const Expr& e);

    const Expr& expr() const noexcept { return expr_; }
    Kind kind() const noexcept { return expr_.kind(); }
    Sort sort() const noexcept { return expr_.sort(); }
    bool isGoal() const noexcept { return expr_.kind() == Kind::Goal; }

    friend bool operator==(const Var&, const Var&) = default;
    friend std::strong_ordering operator<=>(const Var& a, const Var& b) noexcept {
      return a.expr_ <=> b.expr_;
    }

  private:
    explicit Var(Expr e) : expr_(std::move(e)) {}
    Expr expr_;
  };

  using VarSet = std::set<Var>;

  std::ostream& operator<<(std::ostream& os, const Var& v);

  // Var(e): every p, x, v(t) occurring in e. For v(t) this includes v(t)
  // itself and the justification atoms of t.
  VarSet varsOf(const Expr& e);
  void collectVars(const Expr& e, VarSet& out);

  // Every term occurring in e, closed under subterms; v(t) contributes t.
  TermSet termsOf(const Expr& e);
  void collectTerms(const Expr& e, TermSet& out);

  bool containsGoal(const Expr& e);

  // Structural replacement of every occurrence of `from` by `to`.
  Expr replaceAll(const Expr& e, const Expr& from, const Expr& to);

} // namespace jref

template <>
struct std::hash<jref::Expr> {
  std::size_t operator()(const jref::Expr& e) const noexcept { return e.hash(); }
};

#endif // JREF_EXPR_HPP_
