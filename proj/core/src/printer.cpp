#include "jref/printer.hpp"

namespace jref {

  namespace {

    void term(const Expr& t, std::string& out) {
      if (t.kind() == Kind::JustAtom) {
        out += t.name();
        return;
      }
      term(t.fun(), out);
      out += '*';
      if (t.arg().kind() == Kind::App) {
        out += '(';
        term(t.arg(), out);
        out += ')';
      } else {
        term(t.arg(), out);
      }
    }

    void formula(const Expr& f, std::string& out);

    void atomic(const Expr& f, std::string& out) {
      if (f.isAtomicFormula()) {
        formula(f, out);
      } else {
        out += '(';
        formula(f, out);
        out += ')';
      }
    }

    void formula(const Expr& f, std::string& out) {
      switch (f.kind()) {
        case Kind::Bottom:
          out += "false";
          return;
        case Kind::PropAtom:
          out += f.name();
          return;
        case Kind::Goal:
          out += "v(";
          term(f.index(), out);
          out += ')';
          return;
        case Kind::Holds:
          if (f.just().kind() == Kind::App) {
            out += '(';
            term(f.just(), out);
            out += ')';
          } else {
            term(f.just(), out);
          }
          out += ':';
          atomic(f.stmt(), out);
          return;
        case Kind::Implies:
          if (f.lhs().kind() == Kind::Implies) {
            out += '(';
            formula(f.lhs(), out);
            out += ')';
          } else {
            formula(f.lhs(), out);
          }
          out += " -> ";
          formula(f.rhs(), out);
          return;
        case Kind::JustAtom:
        case Kind::App:
          term(f, out);
          return;
      }
    }

  } // namespace

  std::string print(const Expr& e) {
    std::string out;
    out.reserve(e.size() * 3);
    formula(e, out);
    return out;
  }

  std::string print(const Var& v) { return print(v.expr()); }

} // namespace jref
