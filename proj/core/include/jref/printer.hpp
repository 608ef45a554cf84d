// jref :: ASCII printer with minimal parentheses

#ifndef JREF_PRINTER_HPP_
#define JREF_PRINTER_HPP_

#include <string>

#include "jref/expr.hpp"

namespace jref {

  // parseFormula(print(f)) == f and parseTerm(print(t)) == t.
  // Compound terms in front of ':' are always parenthesized: "(x*y):q".
  std::string print(const Expr& e);
  std::string print(const Var& v);

} // namespace jref

#endif // JREF_PRINTER_HPP_
