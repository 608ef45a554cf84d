#include "jref/json_io.hpp"

#include <set>
#include <string>

#include "jref/errors.hpp"
#include "jref/parser.hpp"
#include "jref/printer.hpp"

namespace jref {

  namespace {

    std::string text(const json& j, const char* what) {
      if (!j.is_string()) throw FormatError(std::string(what) + " must be a string");
      return j.get<std::string>();
    }

    const json& field(const json& j, const char* key) {
      if (!j.is_object()) throw FormatError(std::string("expected an object with field '") + key + "'");
      auto it = j.find(key);
      if (it == j.end()) throw FormatError(std::string("missing field '") + key + "'");
      return *it;
    }

    bool isBareIdentifier(const std::string& s) {
      try {
        Term t = parseTerm(s);
        return t.kind() == Kind::JustAtom;
      } catch (const ParseError&) {
        return false;
      }
    }

    // A variable or expression written in a context that fixes justification
    // names: bare identifiers listed in justVars are terms.
    Expr readExpr(const std::string& s, const std::set<std::string>& justVars) {
      if (isBareIdentifier(s)) {
        std::string name = parseTerm(s).name();
        return justVars.contains(name) ? Expr::justAtom(name) : Expr::prop(name);
      }
      try {
        return parseTerm(s);
      } catch (const ParseError&) {
        return parseFormula(s);
      }
    }

    std::set<std::string> justNames(const json& j) {
      std::set<std::string> out;
      auto it = j.find("justVars");
      if (it == j.end()) return out;
      if (!it->is_array()) throw FormatError("'justVars' must be an array");
      for (const json& n : *it) out.insert(text(n, "justVars entry"));
      return out;
    }

    json stringOrArray(const FormulaSet& s) {
      if (s.size() == 1) return print(*s.begin());
      json arr = json::array();
      for (const Formula& f : s) arr.push_back(print(f));
      return arr;
    }

    FormulaSet formulasOf(const json& j) {
      FormulaSet out;
      if (j.is_string()) {
        out.insert(parseFormula(j.get<std::string>()));
      } else if (j.is_array()) {
        for (const json& e : j) out.insert(parseFormula(text(e, "justified formula")));
      } else {
        throw FormatError("a justification entry must be a string or an array of strings");
      }
      return out;
    }

    json varList(const std::vector<Var>& vars, json& justVars) {
      json arr = json::array();
      for (const Var& z : vars) {
        arr.push_back(print(z));
        if (z.kind() == Kind::JustAtom) justVars.push_back(z.expr().name());
      }
      return arr;
    }

    std::vector<Var> readVarList(const json& arr, const std::set<std::string>& justVars) {
      if (!arr.is_array()) throw FormatError("variable list must be an array");
      std::vector<Var> out;
      std::set<std::string> justSeen;
      for (const json& e : arr) {
        std::string s = text(e, "variable");
        if (isBareIdentifier(s)) {
          std::string name = parseTerm(s).name();
          // A name used for both sorts is listed twice; the justification comes first.
          if (justVars.contains(name) && justSeen.insert(name).second) out.push_back(Var::just(name));
          else out.push_back(Var::prop(name));
        } else {
          out.push_back(Var::of(parseFormula(s)));
        }
      }
      return out;
    }

  } // namespace

  Formula formulaFromJson(const json& j) { return parseFormula(text(j, "formula")); }

  // --- substitutions ---------------------------------------------------------

  json substitutionToJson(const Substitution& s) {
    json j;
    json justVars = json::array();
    j["support"] = varList(std::vector<Var>(s.support().begin(), s.support().end()), justVars);
    json bindings = json::object();
    for (const auto& [z, value] : s.bindings()) bindings[print(z)] = print(value);
    j["bindings"] = std::move(bindings);
    j["justVars"] = std::move(justVars);
    return j;
  }

  Substitution substitutionFromJson(const json& j) {
    const std::set<std::string> justVars = justNames(j);
    std::vector<Var> support = readVarList(field(j, "support"), justVars);
    std::map<Var, Expr> bindings;
    const json& b = field(j, "bindings");
    if (!b.is_object()) throw FormatError("'bindings' must be an object");
    for (const auto& [key, value] : b.items()) {
      Expr z = readExpr(key, justVars);
      if (!z.isVariable()) throw FormatError("binding key '" + key + "' is not a variable");
      std::string v = text(value, "binding value");
      Expr e = z.isTerm() ? parseTerm(v) : parseFormula(v);
      bindings.emplace(Var::of(z), std::move(e));
    }
    return Substitution(VarSet(support.begin(), support.end()), std::move(bindings));
  }

  // --- models -------------------------------------------------------------------

  json modelToJson(const BasicModel& m) {
    json j;
    json atoms = json::array();
    for (const Formula& a : m.trueAtoms) atoms.push_back(print(a));
    j["trueAtoms"] = std::move(atoms);
    json just = json::object();
    for (const auto& [name, fs] : m.justBase) just[name] = stringOrArray(fs);
    j["justifications"] = std::move(just);
    json expl = json::object();
    for (const auto& [t, fs] : m.explicitCompound) expl[print(t)] = stringOrArray(fs);
    j["explicit"] = std::move(expl);
    j["sharp"] = m.sharp;
    return j;
  }

  BasicModel modelFromJson(const json& j) {
    BasicModel m;
    if (!j.is_object()) throw FormatError("a model must be a JSON object");
    if (auto it = j.find("trueAtoms"); it != j.end()) {
      if (!it->is_array()) throw FormatError("'trueAtoms' must be an array");
      for (const json& a : *it) {
        Formula f = parseFormula(text(a, "true atom"));
        if (f.kind() != Kind::PropAtom && f.kind() != Kind::Goal)
          throw FormatError("true atom '" + print(f) + "' is not an atom");
        m.trueAtoms.insert(std::move(f));
      }
    }
    if (auto it = j.find("justifications"); it != j.end()) {
      if (!it->is_object()) throw FormatError("'justifications' must be an object");
      for (const auto& [key, value] : it->items()) {
        Term t = parseTerm(key);
        if (t.kind() != Kind::JustAtom) throw FormatError("justification key '" + key + "' is not an atom");
        m.justBase[t.name()] = formulasOf(value);
      }
    }
    if (auto it = j.find("explicit"); it != j.end()) {
      if (!it->is_object()) throw FormatError("'explicit' must be an object");
      for (const auto& [key, value] : it->items()) {
        Term t = parseTerm(key);
        if (t.kind() != Kind::App) throw FormatError("explicit key '" + key + "' is not a compound term");
        m.explicitCompound[t] = formulasOf(value);
      }
    }
    if (auto it = j.find("sharp"); it != j.end()) {
      if (!it->is_boolean()) throw FormatError("'sharp' must be a boolean");
      m.sharp = it->get<bool>();
    }
    return m;
  }

  json countermodelToJson(const Countermodel& cm, const Formula& f) {
    json j = modelToJson(cm.interp.model);
    j["interpretation"] = substitutionToJson(cm.interp.subst);
    j["formula"] = print(f);
    j["value"] = evalUnder(cm.interp, f);
    j["checks"] = {{"basicClosure", cm.report.basicClosure},
                   {"sharp", cm.report.sharp},
                   {"injective", cm.report.injective}};
    return j;
  }

  // --- proofs ---------------------------------------------------------------

  json proofToJson(const std::vector<ProofLine>& lines) {
    json arr = json::array();
    for (const ProofLine& line : lines) {
      json j;
      if (const auto* l = std::get_if<AxiomA0>(&line)) {
        j = {{"rule", "A0"}, {"scheme", l->scheme}, {"A", print(l->a)}};
        if (l->scheme <= 2) j["B"] = print(l->b);
        if (l->scheme == 2) j["C"] = print(l->c);
      } else if (const auto* l = std::get_if<AxiomA1>(&line)) {
        j = {{"rule", "A1"}, {"s", print(l->s)}, {"t", print(l->t)}, {"F", print(l->f)}, {"G", print(l->g)}};
      } else if (const auto* l = std::get_if<AxiomA2>(&line)) {
        json asserts = json::array();
        for (const auto& [t, f] : l->asserts) asserts.push_back({{"t", print(t)}, {"F", print(f)}});
        j = {{"rule", "A2"}, {"asserts", std::move(asserts)}, {"F", print(l->f)}, {"G", print(l->g)}};
      } else if (const auto* l = std::get_if<AxiomA3>(&line)) {
        j = {{"rule", "A3"}, {"t", print(l->t)}, {"F", print(l->f)}};
      } else if (const auto* l = std::get_if<AxiomA4>(&line)) {
        j = {{"rule", "A4"}, {"s", print(l->s)}, {"t", print(l->t)}};
      } else {
        const auto& mp = std::get<ModusPonens>(line);
        j = {{"rule", "MP"}, {"major", mp.major}, {"minor", mp.minor}};
      }
      arr.push_back(std::move(j));
    }
    return arr;
  }

  std::vector<ProofLine> proofFromJson(const json& j) {
    if (!j.is_array()) throw FormatError("a proof must be a JSON array of lines");
    auto term = [](const json& o, const char* key) { return parseTerm(text(field(o, key), key)); };
    auto formula = [](const json& o, const char* key) { return parseFormula(text(field(o, key), key)); };
    auto index = [](const json& o, const char* key) {
      const json& v = field(o, key);
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw FormatError(std::string("'") + key + "' must be a non-negative integer");
      return v.get<std::size_t>();
    };
    std::vector<ProofLine> lines;
    for (const json& o : j) {
      const std::string rule = text(field(o, "rule"), "rule");
      if (rule == "A0") {
        AxiomA0 l;
        l.scheme = static_cast<int>(index(o, "scheme"));
        if (l.scheme < 1 || l.scheme > 3) throw FormatError("A0 scheme must be 1, 2 or 3");
        l.a = formula(o, "A");
        if (l.scheme <= 2) l.b = formula(o, "B");
        if (l.scheme == 2) l.c = formula(o, "C");
        lines.emplace_back(std::move(l));
      } else if (rule == "A1") {
        lines.emplace_back(AxiomA1{term(o, "s"), term(o, "t"), formula(o, "F"), formula(o, "G")});
      } else if (rule == "A2") {
        AxiomA2 l;
        const json& asserts = field(o, "asserts");
        if (!asserts.is_array()) throw FormatError("'asserts' must be an array");
        for (const json& a : asserts) l.asserts.emplace_back(term(a, "t"), formula(a, "F"));
        l.f = formula(o, "F");
        l.g = formula(o, "G");
        lines.emplace_back(std::move(l));
      } else if (rule == "A3") {
        lines.emplace_back(AxiomA3{term(o, "t"), formula(o, "F")});
      } else if (rule == "A4") {
        lines.emplace_back(AxiomA4{term(o, "s"), term(o, "t")});
      } else if (rule == "MP") {
        lines.emplace_back(ModusPonens{index(o, "major"), index(o, "minor")});
      } else {
        throw FormatError("unknown rule '" + rule + "'");
      }
    }
    return lines;
  }

  // --- certificates ----------------------------------------------------------

  namespace {

    const char* kindName(CertNode::Kind k) {
      switch (k) {
        case CertNode::Kind::Branch:
          return "branch";
        case CertNode::Kind::Failed:
          return "failed";
        case CertNode::Kind::NotUnifiable:
          return "not-unifiable";
        case CertNode::Kind::Success:
          return "success";
      }
      return "?";
    }

    json nodeToJson(const CertNode& n) {
      json j;
      json steps = json::array();
      for (const CertStep& s : n.steps) {
        json step = {{"block", s.block}};
        if (s.block == 3) {
          json justVars = json::array();
          step["domain"] = varList(s.domain, justVars);
          step["justVars"] = std::move(justVars);
        }
        steps.push_back(std::move(step));
      }
      j["steps"] = std::move(steps);
      j["kind"] = kindName(n.kind);
      if (n.target) j["target"] = print(*n.target);
      if (n.witness) j["witness"] = print(*n.witness);
      if (n.kind == CertNode::Kind::Branch) {
        json children = json::array();
        for (const CertNode& c : n.children) children.push_back(nodeToJson(c));
        j["children"] = std::move(children);
      }
      return j;
    }

    CertNode nodeFromJson(const json& j) {
      CertNode n;
      const json& steps = field(j, "steps");
      if (!steps.is_array()) throw FormatError("'steps' must be an array");
      for (const json& s : steps) {
        const json& b = field(s, "block");
        if (!b.is_number_integer()) throw FormatError("'block' must be an integer");
        CertStep step{b.get<int>(), {}};
        if (auto it = s.find("domain"); it != s.end()) step.domain = readVarList(*it, justNames(s));
        n.steps.push_back(std::move(step));
      }
      const std::string kind = text(field(j, "kind"), "kind");
      if (kind == "branch") n.kind = CertNode::Kind::Branch;
      else if (kind == "failed") n.kind = CertNode::Kind::Failed;
      else if (kind == "not-unifiable") n.kind = CertNode::Kind::NotUnifiable;
      else if (kind == "success") n.kind = CertNode::Kind::Success;
      else throw FormatError("unknown node kind '" + kind + "'");
      if (auto it = j.find("target"); it != j.end()) n.target = formulaFromJson(*it);
      if (auto it = j.find("witness"); it != j.end()) n.witness = formulaFromJson(*it);
      if (auto it = j.find("children"); it != j.end()) {
        if (!it->is_array()) throw FormatError("'children' must be an array");
        for (const json& c : *it) n.children.push_back(nodeFromJson(c));
      }
      return n;
    }

  } // namespace

  json certificateToJson(const Certificate& cert) {
    return {{"schema", kSchemaVersion}, {"formula", print(cert.formula)}, {"root", nodeToJson(cert.root)}};
  }

  Certificate certificateFromJson(const json& j) {
    try {
      return Certificate{formulaFromJson(field(j, "formula")), nodeFromJson(field(j, "root"))};
    } catch (const FormatError& e) {
      throw MalformedCertificate(e.what());
    } catch (const ParseError& e) {
      throw MalformedCertificate(e.what());
    } catch (const SortClash& e) {
      throw MalformedCertificate(e.what());
    }
  }

} // namespace jref
