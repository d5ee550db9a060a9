#include "etf/proof_script.hpp"

#include <map>

#include "json.hpp"

namespace etf::kernel {

using json = nlohmann::json;
using syntax::Formula;
using syntax::Sort;
using syntax::Term;

namespace {

bool is_binder_rule(Rule r) { return r == Rule::Gen || r == Rule::ExRule || r == Rule::GenImp; }

// Witness position for rules that accept a term or a function variable.
bool takes_witness(Rule r) {
  return r == Rule::Inst || r == Rule::InstF || r == Rule::ExIntro || r == Rule::InstAx || r == Rule::ExAx;
}

int get_ref(const json& args, const char* key) {
  if (!args.contains(key) || !args[key].is_number_integer())
    throw ScriptError(std::string("missing integer argument '") + key + "'");
  return args[key].get<int>();
}

std::string get_string(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw ScriptError(std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

template <class F>
auto parsing(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const syntax::SyntaxError& e) {
    throw ScriptError(what + ": " + e.what());
  } catch (const syntax::SortError& e) {
    throw ScriptError(what + ": " + e.what());
  } catch (const syntax::UnboundVariable& e) {
    throw ScriptError(what + ": " + e.what());
  }
}

RuleArgs parse_args(Rule rule, const json& args, const syntax::Context& ctx, int id) {
  RuleArgs out;
  const std::string where = "step " + std::to_string(id);
  switch (rule) {
    case Rule::Axiom: out.name = get_string(args, "name"); break;
    case Rule::Taut:
      if (args.contains("premises")) {
        if (!args["premises"].is_array()) throw ScriptError(where + ": 'premises' must be an array");
        for (const auto& p : args["premises"]) {
          if (!p.is_number_integer()) throw ScriptError(where + ": premise ids must be integers");
          out.refs.push_back(p.get<int>());
        }
      }
      break;
    case Rule::MP: out.refs = {get_ref(args, "minor"), get_ref(args, "major")}; break;
    case Rule::Trans: out.refs = {get_ref(args, "left"), get_ref(args, "right")}; break;
    case Rule::Sym:
    case Rule::Cong: out.refs = {get_ref(args, "of")}; break;
    default:
      if (is_binder_rule(rule) || rule == Rule::Inst || rule == Rule::InstF || rule == Rule::ExIntro)
        out.refs = {get_ref(args, "of")};
      break;
  }
  if (is_binder_rule(rule)) out.name = get_string(args, "var");
  if (takes_witness(rule)) {
    if (args.contains("term") == args.contains("fvar"))
      throw ScriptError(where + ": give exactly one of 'term' and 'fvar'");
    if (args.contains("term"))
      out.term = parsing(where, [&] { return syntax::parse_term(get_string(args, "term"), ctx); });
    else
      out.name = get_string(args, "fvar");
  }
  if (rule == Rule::Refl) out.term = parsing(where, [&] { return syntax::parse_term(get_string(args, "term"), ctx); });
  if (rule == Rule::Cong)
    out.term = parsing(where, [&] { return syntax::parse_context_term(get_string(args, "context"), ctx); });
  return out;
}

json args_json(const ProofStep& st) {
  json a = json::object();
  const auto& r = st.args.refs;
  auto ref = [&](std::size_t i) { return i < r.size() ? json(r[i]) : json(nullptr); };
  switch (st.rule) {
    case Rule::Axiom: a["name"] = st.args.name; break;
    case Rule::Taut: a["premises"] = r; break;
    case Rule::MP:
      a["minor"] = ref(0);
      a["major"] = ref(1);
      break;
    case Rule::Trans:
      a["left"] = ref(0);
      a["right"] = ref(1);
      break;
    case Rule::InstAx:
    case Rule::ExAx:
    case Rule::Refl:
    case Rule::Leibniz: break;
    default: a["of"] = ref(0); break;
  }
  if (is_binder_rule(st.rule)) a["var"] = st.args.name;
  if (takes_witness(st.rule)) {
    if (st.args.term)
      a["term"] = syntax::print(*st.args.term);
    else
      a["fvar"] = st.args.name;
  }
  if (st.rule == Rule::Refl && st.args.term) a["term"] = syntax::print(*st.args.term);
  if (st.rule == Rule::Cong && st.args.term) a["context"] = syntax::print(*st.args.term);
  return a;
}

}  // namespace

ProofScript parse_script(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ScriptError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ScriptError("script must be a JSON object");
  ProofScript s;
  try {
    if (j.contains("context")) {
      for (const auto& d : j["context"]) {
        s.context.declare(get_string(d, "name"), syntax::parse_sort(get_string(d, "sort")));
      }
    }
    // the reserved arithmetic names are in scope unless declared otherwise
    for (const auto& [n, srt] : theories::defined_signature())
      if (!s.context.contains(n)) s.context.declare(n, srt);
    s.theory = theories::parse_theory_id(j.value("theory", std::string("ETF")));
  } catch (const std::invalid_argument& e) {
    throw ScriptError(e.what());
  } catch (const syntax::SyntaxError& e) {
    throw ScriptError(std::string("context: ") + e.what());
  } catch (const syntax::SortError& e) {
    throw ScriptError(std::string("context: ") + e.what());
  } catch (const json::exception& e) {
    throw ScriptError(std::string("context: ") + e.what());
  }
  if (j.contains("premises")) {
    for (const auto& p : j["premises"]) {
      if (!p.is_string()) throw ScriptError("premise names must be strings");
      s.premises.push_back(p.get<std::string>());
    }
  }
  s.goal = parsing("goal", [&] { return syntax::desugar(syntax::parse_formula(get_string(j, "goal"), s.context)); });
  if (!j.contains("steps") || !j["steps"].is_array()) throw ScriptError("missing 'steps' array");
  for (const auto& js : j["steps"]) {
    ProofStep st;
    if (!js.contains("id") || !js["id"].is_number_integer()) throw ScriptError("step without integer 'id'");
    st.id = js["id"].get<int>();
    const std::string where = "step " + std::to_string(st.id);
    try {
      st.rule = parse_rule(get_string(js, "rule"));
    } catch (const std::invalid_argument& e) {
      throw ScriptError(where + ": " + e.what());
    }
    st.formula = parsing(where, [&] { return syntax::desugar(syntax::parse_formula(get_string(js, "formula"), s.context)); });
    st.args = parse_args(st.rule, js.value("args", json::object()), s.context, st.id);
    s.steps.push_back(std::move(st));
  }
  return s;
}

std::string to_json(const ProofScript& script, int indent) {
  json j;
  j["context"] = json::array();
  for (const auto& [n, srt] : script.context.declarations())
    j["context"].push_back({{"name", n}, {"sort", syntax::to_string(srt)}});
  j["theory"] = theories::to_string(script.theory);
  j["premises"] = script.premises;
  j["goal"] = syntax::print(script.goal);
  j["steps"] = json::array();
  for (const auto& st : script.steps) {
    j["steps"].push_back(
        {{"id", st.id}, {"formula", syntax::print(st.formula)}, {"rule", to_string(st.rule)}, {"args", args_json(st)}});
  }
  return j.dump(indent);
}

CheckResult check_script(const ProofScript& script) {
  std::vector<theories::Statement> prem;
  for (const auto& name : script.premises) {
    auto p = theories::lookup_premise(name);
    if (!p) {
      CheckResult r;
      r.error = ErrorKind::AxiomUnknown;
      r.message = "unknown premise '" + name + "'";
      return r;
    }
    prem.push_back(*p);
  }
  return check_proof(theories::axioms_of(script.theory), prem, script.steps, script.goal, &script.context);
}

syntax::Context infer_context(const Formula& goal, const std::vector<ProofStep>& steps) {
  syntax::Context ctx;
  auto add = [&](const syntax::FreeVars& fv) {
    for (const auto& [n, s] : fv) ctx.declare(n, s);
  };
  add(syntax::free_vars(goal));
  std::map<int, const Formula*> by_id;
  for (const auto& st : steps) {
    add(syntax::free_vars(st.formula));
    if (st.args.term) {
      if (st.rule == Rule::Cong)
        add(syntax::free_vars(syntax::fill_hole(*st.args.term, Term::zero())));
      else
        add(syntax::free_vars(*st.args.term));
    }
    if (takes_witness(st.rule) && !st.args.term && !st.args.name.empty()) {
      const Formula* q = nullptr;
      if (st.rule == Rule::InstF || st.rule == Rule::Inst) {
        if (!st.args.refs.empty() && by_id.count(st.args.refs[0])) q = by_id[st.args.refs[0]];
      } else if (st.rule == Rule::ExIntro) {
        q = &st.formula;
      } else if (st.formula.kind() == Formula::Kind::Implies) {
        q = st.rule == Rule::InstAx ? &st.formula.left() : &st.formula.right();
      }
      if (q && q->is_quantifier()) ctx.declare(st.args.name, q->sort());
    }
    by_id[st.id] = &st.formula;
  }
  return ctx;
}

}  // namespace etf::kernel
